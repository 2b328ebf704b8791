#include "fujiki/invariants.hpp"

#include <cassert>
#include <set>
#include <stdexcept>

namespace fujiki {

long betti_two(long invariant_rank, long divisor_count) {
    assert(invariant_rank >= 0 && divisor_count >= 0);
    return invariant_rank + divisor_count;
}

EulerData euler_data(const SingularityProfile& p, long b2, long b3) {
    if (p.a12 != 0) throw std::invalid_argument("no defect value for a12 points");
    // per point: -(n-1) for the cyclic types, -(n+2) for the dihedral ones
    long s = -(p.a2 + 2 * p.a3 + 3 * p.a4 + 5 * p.a6 + 7 * p.a8 + 4 * p.b4 + 5 * p.b6);
    EulerData e;
    e.s = s;
    e.b4 = 46 + 10 * b2 - b3 + s;
    e.chi = 48 + 12 * b2 - 3 * b3 + s;
    return e;
}

ChernData chern_data(const SingularityProfile& p, const EulerData& e) {
    ChernData c;
    // c4 = chi - sum over singular points of (1 - 1/|stabilizer|)
    c.c4 = Rational(e.chi) - Rational(p.a2, 2) - Rational(2 * p.a3, 3) -
           Rational(3 * p.a4, 4) - Rational(5 * p.a6, 6) - Rational(7 * p.a8, 8) -
           Rational(7 * p.b4, 8) - Rational(11 * p.b6, 12);
    c.s0 = Rational(p.a2, 32) + Rational(2 * p.a3, 27) + Rational(9 * p.a4, 64) +
           Rational(329 * p.a6, 864) + Rational(41 * p.a8, 128) +
           Rational(25 * p.b4, 128) + Rational(545 * p.b6, 1728);
    c.c2sq = Rational(720) - Rational(240) * c.s0 + c.c4 / Rational(3);
    return c;
}

Rational verification_radicand(const Rational& multiplier, const ChernData& c) {
    return multiplier * (Rational(7) * c.c2sq - Rational(4) * c.c4) / Rational(15);
}

VerificationResult verify_square(const Rational& multiplier, const ChernData& c) {
    VerificationResult r;
    r.radicand = verification_radicand(multiplier, c);
    r.root = rational_root(r.radicand, 2);
    r.ok = r.root.has_value();
    // num*den has the same squarefree part as the radicand viewed in Q*/Q*^2
    cpp_int prod = r.radicand.num() * r.radicand.den();
    r.squarefree = prod > 0 ? squarefree_part(prod) : cpp_int(0);
    return r;
}

cpp_int fujiki_coefficient(const cpp_int& group_order, int n) {
    if (n < 2) throw std::invalid_argument("fujiki_coefficient needs n >= 2");
    auto factorial = [](int k) {
        cpp_int f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    };
    // (2n)! |G| / (n! 2^n) * (|G|^(2n-3) ((n-1)!)^2)^n
    cpp_int lead_num = factorial(2 * n) * group_order;
    cpp_int lead_den = factorial(n) * (cpp_int(1) << n);
    assert(lead_num % lead_den == 0);
    cpp_int fn1 = factorial(n - 1);
    cpp_int inner = boost::multiprecision::pow(group_order, 2 * n - 3) * fn1 * fn1;
    return (lead_num / lead_den) * boost::multiprecision::pow(inner, unsigned(n));
}

cpp_int quotient_multiplier(const cpp_int& subgroup_order, int n) {
    if (n < 2) throw std::invalid_argument("quotient_multiplier needs n >= 2");
    return boost::multiprecision::pow(subgroup_order, 2 * n - 1);
}

const std::vector<SeriesRow>& series_rows() {
    static const std::vector<SeriesRow> rows = [] {
        // {name, order, invariant lattice rank}; b2 = rank + 1
        const struct {
            const char* name;
            long order, rank;
        } raw[] = {
            {"C2", 2, 14},    {"C3", 3, 10},    {"C2^2", 4, 10},  {"C4", 4, 8},
            {"C5", 5, 6},     {"C6", 6, 6},     {"C7", 7, 4},     {"C2^3", 8, 8},
            {"C2xC4", 8, 6},  {"C8", 8, 4},     {"C3^2", 9, 6},   {"C2xC6", 12, 4},
            {"C2^4", 16, 7},  {"C4^2", 16, 4},
        };
        std::vector<SeriesRow> out;
        for (const auto& r : raw)
            out.push_back({r.name, r.order, r.rank, r.rank + 1});
        return out;
    }();
    return rows;
}

SeriesSeparation series_separation(int max_n) {
    if (max_n < 3) throw std::invalid_argument("series separation starts at n = 3");
    const auto& rows = series_rows();
    SeriesSeparation sep;
    sep.max_n = max_n;
    sep.all_irrational = true;
    std::set<std::pair<cpp_int, cpp_int>> seen;
    for (size_t i = 0; i < rows.size(); ++i) {
        for (size_t j = i + 1; j < rows.size(); ++j) {
            if (rows[i].b2 != rows[j].b2) continue;
            sep.pairs.emplace_back(rows[i].name, rows[j].name);
            long lo = std::min(rows[i].order, rows[j].order);
            long hi = std::max(rows[i].order, rows[j].order);
            Rational frac(lo, hi);
            if (seen.insert({frac.num(), frac.den()}).second) sep.fractions.push_back(frac);
            // ratio 1 would defeat the argument; the table never produces it
            assert(frac.num() != frac.den());
            for (int k = 3; k <= max_n; ++k) {
                bool rational_k = is_perfect_kth_power(frac.num(), k) &&
                                  is_perfect_kth_power(frac.den(), k);
                if (rational_k) sep.all_irrational = false;
            }
        }
    }
    return sep;
}

}  // namespace fujiki
