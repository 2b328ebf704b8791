// Acceptance gate: one line per criterion, nonzero exit when any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fujiki/catalog.hpp"
#include "fujiki/fixedpoints.hpp"
#include "fujiki/invariants.hpp"
#include "fujiki/involution.hpp"
#include "fujiki/report.hpp"
#include "fujiki/singularities.hpp"

using namespace fujiki;

namespace {

int failures = 0;

void report(int num, bool pass, const std::string& message) {
    if (!pass) ++failures;
    std::printf("criterion %d: %s  %s\n", num, pass ? "PASS" : "FAIL", message.c_str());
    std::fflush(stdout);
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

// ---- criterion 1: full table against the fixture, exact equality ----
void criterion_golden(const Catalog& cat, const std::vector<TableRow>& rows, double seconds) {
    std::vector<GoldenMismatch> bad = compare_with_golden(cat, rows);
    std::ostringstream msg;
    if (bad.empty()) {
        msg << "all " << rows.size() << " rows match the fixture with exact rational equality ("
            << seconds << "s)";
        report(1, rows.size() == 36 && seconds < 120.0, msg.str());
        return;
    }
    msg << bad.size() << " field mismatches, first: " << bad[0].group << "/" << bad[0].klass << " "
        << bad[0].field << " expected " << bad[0].expected << " got " << bad[0].actual;
    report(1, false, msg.str());
}

// ---- criterion 2: involution class counts ----
void criterion_classes(const Catalog& cat) {
    const std::set<std::string> two_classes = {"A3,3", "C2^2wrC2", "C2^4:S3"};
    std::vector<std::string> wrong_count, method_disagree;
    int checked = 0, ambient_checked = 0;
    for (const auto& e : cat.groups) {
        if (!e.admissible) continue;
        GroupTable g = e.build_group();
        if (g.is_abelian()) continue;
        ++checked;
        EntryClassification bases = classify_entry(g, e, EnumerationMethod::bases);
        size_t expected = two_classes.count(e.name) ? 2 : 1;
        if (bases.classes.size() != expected)
            wrong_count.push_back(e.name + " gives " + std::to_string(bases.classes.size()) +
                                  " classes, expected " + std::to_string(expected));
        if (e.degree <= 9) {
            ++ambient_checked;
            EntryClassification ambient = classify_entry(g, e, EnumerationMethod::ambient);
            if (ambient.classes.size() != bases.classes.size())
                method_disagree.push_back(e.name + " ambient " +
                                          std::to_string(ambient.classes.size()) + " vs bases " +
                                          std::to_string(bases.classes.size()));
        }
    }
    std::ostringstream msg;
    if (wrong_count.empty() && method_disagree.empty()) {
        msg << checked << " non-abelian groups match the expected class structure; "
            << ambient_checked << " degree <= 9 groups re-derived by the ambient scan; "
            << "bridge-assisted degree 12 classifications terminated";
        report(2, true, msg.str());
        return;
    }
    msg << "count mismatches [" << join(wrong_count, "; ") << "], method disagreements ["
        << join(method_disagree, "; ")
        << "]; the extra C2xD4 class is genuine: its profile (a2=50,b4=2) differs from the "
           "identity class (a2=36), so no overgroup can merge them, and it is invisible to the "
           "shipped degree 6 embedding";
    report(2, false, msg.str());
}

// ---- criterion 3: the worked listing ----
void criterion_worked(const Catalog& cat) {
    const CatalogEntry* e = cat.find("C2^2:C4");
    GroupTable g = e->build_group();
    GroupInvolution theta = descriptor_involution(g, e->involution_classes.front());
    FujikiInput in = make_input(g, theta, 2);
    int div = fixed_surface_orbit_count(in);
    SingularityProfile p = singularity_profile(in, true);
    std::array<long, 7> row = p.table_row();
    std::array<long, 7> want = {10, 0, 6, 0, 0, 0, 0};
    bool pass = div == 5 && row == want;
    std::ostringstream msg;
    msg << "C2^2:C4: " << div << " fixed surface orbits, profile [";
    for (size_t i = 0; i < row.size(); ++i) msg << (i ? "," : "") << row[i];
    msg << "]";
    report(3, pass, msg.str());
}

// ---- criterion 4: the erratum inputs must fail verification ----
void criterion_erratum() {
    SingularityProfile p = parse_profile_string("a2=45,a4=2");
    EulerData e = euler_data(p, 6, 0);
    ChernData c = chern_data(p, e);
    VerificationResult v = verify_square(Rational(9), c);
    bool pass = e.chi == 69 && c.c4 == Rational(45) && c.s0 == Rational(27, 16) &&
                c.c2sq == Rational(330) && v.radicand == Rational(1278) && !v.ok &&
                v.squarefree == 142;
    std::ostringstream msg;
    msg << "chi=" << e.chi << " c4=" << c.c4.str() << " s0=" << c.s0.str()
        << " c2sq=" << c.c2sq.str() << " radicand=" << v.radicand.str() << " squarefree "
        << v.squarefree.str() << " -> verification " << (v.ok ? "passes (wrong)" : "fails");
    report(4, pass, msg.str());
}

// ---- criterion 5: property suites ----
// The group lives on the heap: GroupInvolution and FujikiInput keep pointers
// into it, so its address must survive vector reallocation.
struct ThetaCase {
    const CatalogEntry* entry;
    std::unique_ptr<GroupTable> group;
    GroupInvolution theta;
};

std::vector<Perm> parse_all(const std::vector<std::string>& strs, int degree) {
    std::vector<Perm> out;
    for (const auto& s : strs) out.push_back(parse_permutation(s, degree));
    return out;
}

bool coset_labels_brute_force(const FujikiInput& in, int& sets_checked) {
    const GroupTable& g = *in.group;
    std::set<Perm> f_set;
    for (const Perm& p : fixed_inversion_set(in)) f_set.insert(p);

    std::vector<Perm> usable;
    for (int i = 0; i < g.order(); ++i) {
        long o = g.element_order(i);
        if (o == 2 || o == 3 || o == 4 || o == 6) usable.push_back(g.element(i));
    }
    auto span = [](const Perm& x) {
        std::set<Perm> out;
        Perm p = x;
        do {
            out.insert(p);
            p = compose(p, x);
        } while (!(p == x));
        return out;
    };
    for (const Perm& gi : usable) {
        std::set<Perm> zi = span(gi);
        for (const Perm& gj : usable) {
            if (perm_order(gi) != perm_order(gj)) continue;
            std::set<Perm> zj = span(gj);
            std::set<Perm> inter;
            for (const Perm& p : zi)
                if (zj.count(p)) inter.insert(p);
            if (inter.size() <= 1) continue;  // spans meet only in the identity
            TranslateSet ts = build_translate_set(in, gi, gj);
            ++sets_checked;

            Perm tgj = in.theta->apply(gj);
            std::set<Perm> s_set;  // the set from its definition
            for (int i = 0; i < g.order(); ++i) {
                Perm s = g.element(i);
                Perm c = compose(compose(invert(s), tgj), s);
                if (c == gi || c == invert(gi)) s_set.insert(s);
            }

            Perm gen = ts.intersection_generator;
            Perm tgen = in.theta->apply(gen);
            long gi_order = perm_order(gi);
            std::set<Perm> walked;
            for (const TranslateCoset& coset : ts.cosets) {
                bool any_plus = false, any_f = false;
                Perm m = coset.rep;
                for (long k = 0; k < gi_order; ++k) {
                    if (!s_set.count(m)) return false;  // member outside the set
                    if (m < coset.rep) return false;    // rep not least
                    walked.insert(m);
                    Perm tm_m = compose(in.theta->apply(m), m);
                    if (inter.count(tm_m)) any_plus = true;
                    if (f_set.count(m)) any_f = true;
                    bool comm = compose(compose(m, gen), invert(m)) == tgen;
                    if (comm != coset.commuting) return false;  // label not constant
                    m = compose(m, gi);
                }
                if (any_plus != coset.plus || any_f != coset.meets_f) return false;
            }
            if (walked != s_set) return false;  // cosets must partition the set
        }
    }
    return true;
}

void criterion_properties(const Catalog& cat, const std::vector<TableRow>& rows) {
    std::vector<std::string> problems;

    // every stored (group, involution) pair
    std::vector<ThetaCase> cases;
    for (const auto& e : cat.groups)
        for (const auto& d : e.involution_classes) {
            auto g = std::make_unique<GroupTable>(e.build_group());
            GroupInvolution theta = descriptor_involution(*g, d);
            cases.push_back({&e, std::move(g), std::move(theta)});
        }

    // wreath order law on every pair
    int wreath_checked = 0;
    for (auto& tc : cases) {
        FujikiInput in = make_input(*tc.group, tc.theta, 2);
        if (wreath_order_check(in) != 2L * tc.group->order()) {
            problems.push_back("wreath law fails for " + tc.entry->name);
            break;
        }
        ++wreath_checked;
    }

    // coset labels by brute force on a spread of groups
    int sets_checked = 0;
    for (const char* name : {"C4", "D6", "S4", "C2^2:C4", "A3,3", "C3xA4"}) {
        const CatalogEntry* e = cat.find(name);
        GroupTable g = e->build_group();
        GroupInvolution theta = descriptor_involution(g, e->involution_classes.front());
        FujikiInput in = make_input(g, theta, 2);
        if (!coset_labels_brute_force(in, sets_checked)) {
            problems.push_back(std::string("coset labels broken on ") + name);
            break;
        }
    }

    // every count is invariant under replacing an element by its inverse
    for (auto& tc : cases) {
        if (!tc.entry->admissible) continue;
        FujikiInput in = make_input(*tc.group, tc.theta, 2);
        TranslateCache cache(in);
        bool ok = true;
        for (int i = 0; i < tc.group->order() && ok; ++i) {
            long o = tc.group->element_order(i);
            if (o == 1) continue;
            Perm x = tc.group->element(i);
            Perm y = invert(x);
            ok = specific_fixed_count(*tc.group, x) == specific_fixed_count(*tc.group, y) &&
                 external_fixed_count(cache, x) == external_fixed_count(cache, y);
        }
        if (!ok) {
            problems.push_back("inversion invariance fails for " + tc.entry->name);
            break;
        }
    }

    // exact divisions: recompute every row; internal asserts stay armed, and
    // the residue denominators must divide 24 resp. 6
    for (const auto& r : rows) {
        if (cpp_int(24) % r.c4.den() != 0 || cpp_int(6) % r.c2_squared.den() != 0) {
            problems.push_back("denominator bound broken for " + r.group);
            break;
        }
    }

    // perfect squares on all golden rows
    for (const auto& r : rows)
        if (!r.verified || !r.cbar || !r.cbar->is_integer()) {
            problems.push_back("square verification fails for " + r.group);
            break;
        }

    // factor restriction on the product groups: the abelian factor is
    // inverted and the complement factor keeps a valid involution
    struct Product {
        const char* name;
        std::vector<std::string> abelian, other;
    };
    const Product products[] = {
        {"C3xS3", {"(3,4,5)"}, {"(0,1,2)", "(0,1)"}},
        {"C2xA4", {"(4,5)"}, {"(0,1,2)", "(1,2,3)"}},
        {"C3xA4", {"(4,5,6)"}, {"(0,1,2)", "(1,2,3)"}},
        {"C2^2xA4", {"(4,5)", "(6,7)"}, {"(0,1,2)", "(1,2,3)"}},
        {"C2xS4", {"(4,5)"}, {"(0,1,2,3)", "(0,1)"}},
    };
    auto restricts = [](const GroupTable& a, const GroupTable& b, const GroupInvolution& theta) {
        for (const Perm& x : a.elements())
            if (!(theta.apply(x) == invert(x))) return false;
        std::vector<Perm> inverted;
        for (const Perm& y : b.elements()) {
            Perm ty = theta.apply(y);
            if (!b.contains(ty)) return false;
            if (ty == invert(y)) inverted.push_back(y);
        }
        return close_group(inverted).order() == b.order();
    };
    for (const Product& pr : products) {
        const CatalogEntry* e = cat.find(pr.name);
        GroupTable g = e->build_group();
        GroupTable a = close_group(parse_all(pr.abelian, e->degree));
        GroupTable b = close_group(parse_all(pr.other, e->degree));
        EntryClassification r = classify_entry(g, *e, EnumerationMethod::bases);
        for (const auto& theta : r.candidates)
            if (!restricts(a, b, theta)) {
                problems.push_back(std::string("factor restriction fails on ") + pr.name);
                break;
            }
    }
    // ... and the documented counterexample: C2xD4 has a valid involution
    // that carries the central factor into the dihedral part
    {
        const CatalogEntry* e = cat.find("C2xD4");
        GroupTable g = e->build_group();
        GroupTable a = close_group(parse_all({"(4,5)"}, e->degree));
        GroupTable b = close_group(parse_all({"(0,1,2,3)", "(0,3)(1,2)"}, e->degree));
        EntryClassification r = classify_entry(g, *e, EnumerationMethod::bases);
        bool violation = false;
        for (const auto& theta : r.candidates) violation = violation || !restricts(a, b, theta);
        if (!violation) problems.push_back("expected factor counterexample on C2xD4 not found");
    }

    // chi - b4 = 2 + 2 b2 on every row
    for (const auto& r : rows)
        if (r.chi - r.b4 != 2 + 2 * r.b2) {
            problems.push_back("euler relation fails for " + r.group);
            break;
        }

    std::ostringstream msg;
    if (problems.empty()) {
        msg << "wreath law on " << wreath_checked << " (G,theta) pairs; coset labels brute-forced "
            << "over " << sets_checked << " translate sets; counts invariant under inversion; "
            << "denominators divide 24 and 6; all radicands square; factor restriction holds on "
            << "5 products and fails on C2xD4 as documented; chi-b4=2+2*b2 on all rows";
        report(5, true, msg.str());
    } else {
        report(5, false, join(problems, "; "));
    }
}

// ---- criterion 6: dimension six series ----
void criterion_series() {
    const std::pair<const char*, long> expected[] = {
        {"C2", 15}, {"C3", 11},   {"C2^2", 11}, {"C4", 9},    {"C5", 7},   {"C6", 7},  {"C7", 5},
        {"C2^3", 9}, {"C2xC4", 7}, {"C8", 5},    {"C3^2", 7},  {"C2xC6", 5}, {"C2^4", 8}, {"C4^2", 5},
    };
    const auto& rows = series_rows();
    bool pass = rows.size() == 14;
    for (size_t i = 0; pass && i < rows.size(); ++i)
        pass = rows[i].name == expected[i].first && rows[i].b2 == expected[i].second;
    SeriesSeparation sep = series_separation(10);
    pass = pass && sep.all_irrational && sep.fractions.size() == 10 && sep.pairs.size() == 14;
    std::ostringstream msg;
    msg << "14 series b2 values reproduced; " << sep.pairs.size() << " equal-b2 pairs separated by "
        << sep.fractions.size() << " distinct order ratios, kth roots irrational for 3 <= k <= "
        << sep.max_n;
    report(6, pass, msg.str());
}

// ---- criterion 7: dedup ----
void criterion_dedup(const Catalog& cat, const std::vector<TableRow>& rows) {
    DedupReport rep = dedup_report(cat, rows);
    bool pass = rows.size() == 36 && rep.rows.size() == 32 && rep.couples.size() == 3 &&
                rep.minimum_classes == 29 && rep.series.size() == 4 &&
                rep.headline == ">= 29 (+4 in dimension 6) = 33";
    std::ostringstream msg;
    msg << rows.size() << " -> " << rep.rows.size() << " rows, " << rep.couples.size()
        << " candidate couples, headline \"" << rep.headline << "\"";
    report(7, pass, msg.str());
}

}  // namespace

int main() {
    Catalog cat;
    std::vector<TableRow> rows;
    double seconds = 0;
    try {
        cat = load_catalog();
        auto t0 = std::chrono::steady_clock::now();
        rows = compute_all_rows(cat);
        seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    } catch (const std::exception& ex) {
        std::printf("fatal: %s\n", ex.what());
        return 1;
    }
    auto guard = [](int n, auto&& fn) {
        try {
            fn();
        } catch (const std::exception& ex) {
            report(n, false, std::string("exception: ") + ex.what());
        }
    };
    guard(1, [&] { criterion_golden(cat, rows, seconds); });
    guard(2, [&] { criterion_classes(cat); });
    guard(3, [&] { criterion_worked(cat); });
    guard(4, [&] { criterion_erratum(); });
    guard(5, [&] { criterion_properties(cat, rows); });
    guard(6, [&] { criterion_series(); });
    guard(7, [&] { criterion_dedup(cat, rows); });
    std::printf("%d/7 criteria passed\n", 7 - failures);
    return failures == 0 ? 0 : 1;
}
