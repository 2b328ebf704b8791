#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fujiki/rational.hpp"
#include "fujiki/singularities.hpp"

namespace fujiki {

// Second Betti number of the fourfold: rank of the invariant lattice of the
// surface action plus one class per exceptional divisor of the resolution.
long betti_two(long invariant_rank, long divisor_count);

struct EulerData {
    long s = 0;    // defect contributed by the singular points
    long b4 = 0;   // fourth Betti number
    long chi = 0;  // topological Euler characteristic
};

// Riemann-Roch constraints tie b4 and chi to b2, b3 and the defect.  b3
// vanishes for every catalog quotient; the parameter covers external rows.
// Throws std::invalid_argument when the profile has a12 != 0 (no defect
// value is available for that type).
EulerData euler_data(const SingularityProfile& p, long b2, long b3 = 0);

struct ChernData {
    Rational c4;    // top Chern number of the resolution
    Rational s0;    // weighted point count entering the c2^2 relation
    Rational c2sq;  // c2^2
};

ChernData chern_data(const SingularityProfile& p, const EulerData& e);

// multiplier * (7 c2^2 - 4 c4) / 15.  For a correct census this must be the
// square of a rational; the standard multiplier is 3|G|.
Rational verification_radicand(const Rational& multiplier, const ChernData& c);

struct VerificationResult {
    Rational radicand;
    std::optional<Rational> root;  // square root when it is rational
    cpp_int squarefree;            // squarefree part of num*den, diagnosis aid
    bool ok = false;               // root.has_value()
};

VerificationResult verify_square(const Rational& multiplier, const ChernData& c);

// Fujiki constant of the 2n-dimensional quotient construction:
//   (2n)! |G| / (n! 2^n) * (|G|^(2n-3) ((n-1)!)^2)^n
cpp_int fujiki_coefficient(const cpp_int& group_order, int n);

// A further quotient by a group of order h multiplies the constant by h^(2n-1).
cpp_int quotient_multiplier(const cpp_int& subgroup_order, int n);

// Dimension >= 6 families: one row per group acting purely symplectically,
// with rank the invariant lattice rank of the surface action and
// b2 = rank + 1 (a single divisor class survives in high dimension).
struct SeriesRow {
    std::string name;
    long order = 0;
    long invariant_rank = 0;
    long b2 = 0;
};

const std::vector<SeriesRow>& series_rows();

// Distinguishes equal-b2 series rows pairwise: the Fujiki constants differ by
// the factor (|G1|/|G2|)^(2n-3) * n-th-power terms, so it suffices that the
// k-th root of the reduced order ratio is irrational for every k in
// [3, max_n].  `fractions` lists the distinct reduced ratios < 1.
struct SeriesSeparation {
    std::vector<std::pair<std::string, std::string>> pairs;
    std::vector<Rational> fractions;
    int max_n = 0;
    bool all_irrational = false;
};

SeriesSeparation series_separation(int max_n = 10);

}  // namespace fujiki
