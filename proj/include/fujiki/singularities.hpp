#pragma once

#include <array>
#include <string>

#include "fujiki/fixedpoints.hpp"

namespace fujiki {

// Counts of isolated quotient singularities of the dimension-4 variety, by
// analytic type.  a_k is the cyclic type of order k; b4 and b6 are the two
// non-cyclic binary types.
struct SingularityProfile {
    long a2 = 0, a3 = 0, a4 = 0, a6 = 0, a8 = 0, a12 = 0, b4 = 0, b6 = 0;

    bool operator==(const SingularityProfile& o) const = default;
    std::array<long, 7> table_row() const { return {a2, a3, a4, a6, a8, b4, b6}; }
};

// "a2=28,a4=6": the nonzero entries in table order, "-" when none.  a12 is
// reported like the others if it ever comes out nonzero.
std::string profile_string(const SingularityProfile& p);

struct RareCounts {
    long a8 = 0, a12 = 0, b4 = 0, b6 = 0;
};
struct MidCounts {
    long a4 = 0, a6 = 0;
};
struct CommonCounts {
    long a2 = 0, a3 = 0;
};

// The three layers of the census, from the rarest configurations to the
// most frequent.  All divisions are exact; integrality is asserted.
RareCounts count_rare(TranslateCache& cache);
MidCounts count_mid(TranslateCache& cache);
CommonCounts count_common(TranslateCache& cache);

// Full census for an input whose group has element orders in {1,2,3,4,6}
// and is a curated admissible symplectic action (the caller vouches via the
// flag; it is not derivable from the abstract group).  Throws
// std::invalid_argument when either condition fails.
SingularityProfile singularity_profile(const FujikiInput& in, bool curated_admissible);

}  // namespace fujiki
