#pragma once

#include <map>
#include <utility>
#include <vector>

#include "fujiki/group.hpp"
#include "fujiki/involution.hpp"
#include "fujiki/perm.hpp"

namespace fujiki {

// A group with a chosen involution and the power n of the construction
// (the quotient variety has dimension 2n).
struct FujikiInput {
    const GroupTable* group = nullptr;
    const GroupInvolution* theta = nullptr;
    int n = 2;
};

// Validates that theta lives on group and n >= 2.
FujikiInput make_input(const GroupTable& group, const GroupInvolution& theta, int n = 2);

// F = { g : theta(g) = g^-1 }, sorted.
std::vector<Perm> fixed_inversion_set(const FujikiInput& in);

// Number of orbits of F under the twisted action g . h = theta(g) h g^-1.
// Each orbit is an exceptional divisor of the n = 2 quotient (n == 2
// required; throws std::invalid_argument otherwise).
int fixed_surface_orbit_count(const FujikiInput& in);

// (k4, k6): the number of cyclic subgroups of order 4 resp. 6 of g
// containing the element.
std::pair<int, int> subgroup_multiplicities(const GroupTable& g, const Perm& elt);

// Number of surface points fixed by elt and by no other nontrivial element
// of the group: 8-2k6-4k4, 6-2k6, 4, 2 for orders 2, 3, 4, 6.  Throws
// std::invalid_argument for other orders.
int specific_fixed_count(const GroupTable& g, const Perm& elt);

// One right coset rep*<g_i> of the translate set S = { s : s^-1 theta(g_j) s
// in {g_i, g_i^-1} }, with its three labels.  All labels are constant on the
// coset (rep is its least member):
//   plus:      some member s' of the coset has theta(s') s' in the
//              intersection subgroup <g_i> cap <g_j>
//   commuting: s g s^-1 = theta(g) for the intersection generator g
//   meets_f:   the coset meets F
struct TranslateCoset {
    Perm rep;
    bool plus = false;
    bool commuting = false;
    bool meets_f = false;
};

struct TranslateSet {
    Perm base_i, base_j;
    Perm intersection_generator;
    std::vector<TranslateCoset> cosets;  // sorted by rep

    int t() const { return static_cast<int>(cosets.size()); }
    // tri-state filters: -1 = any, 0 = false, 1 = true
    int count(int plus, int commuting, int meets_f) const;
};

// Builds the translate set of the pair (g_i, g_j), quotiented by <g_i>.
// Both elements must be nontrivial members of the group with equal orders
// and intersecting cyclic spans; g_i == g_j is the single-base case.
TranslateSet build_translate_set(const FujikiInput& in, const Perm& gi, const Perm& gj);

// Memoizes translate sets per (g_i, g_j) pair; one cache serves a whole
// census over the same input.
class TranslateCache {
  public:
    explicit TranslateCache(const FujikiInput& in) : in_(in) {}
    const FujikiInput& input() const { return in_; }
    const TranslateSet& at(const Perm& gi, const Perm& gj);

  private:
    FujikiInput in_;
    std::map<std::pair<int, int>, TranslateSet> memo_;
};

// One canonical generator per cyclic subgroup of order sub_order containing
// elt: the least generator x with x^(sub_order/order(elt)) = elt.  Such an
// x exists in every enclosing cyclic subgroup.
std::vector<Perm> enclosing_cyclic_generators(const GroupTable& g, const Perm& elt,
                                              long sub_order);

// N(g): number of points of S x S at which the element acts with an
// isolated fixed point contribution of its own order class, assembled from
// specific fixed counts and translate sets (orders 2, 3, 4, 6).
long external_fixed_count(const FujikiInput& in, const Perm& elt);
long external_fixed_count(TranslateCache& cache, const Perm& elt);

// n = 2 wreath product elements (x, y) -> swap?(a x, b y), used to verify
// the group closure order and as an independent oracle for the commuting
// label.
struct WreathElement {
    bool swap = false;
    Perm a, b;
    bool operator==(const WreathElement& o) const {
        return swap == o.swap && a == o.a && b == o.b;
    }
};

WreathElement wreath_embed(const FujikiInput& in, const Perm& g);  // (id; g, theta(g))
WreathElement wreath_swap(const FujikiInput& in);
WreathElement wreath_compose(const WreathElement& x, const WreathElement& y);

// Size of the closure of the embedded group together with the swap; asserts
// it equals 2|G| (theta must be an automorphism) and returns it.  n == 2.
long wreath_order_check(const FujikiInput& in);

// For n >= 3 the construction is primitive exactly when the group is
// abelian and theta is valid.  Throws std::invalid_argument when n < 3.
bool is_primitive_check(const FujikiInput& in);

}  // namespace fujiki
