#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fujiki/group.hpp"
#include "fujiki/perm.hpp"

namespace fujiki {

// An involutive automorphism theta of a finite permutation group, stored as
// the image table over the group's element indices.  The group is referenced,
// not owned; it must outlive the involution.
struct GroupInvolution {
    enum class Kind { identity, inversion, conjugation, generator_family };

    const GroupTable* group = nullptr;
    std::vector<uint16_t> map;  // map[i] = index of theta(element(i))
    Kind kind = Kind::identity;
    Perm conjugator;            // set when kind == conjugation
    std::vector<Perm> family;   // set when kind == generator_family

    int apply_idx(int i) const { return map[static_cast<size_t>(i)]; }
    Perm apply(const Perm& g) const;  // throws std::invalid_argument if g is not in the group

    // Indices of the fixed inversion set F = { g : theta(g) = g^-1 }.
    std::vector<int> fixed_indices() const;
};

// theta = id.
GroupInvolution identity_involution(const GroupTable& g);

// theta(x) = x^-1; throws std::invalid_argument unless g is abelian.
GroupInvolution inversion_automorphism(const GroupTable& g);

// theta(x) = c x c^-1.  Returns std::nullopt when c does not normalize g or
// the induced automorphism is not involutive.
std::optional<GroupInvolution> make_conjugation_involution(const GroupTable& g, const Perm& c);

// Extends the assignment theta(b) = b^-1 on a generating family to all of g
// by spanning the Cayley graph; every edge is checked, so the result is a
// homomorphism whenever one is returned.  Returns std::nullopt on conflict.
// Throws std::invalid_argument when the family is empty, has repeats, leaves
// g, or does not generate it.
std::optional<GroupInvolution> extend_generator_inversion(const GroupTable& g,
                                                          const std::vector<Perm>& family);

// theta is valid when its fixed inversion set generates the whole group.
bool is_valid_involution(const GroupInvolution& theta);

enum class EnumerationMethod {
    bases,    // extend inversion over every irredundant generating family
    ambient,  // conjugation by order <= 2 elements of an ambient group
};

// All valid involutions of g, sorted by image table.  The bases method is
// exhaustive: a valid involution inverts each member of its fixed inversion
// set, hence inverts some irredundant generating family inside it.  The
// ambient method scans the full symmetric group on g's points when ambient
// is null (degree <= 9 required) or the given overgroup otherwise.
std::vector<GroupInvolution> enumerate_valid_involutions(const GroupTable& g,
                                                         EnumerationMethod method,
                                                         const GroupTable* ambient = nullptr);

// Searches for a witness pair (h1, h2) of elements of gbar proving that the
// two involutions are equivalent: both normalize the group G of theta1 and
// theta2, u = h1 o h2^-1 lies in G with theta2(u) = u^-1, and
// theta2(h1 g h1^-1) = h2 theta1(g) h2^-1 for every g (checked on
// generators; both sides are multiplicative in g).  Returns std::nullopt when
// no witness exists in gbar.  Throws std::invalid_argument when the two
// involutions live on different groups or gbar does not contain that group.
std::optional<std::pair<Perm, Perm>> are_equivalent(const GroupInvolution& theta1,
                                                    const GroupInvolution& theta2,
                                                    const GroupTable& gbar);

struct InvolutionClass {
    GroupInvolution representative;        // lexicographically least member map
    std::vector<GroupInvolution> members;  // sorted by map
};

// Partitions the candidates by the equivalence generated by are_equivalent
// witnesses, searched first inside the group itself and then inside each
// bridge overgroup in order.  Classes are sorted by representative map.
// Positive certification only: candidates are merged only on an explicit
// witness, never separated heuristically.
std::vector<InvolutionClass> classify_involutions(const std::vector<GroupInvolution>& candidates,
                                                  const std::vector<const GroupTable*>& bridges = {});

// Scans h in H (ascending) for <G, h> of order target_order in which G is
// normal and theta1, theta2 become equivalent; returns the first such h.
// With target_order == |G| this degenerates to are_equivalent inside G
// itself and returns the identity on success.
std::optional<Perm> overgroup_bridge_search(const GroupTable& g, const GroupTable& h,
                                            const GroupInvolution& theta1,
                                            const GroupInvolution& theta2, int target_order);

}  // namespace fujiki
