#pragma once

#include <optional>
#include <vector>

#include "fujiki/perm.hpp"

namespace fujiki {

// A finite permutation group materialized as its sorted element list.
// Index-based multiplication tables are built eagerly for groups of
// order <= kIndexTableLimit; larger groups fall back to composing
// permutations and binary-searching the element list.
class GroupTable {
  public:
    static constexpr int kIndexTableLimit = 512;

    GroupTable() = default;
    GroupTable(std::vector<Perm> generators, std::vector<Perm> elements);

    const std::vector<Perm>& generators() const { return generators_; }
    const std::vector<Perm>& elements() const { return elements_; }
    const Perm& element(int i) const { return elements_[static_cast<size_t>(i)]; }
    int order() const { return static_cast<int>(elements_.size()); }
    int degree() const { return degree_; }

    // Index of a permutation in the sorted element list, -1 if absent.
    int index_of(const Perm& p) const;
    bool contains(const Perm& p) const { return index_of(p) >= 0; }
    int identity_index() const { return identity_index_; }

    bool has_index_tables() const { return !mult_.empty(); }
    int mult(int i, int j) const;  // index of element(i) o element(j)
    int inverse(int i) const;
    long element_order(int i) const { return element_orders_[static_cast<size_t>(i)]; }

    bool is_abelian() const;
    bool has_trivial_center() const;

  private:
    std::vector<Perm> generators_;
    std::vector<Perm> elements_;  // sorted lexicographically
    int degree_ = 0;
    int identity_index_ = -1;
    std::vector<uint16_t> mult_;  // order x order, row-major; empty if too large
    std::vector<uint16_t> inverse_;
    std::vector<uint16_t> element_orders_;
};

// Closure of the generators under composition.  Throws std::invalid_argument
// on an empty generator list or mixed degrees.
GroupTable close_group(const std::vector<Perm>& generators);

// Closure with an early abort: returns std::nullopt as soon as the partial
// closure exceeds max_order.
std::optional<GroupTable> close_group_bounded(const std::vector<Perm>& generators, int max_order);

// All elements of order k, sorted.  With modulo_inverse, of each pair
// {g, g^-1} only the lexicographically smaller member is kept (an element
// equal to its own inverse is kept as is).
std::vector<Perm> elements_of_order(const GroupTable& g, long k, bool modulo_inverse = false);

// All cyclic subgroups of order k, each returned as its sorted element
// list; the subgroups are sorted among themselves.
std::vector<std::vector<Perm>> cyclic_subgroups_of_order(const GroupTable& g, long k);

// Decomposes s into right cosets rep o H and returns the representatives
// (the lexicographically least member of each coset), sorted.  Throws
// std::invalid_argument when s is not a union of right cosets of h.
std::vector<Perm> right_coset_orbits(const std::vector<Perm>& s, const std::vector<Perm>& h);

// All irredundant generating families of g with at most max_size members,
// each family sorted ascending, families in lexicographic order of their
// element indices.  A family is irredundant when it generates g but no
// proper subfamily does.  When max_size <= 0 the bound defaults to
// floor(log2 |g|), which no irredundant family can exceed.
std::vector<std::vector<Perm>> irredundant_generating_sets(const GroupTable& g, int max_size = 0);

}  // namespace fujiki
