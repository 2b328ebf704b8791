#include "fujiki/group.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace fujiki {

GroupTable::GroupTable(std::vector<Perm> generators, std::vector<Perm> elements)
    : generators_(std::move(generators)), elements_(std::move(elements)) {
    assert(!elements_.empty());
    std::sort(elements_.begin(), elements_.end());
    assert(std::adjacent_find(elements_.begin(), elements_.end()) == elements_.end());
    degree_ = elements_.front().degree();
    identity_index_ = index_of(identity_perm(degree_));
    assert(identity_index_ >= 0);

    int n = order();
    inverse_.resize(static_cast<size_t>(n));
    element_orders_.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        int inv = index_of(invert(elements_[static_cast<size_t>(i)]));
        assert(inv >= 0);
        inverse_[static_cast<size_t>(i)] = static_cast<uint16_t>(inv);
        element_orders_[static_cast<size_t>(i)] =
            static_cast<uint16_t>(perm_order(elements_[static_cast<size_t>(i)]));
    }
    if (n <= kIndexTableLimit) {
        mult_.resize(static_cast<size_t>(n) * static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                int k = index_of(compose(elements_[static_cast<size_t>(i)],
                                         elements_[static_cast<size_t>(j)]));
                assert(k >= 0);
                mult_[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)] =
                    static_cast<uint16_t>(k);
            }
        }
    }
}

int GroupTable::index_of(const Perm& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || !(*it == p)) return -1;
    return static_cast<int>(it - elements_.begin());
}

int GroupTable::mult(int i, int j) const {
    if (!mult_.empty())
        return mult_[static_cast<size_t>(i) * elements_.size() + static_cast<size_t>(j)];
    int k = index_of(compose(elements_[static_cast<size_t>(i)], elements_[static_cast<size_t>(j)]));
    assert(k >= 0);
    return k;
}

int GroupTable::inverse(int i) const { return inverse_[static_cast<size_t>(i)]; }

bool GroupTable::is_abelian() const {
    for (size_t i = 0; i < generators_.size(); ++i)
        for (size_t j = i + 1; j < generators_.size(); ++j)
            if (!(compose(generators_[i], generators_[j]) == compose(generators_[j], generators_[i])))
                return false;
    return true;
}

bool GroupTable::has_trivial_center() const {
    for (const Perm& x : elements_) {
        if (is_identity(x)) continue;
        bool central = true;
        for (const Perm& g : generators_) {
            if (!(compose(x, g) == compose(g, x))) {
                central = false;
                break;
            }
        }
        if (central) return false;
    }
    return true;
}

namespace {

std::optional<std::vector<Perm>> close_elements(const std::vector<Perm>& generators,
                                                long max_order) {
    if (generators.empty()) throw std::invalid_argument("empty generator list");
    int degree = generators.front().degree();
    for (const Perm& g : generators)
        if (g.degree() != degree) throw std::invalid_argument("generators of mixed degree");

    std::unordered_set<Perm, PermHash> seen;
    std::vector<Perm> frontier;
    seen.insert(identity_perm(degree));
    frontier.push_back(identity_perm(degree));
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& x : frontier) {
            for (const Perm& g : generators) {
                Perm y = compose(x, g);
                if (seen.insert(y).second) {
                    if (max_order > 0 && static_cast<long>(seen.size()) > max_order)
                        return std::nullopt;
                    next.push_back(std::move(y));
                }
            }
        }
        frontier = std::move(next);
    }
    return std::vector<Perm>(seen.begin(), seen.end());
}

}  // namespace

GroupTable close_group(const std::vector<Perm>& generators) {
    auto elems = close_elements(generators, 0);
    return GroupTable(generators, std::move(*elems));
}

std::optional<GroupTable> close_group_bounded(const std::vector<Perm>& generators, int max_order) {
    auto elems = close_elements(generators, max_order);
    if (!elems) return std::nullopt;
    return GroupTable(generators, std::move(*elems));
}

std::vector<Perm> elements_of_order(const GroupTable& g, long k, bool modulo_inverse) {
    std::vector<Perm> out;
    for (int i = 0; i < g.order(); ++i) {
        if (g.element_order(i) != k) continue;
        const Perm& p = g.element(i);
        if (modulo_inverse && invert(p) < p) continue;
        out.push_back(p);
    }
    return out;
}

std::vector<std::vector<Perm>> cyclic_subgroups_of_order(const GroupTable& g, long k) {
    std::vector<std::vector<Perm>> out;
    for (int i = 0; i < g.order(); ++i) {
        if (g.element_order(i) != k) continue;
        std::vector<Perm> members;
        Perm x = identity_perm(g.degree());
        for (long e = 0; e < k; ++e) {
            members.push_back(x);
            x = compose(x, g.element(i));
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Perm> right_coset_orbits(const std::vector<Perm>& s, const std::vector<Perm>& h) {
    if (h.empty()) throw std::invalid_argument("empty subgroup");
    int degree = h.front().degree();
    std::unordered_set<Perm, PermHash> hset(h.begin(), h.end());
    if (hset.size() != h.size()) throw std::invalid_argument("subgroup has repeated elements");
    if (!hset.count(identity_perm(degree))) throw std::invalid_argument("subgroup lacks identity");
    for (const Perm& a : h)
        for (const Perm& b : h)
            if (!hset.count(compose(a, b))) throw std::invalid_argument("subgroup not closed");

    std::unordered_set<Perm, PermHash> sset(s.begin(), s.end());
    for (const Perm& x : s)
        for (const Perm& a : h)
            if (!sset.count(compose(x, a)))
                throw std::invalid_argument("set is not a union of right cosets");

    std::vector<Perm> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::unordered_set<Perm, PermHash> covered;
    std::vector<Perm> reps;
    for (const Perm& x : sorted) {
        if (covered.count(x)) continue;
        reps.push_back(x);
        for (const Perm& a : h) covered.insert(compose(x, a));
    }
    return reps;
}

namespace {

struct MaskHash {
    size_t operator()(const std::vector<uint64_t>& m) const {
        size_t h = 1469598103934665603ull;
        for (uint64_t w : m) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Interned subgroup lattice over element indices, with memoized joins.
struct SubgroupCache {
    const GroupTable& g;
    int words;
    std::vector<std::vector<uint64_t>> masks;
    std::vector<std::vector<uint16_t>> gens;
    std::unordered_map<std::vector<uint64_t>, int, MaskHash> intern;
    std::unordered_map<uint64_t, int> join_memo;
    int trivial_id = -1;
    int full_id = -1;

    explicit SubgroupCache(const GroupTable& group) : g(group) {
        words = (g.order() + 63) / 64;
        std::vector<uint64_t> triv(static_cast<size_t>(words), 0);
        set_bit(triv, g.identity_index());
        trivial_id = intern_mask(std::move(triv), {});
        std::vector<uint64_t> full(static_cast<size_t>(words), 0);
        for (int i = 0; i < g.order(); ++i) set_bit(full, i);
        // record the full mask's id without generators; joins reaching the
        // whole group are detected by comparison with full_mask
        full_mask = full;
    }

    std::vector<uint64_t> full_mask;

    static void set_bit(std::vector<uint64_t>& m, int i) {
        m[static_cast<size_t>(i) / 64] |= (uint64_t{1} << (static_cast<size_t>(i) % 64));
    }
    static bool get_bit(const std::vector<uint64_t>& m, int i) {
        return (m[static_cast<size_t>(i) / 64] >> (static_cast<size_t>(i) % 64)) & 1;
    }

    int intern_mask(std::vector<uint64_t> mask, std::vector<uint16_t> gen_list) {
        auto it = intern.find(mask);
        if (it != intern.end()) return it->second;
        int id = static_cast<int>(masks.size());
        intern.emplace(mask, id);
        masks.push_back(std::move(mask));
        gens.push_back(std::move(gen_list));
        return id;
    }

    bool member(int id, int elt) const { return get_bit(masks[static_cast<size_t>(id)], elt); }
    bool is_full(int id) const { return masks[static_cast<size_t>(id)] == full_mask; }

    int join(int id, int elt) {
        uint64_t key = (static_cast<uint64_t>(id) << 16) | static_cast<uint64_t>(elt);
        auto it = join_memo.find(key);
        if (it != join_memo.end()) return it->second;

        std::vector<uint16_t> gen_list = gens[static_cast<size_t>(id)];
        gen_list.push_back(static_cast<uint16_t>(elt));
        std::vector<uint64_t> mask(static_cast<size_t>(words), 0);
        std::vector<uint16_t> frontier;
        set_bit(mask, g.identity_index());
        frontier.push_back(static_cast<uint16_t>(g.identity_index()));
        while (!frontier.empty()) {
            std::vector<uint16_t> next;
            for (uint16_t x : frontier) {
                for (uint16_t gen : gen_list) {
                    int y = g.mult(x, gen);
                    if (!get_bit(mask, y)) {
                        set_bit(mask, y);
                        next.push_back(static_cast<uint16_t>(y));
                    }
                }
            }
            frontier = std::move(next);
        }
        int result = intern_mask(std::move(mask), std::move(gen_list));
        join_memo.emplace(key, result);
        return result;
    }

    int closure_of(const std::vector<uint16_t>& elts) {
        int id = trivial_id;
        for (uint16_t e : elts) id = join(id, e);
        return id;
    }
};

}  // namespace

std::vector<std::vector<Perm>> irredundant_generating_sets(const GroupTable& g, int max_size) {
    if (max_size <= 0)
        max_size = static_cast<int>(std::floor(std::log2(static_cast<double>(g.order()))));
    if (g.order() == 1) return {};

    SubgroupCache cache(g);
    std::vector<std::vector<Perm>> out;
    std::vector<uint16_t> prefix;

    // depth-first over ascending element indices; a strictly increasing
    // closure chain of length k forces |g| >= 2^k, so max_size bounds the
    // recursion
    auto dfs = [&](auto&& self, int subgroup_id, int last) -> void {
        for (int e = last + 1; e < g.order(); ++e) {
            if (cache.member(subgroup_id, e)) continue;
            int joined = cache.join(subgroup_id, e);
            prefix.push_back(static_cast<uint16_t>(e));
            if (cache.is_full(joined)) {
                bool irredundant = true;
                if (prefix.size() > 1) {
                    std::vector<uint16_t> reduced;
                    for (size_t skip = 0; skip < prefix.size() && irredundant; ++skip) {
                        reduced.clear();
                        for (size_t i = 0; i < prefix.size(); ++i)
                            if (i != skip) reduced.push_back(prefix[i]);
                        if (cache.is_full(cache.closure_of(reduced))) irredundant = false;
                    }
                }
                if (irredundant) {
                    std::vector<Perm> family;
                    for (uint16_t i : prefix) family.push_back(g.element(i));
                    out.push_back(std::move(family));
                }
            } else if (static_cast<int>(prefix.size()) < max_size) {
                self(self, joined, e);
            }
            prefix.pop_back();
        }
    };
    dfs(dfs, cache.trivial_id, -1);

    // sizes encountered must form a contiguous range (Tarski irredundant
    // basis theorem)
    std::vector<bool> size_seen(static_cast<size_t>(max_size) + 1, false);
    size_t lo = static_cast<size_t>(max_size) + 1, hi = 0;
    for (const auto& f : out) {
        size_seen[f.size()] = true;
        lo = std::min(lo, f.size());
        hi = std::max(hi, f.size());
    }
    for (size_t k = lo; k <= hi; ++k) assert(size_seen[k]);
    return out;
}

}  // namespace fujiki
