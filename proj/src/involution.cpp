#include "fujiki/involution.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace fujiki {

Perm GroupInvolution::apply(const Perm& g) const {
    int i = group->index_of(g);
    if (i < 0) throw std::invalid_argument("element not in group");
    return group->element(apply_idx(i));
}

std::vector<int> GroupInvolution::fixed_indices() const {
    std::vector<int> out;
    for (int i = 0; i < group->order(); ++i)
        if (apply_idx(i) == group->inverse(i)) out.push_back(i);
    return out;
}

namespace {

// closure of a set of element indices inside g, as a membership mask
std::vector<bool> index_closure(const GroupTable& g, const std::vector<int>& seed) {
    std::vector<bool> in(static_cast<size_t>(g.order()), false);
    std::vector<int> frontier;
    in[static_cast<size_t>(g.identity_index())] = true;
    frontier.push_back(g.identity_index());
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier) {
            for (int s : seed) {
                int y = g.mult(x, s);
                if (!in[static_cast<size_t>(y)]) {
                    in[static_cast<size_t>(y)] = true;
                    next.push_back(y);
                }
            }
        }
        frontier = std::move(next);
    }
    return in;
}

bool indices_generate(const GroupTable& g, const std::vector<int>& seed) {
    auto in = index_closure(g, seed);
    return std::count(in.begin(), in.end(), true) == g.order();
}

void assert_involutive_automorphism(const GroupInvolution& theta) {
    const GroupTable& g = *theta.group;
    for (int i = 0; i < g.order(); ++i) {
        assert(theta.apply_idx(theta.apply_idx(i)) == i);
        (void)i;
    }
    for (const Perm& a : g.generators()) {
        int ia = g.index_of(a);
        for (const Perm& b : g.generators()) {
            int ib = g.index_of(b);
            int lhs = theta.apply_idx(g.mult(ia, ib));
            int rhs = g.mult(theta.apply_idx(ia), theta.apply_idx(ib));
            assert(lhs == rhs);
            (void)lhs;
            (void)rhs;
        }
    }
}

}  // namespace

GroupInvolution identity_involution(const GroupTable& g) {
    GroupInvolution theta;
    theta.group = &g;
    theta.kind = GroupInvolution::Kind::identity;
    theta.map.resize(static_cast<size_t>(g.order()));
    std::iota(theta.map.begin(), theta.map.end(), 0);
    return theta;
}

GroupInvolution inversion_automorphism(const GroupTable& g) {
    if (!g.is_abelian()) throw std::invalid_argument("inversion automorphism needs an abelian group");
    GroupInvolution theta;
    theta.group = &g;
    theta.kind = GroupInvolution::Kind::inversion;
    theta.map.resize(static_cast<size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i)
        theta.map[static_cast<size_t>(i)] = static_cast<uint16_t>(g.inverse(i));
    return theta;
}

std::optional<GroupInvolution> make_conjugation_involution(const GroupTable& g, const Perm& c) {
    if (c.degree() != g.degree()) throw std::invalid_argument("conjugator degree mismatch");
    for (const Perm& gen : g.generators())
        if (!g.contains(conjugate(gen, c))) return std::nullopt;
    GroupInvolution theta;
    theta.group = &g;
    theta.kind = GroupInvolution::Kind::conjugation;
    theta.conjugator = c;
    theta.map.resize(static_cast<size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i) {
        int j = g.index_of(conjugate(g.element(i), c));
        assert(j >= 0);
        theta.map[static_cast<size_t>(i)] = static_cast<uint16_t>(j);
    }
    for (int i = 0; i < g.order(); ++i)
        if (theta.apply_idx(theta.apply_idx(i)) != i) return std::nullopt;
    return theta;
}

std::optional<GroupInvolution> extend_generator_inversion(const GroupTable& g,
                                                          const std::vector<Perm>& family) {
    if (family.empty()) throw std::invalid_argument("empty generating family");
    std::vector<int> fam_idx;
    for (const Perm& b : family) {
        int i = g.index_of(b);
        if (i < 0) throw std::invalid_argument("family member not in group");
        fam_idx.push_back(i);
    }
    {
        std::vector<int> sorted = fam_idx;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("repeated family member");
    }
    if (!indices_generate(g, fam_idx)) throw std::invalid_argument("family does not generate");

    constexpr int kUnset = -1;
    std::vector<int> val(static_cast<size_t>(g.order()), kUnset);
    val[static_cast<size_t>(g.identity_index())] = g.identity_index();
    for (int b : fam_idx) {
        int inv = g.inverse(b);
        if (val[static_cast<size_t>(b)] != kUnset && val[static_cast<size_t>(b)] != inv)
            return std::nullopt;
        val[static_cast<size_t>(b)] = inv;
    }

    // span the Cayley graph; every (x, b) edge is examined exactly once, so
    // a returned map satisfies theta(x b) = theta(x) theta(b) everywhere,
    // which forces a homomorphism by induction on word length
    std::vector<int> frontier;
    frontier.push_back(g.identity_index());
    std::vector<bool> visited(static_cast<size_t>(g.order()), false);
    visited[static_cast<size_t>(g.identity_index())] = true;
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier) {
            for (int b : fam_idx) {
                int y = g.mult(x, b);
                int image = g.mult(val[static_cast<size_t>(x)], val[static_cast<size_t>(b)]);
                if (val[static_cast<size_t>(y)] == kUnset) {
                    val[static_cast<size_t>(y)] = image;
                } else if (val[static_cast<size_t>(y)] != image) {
                    return std::nullopt;
                }
                if (!visited[static_cast<size_t>(y)]) {
                    visited[static_cast<size_t>(y)] = true;
                    next.push_back(y);
                }
            }
        }
        frontier = std::move(next);
    }

    GroupInvolution theta;
    theta.group = &g;
    theta.kind = GroupInvolution::Kind::generator_family;
    theta.family = family;
    theta.map.resize(static_cast<size_t>(g.order()));
    std::vector<bool> hit(static_cast<size_t>(g.order()), false);
    for (int i = 0; i < g.order(); ++i) {
        assert(val[static_cast<size_t>(i)] != kUnset);
        theta.map[static_cast<size_t>(i)] = static_cast<uint16_t>(val[static_cast<size_t>(i)]);
        assert(!hit[static_cast<size_t>(val[static_cast<size_t>(i)])]);
        hit[static_cast<size_t>(val[static_cast<size_t>(i)])] = true;
    }
    for (int i = 0; i < g.order(); ++i) {
        // theta^2 fixes the generators, hence is the identity
        assert(theta.apply_idx(theta.apply_idx(i)) == i);
        (void)i;
    }
    return theta;
}

bool is_valid_involution(const GroupInvolution& theta) {
    return indices_generate(*theta.group, theta.fixed_indices());
}

namespace {

void push_candidate(std::vector<GroupInvolution>& out, GroupInvolution&& theta) {
    for (const GroupInvolution& have : out)
        if (have.map == theta.map) return;
    out.push_back(std::move(theta));
}

std::vector<GroupInvolution> enumerate_bases(const GroupTable& g) {
    std::vector<GroupInvolution> out;
    if (g.order() == 1) {
        out.push_back(identity_involution(g));
        return out;
    }
    for (const auto& family : irredundant_generating_sets(g)) {
        auto theta = extend_generator_inversion(g, family);
        if (theta) push_candidate(out, std::move(*theta));
    }
    return out;
}

std::vector<GroupInvolution> enumerate_ambient(const GroupTable& g, const GroupTable* ambient) {
    std::vector<GroupInvolution> out;
    auto try_conjugator = [&](const Perm& c) {
        auto theta = make_conjugation_involution(g, c);
        if (theta && is_valid_involution(*theta)) push_candidate(out, std::move(*theta));
    };
    if (ambient) {
        if (ambient->degree() != g.degree())
            throw std::invalid_argument("ambient degree mismatch");
        for (const Perm& c : ambient->elements())
            if (perm_order(c) <= 2) try_conjugator(c);
    } else {
        if (g.degree() > 9)
            throw std::invalid_argument("full symmetric scan needs degree <= 9");
        Perm c = identity_perm(g.degree());
        do {
            bool involutive = true;
            for (int i = 0; i < g.degree(); ++i) {
                if (c.img[static_cast<size_t>(c.img[static_cast<size_t>(i)])] !=
                    static_cast<uint8_t>(i)) {
                    involutive = false;
                    break;
                }
            }
            if (involutive) try_conjugator(c);
        } while (std::next_permutation(c.img.begin(), c.img.end()));
    }
    return out;
}

}  // namespace

std::vector<GroupInvolution> enumerate_valid_involutions(const GroupTable& g,
                                                         EnumerationMethod method,
                                                         const GroupTable* ambient) {
    std::vector<GroupInvolution> out = method == EnumerationMethod::bases
                                           ? enumerate_bases(g)
                                           : enumerate_ambient(g, ambient);
    std::sort(out.begin(), out.end(),
              [](const GroupInvolution& a, const GroupInvolution& b) { return a.map < b.map; });
    for (const GroupInvolution& theta : out) {
        assert_involutive_automorphism(theta);
        assert(is_valid_involution(theta));
    }
    return out;
}

std::optional<std::pair<Perm, Perm>> are_equivalent(const GroupInvolution& theta1,
                                                    const GroupInvolution& theta2,
                                                    const GroupTable& gbar) {
    const GroupTable& g = *theta1.group;
    if (theta2.group->elements() != g.elements())
        throw std::invalid_argument("involutions live on different groups");
    if (gbar.degree() != g.degree()) throw std::invalid_argument("overgroup degree mismatch");
    for (const Perm& x : g.generators())
        if (!gbar.contains(x)) throw std::invalid_argument("overgroup does not contain the group");

    std::vector<int> gen_idx;
    for (const Perm& gen : g.generators()) gen_idx.push_back(g.index_of(gen));

    std::vector<Perm> normalizers;
    for (const Perm& h : gbar.elements()) {
        bool ok = true;
        for (const Perm& gen : g.generators()) {
            if (!g.contains(conjugate(gen, h))) {
                ok = false;
                break;
            }
        }
        if (ok) normalizers.push_back(h);
    }

    std::vector<int> fixed2 = theta2.fixed_indices();
    for (const Perm& h2 : normalizers) {
        // precompute h2 theta1(gen) h2^-1
        std::vector<Perm> rhs;
        for (int gi : gen_idx) rhs.push_back(conjugate(g.element(theta1.apply_idx(gi)), h2));
        for (int ui : fixed2) {
            Perm h1 = compose(g.element(ui), h2);
            bool ok = true;
            for (size_t k = 0; k < gen_idx.size(); ++k) {
                Perm lhs_arg = conjugate(g.element(gen_idx[k]), h1);
                int li = g.index_of(lhs_arg);
                assert(li >= 0);  // h1 normalizes g by construction
                if (!(g.element(theta2.apply_idx(li)) == rhs[k])) {
                    ok = false;
                    break;
                }
            }
            if (ok) return std::make_pair(h1, h2);
        }
    }
    return std::nullopt;
}

std::vector<InvolutionClass> classify_involutions(const std::vector<GroupInvolution>& candidates,
                                                  const std::vector<const GroupTable*>& bridges) {
    std::vector<InvolutionClass> out;
    if (candidates.empty()) return out;
    const GroupTable& g = *candidates.front().group;

    std::vector<int> parent(candidates.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };

    std::vector<const GroupTable*> contexts;
    contexts.push_back(&g);
    for (const GroupTable* b : bridges) contexts.push_back(b);

    for (size_t i = 0; i < candidates.size(); ++i) {
        for (size_t j = i + 1; j < candidates.size(); ++j) {
            if (find(static_cast<int>(i)) == find(static_cast<int>(j))) continue;
            for (const GroupTable* ctx : contexts) {
                if (are_equivalent(candidates[i], candidates[j], *ctx)) {
                    parent[static_cast<size_t>(find(static_cast<int>(i)))] =
                        find(static_cast<int>(j));
                    break;
                }
            }
        }
    }

    std::vector<std::vector<int>> buckets(candidates.size());
    for (size_t i = 0; i < candidates.size(); ++i)
        buckets[static_cast<size_t>(find(static_cast<int>(i)))].push_back(static_cast<int>(i));
    for (const auto& bucket : buckets) {
        if (bucket.empty()) continue;
        InvolutionClass cls;
        for (int i : bucket) cls.members.push_back(candidates[static_cast<size_t>(i)]);
        std::sort(cls.members.begin(), cls.members.end(),
                  [](const GroupInvolution& a, const GroupInvolution& b) { return a.map < b.map; });
        cls.representative = cls.members.front();
        out.push_back(std::move(cls));
    }
    std::sort(out.begin(), out.end(), [](const InvolutionClass& a, const InvolutionClass& b) {
        return a.representative.map < b.representative.map;
    });
    return out;
}

std::optional<Perm> overgroup_bridge_search(const GroupTable& g, const GroupTable& h,
                                            const GroupInvolution& theta1,
                                            const GroupInvolution& theta2, int target_order) {
    if (h.degree() != g.degree()) throw std::invalid_argument("overgroup degree mismatch");
    for (const Perm& x : g.generators())
        if (!h.contains(x)) throw std::invalid_argument("overgroup does not contain the group");
    if (target_order % g.order() != 0 || target_order < g.order())
        throw std::invalid_argument("target order must be a multiple of the group order");

    for (const Perm& cand : h.elements()) {
        bool normalizes = true;
        for (const Perm& gen : g.generators()) {
            if (!g.contains(conjugate(gen, cand))) {
                normalizes = false;
                break;
            }
        }
        if (!normalizes) continue;
        std::vector<Perm> gens = g.generators();
        gens.push_back(cand);
        auto closed = close_group_bounded(gens, target_order);
        if (!closed || closed->order() != target_order) continue;
        if (are_equivalent(theta1, theta2, *closed)) return cand;
    }
    return std::nullopt;
}

}  // namespace fujiki
