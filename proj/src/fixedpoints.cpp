#include "fujiki/fixedpoints.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <unordered_set>

namespace fujiki {

FujikiInput make_input(const GroupTable& group, const GroupInvolution& theta, int n) {
    if (theta.group != &group) throw std::invalid_argument("involution lives on another group");
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    FujikiInput in;
    in.group = &group;
    in.theta = &theta;
    in.n = n;
    return in;
}

std::vector<Perm> fixed_inversion_set(const FujikiInput& in) {
    std::vector<Perm> out;
    for (int i : in.theta->fixed_indices()) out.push_back(in.group->element(i));
    return out;
}

int fixed_surface_orbit_count(const FujikiInput& in) {
    if (in.n != 2) throw std::invalid_argument("divisor count is an n = 2 notion");
    const GroupTable& g = *in.group;
    std::vector<int> fixed = in.theta->fixed_indices();
    std::unordered_set<int> in_f(fixed.begin(), fixed.end());
    std::unordered_set<int> covered;
    int orbits = 0;
    for (int h : fixed) {
        if (covered.count(h)) continue;
        ++orbits;
        std::vector<int> frontier = {h};
        covered.insert(h);
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int x : frontier) {
                for (int a = 0; a < g.order(); ++a) {
                    int image = g.mult(g.mult(in.theta->apply_idx(a), x), g.inverse(a));
                    assert(in_f.count(image));  // the twisted action preserves F
                    if (!covered.count(image)) {
                        covered.insert(image);
                        next.push_back(image);
                    }
                }
            }
            frontier = std::move(next);
        }
    }
    return orbits;
}

std::pair<int, int> subgroup_multiplicities(const GroupTable& g, const Perm& elt) {
    if (!g.contains(elt)) throw std::invalid_argument("element not in group");
    int k4 = 0, k6 = 0;
    for (const auto& sub : cyclic_subgroups_of_order(g, 4))
        if (std::binary_search(sub.begin(), sub.end(), elt)) ++k4;
    for (const auto& sub : cyclic_subgroups_of_order(g, 6))
        if (std::binary_search(sub.begin(), sub.end(), elt)) ++k6;
    return {k4, k6};
}

int specific_fixed_count(const GroupTable& g, const Perm& elt) {
    long ord = perm_order(elt);
    auto [k4, k6] = subgroup_multiplicities(g, elt);
    int n = 0;
    switch (ord) {
        case 2: n = 8 - 2 * k6 - 4 * k4; break;
        case 3: n = 6 - 2 * k6; break;
        case 4: n = 4; break;
        case 6: n = 2; break;
        default: throw std::invalid_argument("element order admits no surface fixed points");
    }
    if (n < 0) throw std::runtime_error("negative specific fixed count: group not admissible");
    return n;
}

int TranslateSet::count(int plus, int commuting, int meets_f) const {
    int out = 0;
    for (const auto& c : cosets) {
        if (plus >= 0 && c.plus != (plus != 0)) continue;
        if (commuting >= 0 && c.commuting != (commuting != 0)) continue;
        if (meets_f >= 0 && c.meets_f != (meets_f != 0)) continue;
        ++out;
    }
    return out;
}

TranslateSet build_translate_set(const FujikiInput& in, const Perm& gi, const Perm& gj) {
    const GroupTable& g = *in.group;
    int ii = g.index_of(gi), ij = g.index_of(gj);
    if (ii < 0 || ij < 0) throw std::invalid_argument("base element not in group");
    if (ii == g.identity_index() || ij == g.identity_index())
        throw std::invalid_argument("base element must be nontrivial");
    if (g.element_order(ii) != g.element_order(ij))
        throw std::invalid_argument("base elements must have equal orders");

    auto span = [&](int e) {
        std::vector<int> out;
        int x = g.identity_index();
        do {
            out.push_back(x);
            x = g.mult(x, e);
        } while (x != g.identity_index());
        std::sort(out.begin(), out.end());
        return out;
    };
    std::vector<int> zi = span(ii), zj = span(ij);
    std::vector<int> inter;
    std::set_intersection(zi.begin(), zi.end(), zj.begin(), zj.end(), std::back_inserter(inter));
    if (inter.size() <= 1) throw std::invalid_argument("cyclic spans intersect trivially");

    int gen = -1;
    for (int x : inter) {
        if (g.element_order(x) == static_cast<long>(inter.size())) {
            gen = x;
            break;
        }
    }
    assert(gen >= 0);  // a subgroup of a cyclic group is cyclic

    std::vector<bool> in_inter(static_cast<size_t>(g.order()), false);
    for (int x : inter) in_inter[static_cast<size_t>(x)] = true;
    std::vector<bool> in_f(static_cast<size_t>(g.order()), false);
    for (int x : in.theta->fixed_indices()) in_f[static_cast<size_t>(x)] = true;

    int theta_gj = in.theta->apply_idx(ij);
    int gi_inv = g.inverse(ii);
    std::vector<bool> in_s(static_cast<size_t>(g.order()), false);
    for (int s = 0; s < g.order(); ++s) {
        int c = g.mult(g.mult(g.inverse(s), theta_gj), s);
        if (c == ii || c == gi_inv) in_s[static_cast<size_t>(s)] = true;
    }

    std::vector<int> zi_raw;  // unsorted powers of gi for coset walks
    {
        int x = g.identity_index();
        do {
            zi_raw.push_back(x);
            x = g.mult(x, ii);
        } while (x != g.identity_index());
    }

    TranslateSet ts;
    ts.base_i = gi;
    ts.base_j = gj;
    ts.intersection_generator = g.element(gen);
    int theta_gen = in.theta->apply_idx(gen);

    std::vector<bool> covered(static_cast<size_t>(g.order()), false);
    for (int s = 0; s < g.order(); ++s) {
        if (!in_s[static_cast<size_t>(s)] || covered[static_cast<size_t>(s)]) continue;
        TranslateCoset coset;
        coset.rep = g.element(s);
        for (int a : zi_raw) {
            int member = g.mult(s, a);
            assert(in_s[static_cast<size_t>(member)]);  // S is a union of right cosets of <g_i>
            covered[static_cast<size_t>(member)] = true;
            if (in_inter[static_cast<size_t>(g.mult(in.theta->apply_idx(member), member))])
                coset.plus = true;
            if (in_f[static_cast<size_t>(member)]) coset.meets_f = true;
        }
        coset.commuting = g.mult(g.mult(s, gen), g.inverse(s)) == theta_gen;
        ts.cosets.push_back(std::move(coset));
    }
    return ts;
}

const TranslateSet& TranslateCache::at(const Perm& gi, const Perm& gj) {
    int ii = in_.group->index_of(gi), ij = in_.group->index_of(gj);
    auto it = memo_.find({ii, ij});
    if (it == memo_.end())
        it = memo_.emplace(std::make_pair(ii, ij), build_translate_set(in_, gi, gj)).first;
    return it->second;
}

std::vector<Perm> enclosing_cyclic_generators(const GroupTable& g, const Perm& elt,
                                              long sub_order) {
    long ord = perm_order(elt);
    if (ord <= 1 || sub_order % ord != 0)
        throw std::invalid_argument("subgroup order must be a multiple of the element order");
    long power = sub_order / ord;
    std::vector<Perm> out;
    for (const auto& sub : cyclic_subgroups_of_order(g, sub_order)) {
        if (!std::binary_search(sub.begin(), sub.end(), elt)) continue;
        for (const Perm& x : sub) {  // sorted: the first match is canonical
            if (perm_order(x) != sub_order) continue;
            Perm p = x;
            for (long k = 1; k < power; ++k) p = compose(p, x);
            if (p == elt) {
                out.push_back(x);
                break;
            }
        }
    }
    return out;
}

long external_fixed_count(const FujikiInput& in, const Perm& elt) {
    TranslateCache cache(in);
    return external_fixed_count(cache, elt);
}

long external_fixed_count(TranslateCache& cache, const Perm& elt) {
    const FujikiInput& in = cache.input();
    const GroupTable& g = *in.group;
    long ord = perm_order(elt);
    auto [k4, k6] = subgroup_multiplicities(g, elt);

    auto t_of = [&](const Perm& a, const Perm& b) { return cache.at(a, b).t(); };

    if (ord == 6) {
        int t = t_of(elt, elt);
        assert(t <= 2);
        return 2L * (2 - t);
    }
    if (ord == 4) {
        int t = t_of(elt, elt);
        assert(t <= 4);
        return 4L * (4 - t);
    }
    if (ord == 3) {
        long base = 6 - 2 * k6;
        assert(base >= 0);
        int t = t_of(elt, elt);
        assert(base == 0 || t <= base);  // t counts a subset of SpFix theta(g)
        long n = base * (6 + 2 * k6 - t);
        std::vector<Perm> roots = enclosing_cyclic_generators(g, elt, 6);
        assert(static_cast<int>(roots.size()) == k6);
        for (size_t i = 0; i < roots.size(); ++i) {
            for (size_t j = 0; j < roots.size(); ++j) {
                if (i == j) continue;
                int tp = t_of(roots[i], roots[j]);
                assert(tp <= 2);
                n += 2L * (2 - tp);
            }
        }
        assert(n >= 0);
        return n;
    }
    if (ord == 2) {
        long base = 8 - 2 * k6 - 4 * k4;
        assert(base >= 0);
        int t = t_of(elt, elt);
        assert(base == 0 || t <= base);  // t counts a subset of SpFix theta(g)
        long n = base * (8 + 2 * k6 + 4 * k4 - t);
        std::vector<Perm> six = enclosing_cyclic_generators(g, elt, 6);
        assert(static_cast<int>(six.size()) == k6);
        for (size_t i = 0; i < six.size(); ++i) {
            for (size_t j = 0; j < six.size(); ++j) {
                if (i == j) continue;
                int tp = t_of(six[i], six[j]);
                assert(tp <= 2);
                n += 2L * (2 - tp);
            }
        }
        std::vector<Perm> four = enclosing_cyclic_generators(g, elt, 4);
        assert(static_cast<int>(four.size()) == k4);
        for (size_t i = 0; i < four.size(); ++i) {
            for (size_t j = 0; j < four.size(); ++j) {
                if (i == j) continue;
                int tp = t_of(four[i], four[j]);
                assert(tp <= 4);
                n += 4L * (4 - tp);
            }
        }
        n += 16L * k6 * k4;
        assert(n >= 0);
        return n;
    }
    throw std::invalid_argument("element order admits no surface fixed points");
}

WreathElement wreath_embed(const FujikiInput& in, const Perm& g) {
    WreathElement e;
    e.swap = false;
    e.a = g;
    e.b = in.theta->apply(g);
    return e;
}

WreathElement wreath_swap(const FujikiInput& in) {
    WreathElement e;
    e.swap = true;
    e.a = identity_perm(in.group->degree());
    e.b = e.a;
    return e;
}

WreathElement wreath_compose(const WreathElement& x, const WreathElement& y) {
    // (x o y)(p, q) = x(y(p, q)) with (s; a, b)(p, q) = s-swap(a p, b q)
    WreathElement r;
    r.swap = x.swap != y.swap;
    if (!y.swap) {
        r.a = compose(x.a, y.a);
        r.b = compose(x.b, y.b);
    } else {
        r.a = compose(x.b, y.a);
        r.b = compose(x.a, y.b);
    }
    return r;
}

long wreath_order_check(const FujikiInput& in) {
    if (in.n != 2) throw std::invalid_argument("wreath closure is an n = 2 notion");
    const GroupTable& g = *in.group;
    auto key = [&](const WreathElement& e) -> uint64_t {
        int ia = g.index_of(e.a), ib = g.index_of(e.b);
        assert(ia >= 0 && ib >= 0);
        uint64_t n = static_cast<uint64_t>(g.order());
        return (e.swap ? n * n : 0) + static_cast<uint64_t>(ia) * n + static_cast<uint64_t>(ib);
    };
    std::vector<WreathElement> gens;
    for (const Perm& x : g.generators()) gens.push_back(wreath_embed(in, x));
    gens.push_back(wreath_swap(in));

    std::unordered_set<uint64_t> seen;
    WreathElement id;
    id.swap = false;
    id.a = identity_perm(g.degree());
    id.b = id.a;
    std::vector<WreathElement> frontier = {id};
    seen.insert(key(id));
    while (!frontier.empty()) {
        std::vector<WreathElement> next;
        for (const auto& x : frontier) {
            for (const auto& gen : gens) {
                WreathElement y = wreath_compose(x, gen);
                if (seen.insert(key(y)).second) next.push_back(y);
            }
        }
        frontier = std::move(next);
    }
    long order = static_cast<long>(seen.size());
    assert(order == 2L * g.order());
    return order;
}

bool is_primitive_check(const FujikiInput& in) {
    if (in.n < 3) throw std::invalid_argument("primitivity test applies to n >= 3");
    return in.group->is_abelian() && is_valid_involution(*in.theta);
}

}  // namespace fujiki
