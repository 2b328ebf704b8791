#include "fujiki/singularities.hpp"

#include <cassert>
#include <stdexcept>

#include "fujiki/group.hpp"

namespace fujiki {

std::string profile_string(const SingularityProfile& p) {
    static const char* names[] = {"a2", "a3", "a4", "a6", "a8", "a12", "b4", "b6"};
    long values[] = {p.a2, p.a3, p.a4, p.a6, p.a8, p.a12, p.b4, p.b6};
    std::string out;
    for (int i = 0; i < 8; ++i) {
        if (values[i] == 0) continue;
        if (!out.empty()) out += ",";
        out += names[i];
        out += "=";
        out += std::to_string(values[i]);
    }
    return out.empty() ? "-" : out;
}

namespace {

long exact_div(long num, long den) {
    assert(num % den == 0);
    return num / den;
}

}  // namespace

RareCounts count_rare(TranslateCache& cache) {
    const GroupTable& g = *cache.input().group;
    long s8 = 0, s12 = 0, sb4 = 0, sb6 = 0;
    for (const Perm& x : elements_of_order(g, 4, true)) {
        const TranslateSet& ts = cache.at(x, x);
        s8 += ts.count(1, 1, 0);
        sb4 += ts.count(1, 0, 0);
    }
    for (const Perm& x : elements_of_order(g, 6, true)) {
        const TranslateSet& ts = cache.at(x, x);
        s12 += ts.count(1, 1, 0);
        sb6 += ts.count(1, 0, 0);
    }
    RareCounts out;
    out.a8 = exact_div(16 * s8, g.order());
    out.a12 = exact_div(12 * s12, g.order());
    out.b4 = exact_div(16 * sb4, g.order());
    out.b6 = exact_div(12 * sb6, g.order());
    return out;
}

MidCounts count_mid(TranslateCache& cache) {
    const FujikiInput& in = cache.input();
    const GroupTable& g = *in.group;
    long acc6 = 0;  // numerator over |G|
    for (const Perm& x : elements_of_order(g, 3, true)) {
        auto [k4, k6] = subgroup_multiplicities(g, x);
        acc6 += 3L * (6 - 2 * k6) * cache.at(x, x).count(1, -1, 0);
        std::vector<Perm> roots = enclosing_cyclic_generators(g, x, 6);
        assert(static_cast<int>(roots.size()) == k6);
        for (size_t i = 0; i < roots.size(); ++i)
            for (size_t j = 0; j < roots.size(); ++j)
                if (i != j) acc6 += 6L * cache.at(roots[i], roots[j]).count(1, -1, 0);
    }
    for (const Perm& x : elements_of_order(g, 6, true)) {
        const TranslateSet& ts = cache.at(x, x);
        assert(ts.t() <= 2);
        acc6 += 6L * ts.count(0, -1, -1) + 6L * (2 - ts.t());
    }

    long acc4 = 0;
    for (const Perm& x : elements_of_order(g, 2, true)) {
        auto [k4, k6] = subgroup_multiplicities(g, x);
        acc4 += 2L * (8 - 2 * k6 - 4 * k4) * cache.at(x, x).count(1, -1, 0);
        std::vector<Perm> six = enclosing_cyclic_generators(g, x, 6);
        assert(static_cast<int>(six.size()) == k6);
        for (size_t i = 0; i < six.size(); ++i)
            for (size_t j = 0; j < six.size(); ++j)
                if (i != j) acc4 += 4L * cache.at(six[i], six[j]).count(1, -1, 0);
        std::vector<Perm> four = enclosing_cyclic_generators(g, x, 4);
        assert(static_cast<int>(four.size()) == k4);
        for (size_t i = 0; i < four.size(); ++i)
            for (size_t j = 0; j < four.size(); ++j)
                if (i != j) acc4 += 8L * cache.at(four[i], four[j]).count(1, -1, 0);
    }
    for (const Perm& x : elements_of_order(g, 4, true)) {
        const TranslateSet& ts = cache.at(x, x);
        assert(ts.t() <= 4);
        acc4 += 8L * ts.count(0, -1, -1) + 8L * (4 - ts.t());
    }

    MidCounts out;
    out.a6 = exact_div(acc6, g.order());
    out.a4 = exact_div(acc4, g.order());
    return out;
}

CommonCounts count_common(TranslateCache& cache) {
    const FujikiInput& in = cache.input();
    const GroupTable& g = *in.group;

    long acc3 = 0;  // numerator over 2|G|
    for (const Perm& x : elements_of_order(g, 3, true)) {
        auto [k4, k6] = subgroup_multiplicities(g, x);
        acc3 += 3L * external_fixed_count(cache, x);
        acc3 += 3L * (6 - 2 * k6) * cache.at(x, x).count(0, -1, -1);
        acc3 += 12L * (6 - 2 * k6) * cache.at(x, x).count(1, 1, 1);
        std::vector<Perm> roots = enclosing_cyclic_generators(g, x, 6);
        for (size_t i = 0; i < roots.size(); ++i) {
            for (size_t j = 0; j < roots.size(); ++j) {
                if (i == j) continue;
                const TranslateSet& ts = cache.at(roots[i], roots[j]);
                acc3 += 6L * ts.count(0, -1, -1) + 24L * ts.count(1, 1, 1);
            }
        }
    }
    for (const Perm& x : elements_of_order(g, 6, true))
        acc3 += 96L * cache.at(x, x).count(1, 1, 1);

    long acc2 = 0;  // numerator over |G|
    for (const Perm& x : elements_of_order(g, 2, true)) {
        auto [k4, k6] = subgroup_multiplicities(g, x);
        acc2 += external_fixed_count(cache, x);
        acc2 += 1L * (8 - 2 * k6 - 4 * k4) * cache.at(x, x).count(0, -1, -1);
        std::vector<Perm> six = enclosing_cyclic_generators(g, x, 6);
        for (size_t i = 0; i < six.size(); ++i)
            for (size_t j = 0; j < six.size(); ++j)
                if (i != j) acc2 += 2L * cache.at(six[i], six[j]).count(0, -1, -1);
        std::vector<Perm> four = enclosing_cyclic_generators(g, x, 4);
        for (size_t i = 0; i < four.size(); ++i)
            for (size_t j = 0; j < four.size(); ++j)
                if (i != j) acc2 += 4L * cache.at(four[i], four[j]).count(0, -1, -1);
    }
    for (const Perm& x : elements_of_order(g, 6, true))
        acc2 += 12L * cache.at(x, x).count(1, 0, 1);
    for (const Perm& x : elements_of_order(g, 4, true))
        acc2 += 64L * cache.at(x, x).count(1, 1, 1);

    CommonCounts out;
    out.a3 = exact_div(acc3, 2 * g.order());
    out.a2 = exact_div(acc2, g.order());
    return out;
}

SingularityProfile singularity_profile(const FujikiInput& in, bool curated_admissible) {
    if (!curated_admissible)
        throw std::invalid_argument("group is not an admissible symplectic action");
    const GroupTable& g = *in.group;
    for (int i = 0; i < g.order(); ++i) {
        long ord = g.element_order(i);
        if (ord != 1 && ord != 2 && ord != 3 && ord != 4 && ord != 6)
            throw std::invalid_argument("group has an element order outside {1,2,3,4,6}");
    }
    TranslateCache cache(in);
    RareCounts rare = count_rare(cache);
    MidCounts mid = count_mid(cache);
    CommonCounts common = count_common(cache);
    SingularityProfile p;
    p.a2 = common.a2;
    p.a3 = common.a3;
    p.a4 = mid.a4;
    p.a6 = mid.a6;
    p.a8 = rare.a8;
    p.a12 = rare.a12;
    p.b4 = rare.b4;
    p.b6 = rare.b6;
    return p;
}

}  // namespace fujiki
