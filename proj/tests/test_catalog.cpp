#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "fujiki/catalog.hpp"
#include "fujiki/fixedpoints.hpp"
#include "fujiki/invariants.hpp"
#include "fujiki/singularities.hpp"

using namespace fujiki;

namespace {

std::set<std::vector<uint8_t>> element_set(const GroupTable& g) {
    std::set<std::vector<uint8_t>> out;
    for (const Perm& p : g.elements()) out.insert(p.img);
    return out;
}

GroupTable extend(const GroupTable& g, const std::string& creator) {
    std::vector<Perm> gens = g.generators();
    gens.push_back(parse_permutation(creator, g.degree()));
    return close_group(gens);
}

}  // namespace

TEST_CASE("builtin catalog loads and passes its validations") {
    Catalog cat = load_catalog();
    CHECK(cat.schema_version == 1);
    CHECK(cat.groups.size() == 37);
    int admissible = 0, abelian = 0;
    for (const auto& e : cat.groups) {
        admissible += e.admissible;
        GroupTable g = e.build_group();
        CHECK(g.order() == e.small_group.first);
        abelian += g.is_abelian();
    }
    CHECK(admissible == 34);
    CHECK(abelian == 14);
    CHECK(cat.golden.size() == 36);
    CHECK(cat.deformation_facts.size() == 8);
    int proven = 0;
    for (const auto& f : cat.deformation_facts) proven += f.proven;
    CHECK(proven == 5);

    // the three excluded cyclic groups carry elements of unusable order
    for (const char* name : {"C5", "C7", "C8"}) {
        const CatalogEntry* e = cat.find(name);
        REQUIRE(e != nullptr);
        CHECK_FALSE(e->admissible);
    }
    CHECK(cat.find("nope") == nullptr);
    CHECK(cat.find_golden("S4", "") != nullptr);
    CHECK(cat.find_golden("S4", "!~id") == nullptr);
    CHECK(cat.find_golden("C2^4", "") == nullptr);  // off the main table
}

TEST_CASE("catalog entry order induces the golden row order") {
    Catalog cat = load_catalog();
    std::vector<std::pair<std::string, std::string>> expected;
    for (const auto& e : cat.groups)
        for (const auto& c : e.involution_classes)
            if (e.admissible && c.in_main_table) expected.emplace_back(e.name, c.label);
    REQUIRE(expected.size() == cat.golden.size());
    for (size_t i = 0; i < expected.size(); ++i) {
        CHECK(cat.golden[i].group == expected[i].first);
        CHECK(cat.golden[i].klass == expected[i].second);
    }
}

TEST_CASE("abelian entries match the dimension-six series data") {
    Catalog cat = load_catalog();
    const auto& rows = series_rows();
    int matched = 0;
    for (const auto& e : cat.groups) {
        GroupTable g = e.build_group();
        if (!g.is_abelian()) continue;
        auto it = std::find_if(rows.begin(), rows.end(),
                               [&](const SeriesRow& r) { return r.name == e.name; });
        REQUIRE(it != rows.end());
        CHECK(it->order == e.small_group.first);
        CHECK(it->invariant_rank == e.xiao_rank);
        ++matched;
    }
    CHECK(matched == static_cast<int>(rows.size()));
}

TEST_CASE("catalog can be loaded from a file and tampering is rejected") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path();

    fs::path copy = dir / "catalog_copy.json";
    {
        std::ofstream out(copy);
        out << builtin_catalog_json();
    }
    Catalog cat = load_catalog(copy.string());
    CHECK(cat.groups.size() == 37);

    fs::path garbage = dir / "catalog_garbage.json";
    {
        std::ofstream out(garbage);
        out << "{not json";
    }
    CHECK_THROWS_AS(load_catalog(garbage.string()), std::runtime_error);

    // environment override is honoured when no path is given
    setenv("FUJIKI_CATALOG", garbage.string().c_str(), 1);
    CHECK_THROWS_AS(load_catalog(), std::runtime_error);
    CHECK(load_catalog(copy.string()).groups.size() == 37);  // explicit path wins
    unsetenv("FUJIKI_CATALOG");

    // a wrong Betti number must fail the rank + divisor cross-check
    nlohmann::json doc = nlohmann::json::parse(builtin_catalog_json());
    doc["golden_table"][0]["b2"] = doc["golden_table"][0]["b2"].get<long>() + 1;
    fs::path tampered = dir / "catalog_tampered.json";
    {
        std::ofstream out(tampered);
        out << doc.dump();
    }
    CHECK_THROWS_AS(load_catalog(tampered.string()), std::runtime_error);
}

TEST_CASE("named overgroups close to their advertised orders") {
    CHECK(builtin_overgroup("Q1536").order() == 1536);
    CHECK(builtin_overgroup("Q1536").degree() == 64);
    CHECK(builtin_overgroup("F384").order() == 384);
    CHECK(builtin_overgroup("AGL2F3").order() == 432);
    CHECK(builtin_overgroup("AGL2F3").degree() == 9);
    CHECK(builtin_overgroup("W2880").order() == 2880);
    CHECK(builtin_overgroup("W2880").degree() == 16);
    CHECK(builtin_overgroup("H192").order() == 192);
    CHECK(builtin_overgroup("C2p4C6").order() == 96);
    CHECK_THROWS_AS(builtin_overgroup("nope"), std::invalid_argument);

    // the big coordinate group contains the determinant-one subgroup
    const GroupTable& q = builtin_overgroup("Q1536");
    const GroupTable& f = builtin_overgroup("F384");
    for (const Perm& gen : f.generators()) CHECK(q.contains(gen));
}

TEST_CASE("descriptor involutions build and reject bad input") {
    Catalog cat = load_catalog();
    for (const auto& e : cat.groups) {
        GroupTable g = e.build_group();
        for (const auto& d : e.involution_classes) {
            GroupInvolution theta = descriptor_involution(g, d);
            CHECK(is_valid_involution(theta));
            if (d.kind == "identity")
                for (int i = 0; i < g.order(); ++i) CHECK(theta.apply_idx(i) == i);
            if (d.kind == "inversion")
                for (int i = 0; i < g.order(); ++i) CHECK(theta.apply_idx(i) == g.inverse(i));
        }
    }

    GroupTable a4 = cat.find("A4")->build_group();
    InvolutionDescriptor bad;
    bad.kind = "conjugation";
    bad.conjugator = "(0,1,2)";  // order three, squares to a nontrivial map
    CHECK_THROWS_AS(descriptor_involution(a4, bad), std::invalid_argument);
    bad.kind = "nonsense";
    CHECK_THROWS_AS(descriptor_involution(a4, bad), std::invalid_argument);
}

TEST_CASE("generator isomorphism spans and verifies the full table") {
    Catalog cat = load_catalog();
    GroupTable s4 = cat.find("S4")->build_group();

    // relabelling the points is an isomorphism onto the conjugate copy
    Perm c = parse_permutation("(0,1,2,3)", 4);
    std::vector<Perm> src = s4.generators(), img;
    for (const Perm& p : src) img.push_back(conjugate(p, c));
    GroupTable dst = close_group(img);
    std::vector<int> phi = generator_isomorphism(s4, src, dst, img);
    REQUIRE_FALSE(phi.empty());
    std::set<int> values(phi.begin(), phi.end());
    CHECK(values.size() == static_cast<size_t>(s4.order()));
    for (int i = 0; i < s4.order(); ++i)
        CHECK(s4.element_order(i) == dst.element_order(phi[static_cast<size_t>(i)]));

    // transported involutions keep their fixed structure
    GroupInvolution id1 = identity_involution(s4);
    GroupInvolution id2 = transport_involution(id1, phi, dst);
    CHECK(is_valid_involution(id2));
    CHECK(id2.fixed_indices().size() == id1.fixed_indices().size());

    // a cyclic group cannot map onto an elementary abelian one
    GroupTable c4 = cat.find("C4")->build_group();
    GroupTable v4 = cat.find("C2^2")->build_group();
    std::vector<int> none =
        generator_isomorphism(c4, c4.generators(), v4, {parse_permutation("(0,1)(2,3)", 4)});
    CHECK(none.empty());
}

TEST_CASE("classification recovers the expected class structure") {
    Catalog cat = load_catalog();
    struct Expect {
        const char* name;
        size_t bases_cand;
        size_t classes;
        int ambient_cand;  // -1: skip the ambient method
    };
    const Expect table[] = {
        {"S3", 4, 1, 4},        {"D4", 3, 1, 3},        {"A4", 6, 1, 6},
        {"S4", 10, 1, 10},      {"D6", 4, 1, 4},        {"C2xD4", 7, 2, 3},
        {"C3xS3", 4, 1, 4},     {"C2xA4", 6, 1, 6},     {"C3^2:C4", 12, 1, 12},
        {"S3^2", 16, 1, 16},    {"C2xS4", 10, 1, 10},   {"C3xA4", 6, 1, 6},
        {"C2^2:C4", 3, 1, 3},   {"C2^3:C4", 8, 1, 8},   {"C2^2xA4", 6, 1, 6},
        {"C2^4:C6", 24, 1, 24}, {"A4^2", 36, 1, 36},    {"S3wrC2", 22, 1, 22},
        {"C2^4:S3", 76, 2, 76}, {"A3,3", 46, 2, 46},    {"C2^2wrC2", 17, 2, 9},
        {"C4^2:C3", 24, 1, -1}, {"C2^2:A4", 120, 1, -1},
    };
    for (const Expect& x : table) {
        CAPTURE(x.name);
        const CatalogEntry* e = cat.find(x.name);
        REQUIRE(e != nullptr);
        GroupTable g = e->build_group();
        EntryClassification r = classify_entry(g, *e, EnumerationMethod::bases);
        CHECK(r.candidates.size() == x.bases_cand);
        CHECK(r.classes.size() == x.classes);
        REQUIRE(r.descriptor_class.size() == e->involution_classes.size());
        // stored descriptors must land in distinct classes and cover them all
        std::set<int> hit;
        for (int ci : r.descriptor_class) {
            CHECK(ci >= 0);
            hit.insert(ci);
        }
        CHECK(hit.size() == x.classes);
        if (x.ambient_cand < 0) continue;
        EntryClassification a = classify_entry(g, *e, EnumerationMethod::ambient);
        CHECK(a.candidates.size() == static_cast<size_t>(x.ambient_cand));
        if (std::string(x.name) == "C2xD4") {
            // the twisted family needs the abstract method; the point action
            // of this embedding cannot see it
            CHECK(a.classes.size() == 1);
            CHECK(a.descriptor_class[1] == -1);
        } else {
            CHECK(a.classes.size() == x.classes);
        }
    }
}

TEST_CASE("every abelian entry has the inversion as its only class") {
    Catalog cat = load_catalog();
    for (const auto& e : cat.groups) {
        GroupTable g = e.build_group();
        if (!g.is_abelian()) continue;
        CAPTURE(e.name);
        EntryClassification r = classify_entry(g, e, EnumerationMethod::bases);
        CHECK(r.candidates.size() == 1);
        CHECK(r.classes.size() == 1);
        for (int i = 0; i < g.order(); ++i)
            CHECK(r.candidates[0].apply_idx(i) == g.inverse(i));
    }
}

TEST_CASE("order eighteen group: both classes and the recorded merges") {
    Catalog cat = load_catalog();
    const CatalogEntry* e = cat.find("A3,3");
    REQUIRE(e != nullptr);
    GroupTable g = e->build_group();
    CHECK(g.order() == 18);

    // each stored creator makes an index-two overgroup; two of them are
    // genuinely different subgroups of the point stabiliser
    std::set<std::set<std::vector<uint8_t>>> distinct;
    for (const auto& b : e->bridges) {
        GroupTable h = extend(g, b.creator);
        CHECK(h.order() == 36);
        distinct.insert(element_set(h));
    }
    CHECK(distinct.size() >= 2);

    // without the bridges the candidates split further than two classes
    EntryClassification plain = classify_entry(g, CatalogEntry{.name = e->name,
                                                               .small_group = e->small_group,
                                                               .degree = e->degree,
                                                               .generators = e->generators,
                                                               .xiao_rank = e->xiao_rank,
                                                               .admissible = true},
                                               EnumerationMethod::bases);
    CHECK(plain.classes.size() > 2);
    EntryClassification full = classify_entry(g, *e, EnumerationMethod::bases);
    CHECK(full.classes.size() == 2);

    // the naive representative is valid but inequivalent to the identity
    GroupInvolution naive =
        *make_conjugation_involution(g, parse_permutation("(0,5)(1,2)(3,7)", 9));
    GroupInvolution id = identity_involution(g);
    CHECK(is_valid_involution(naive));
    CHECK_FALSE(are_equivalent(naive, id, g));
    SingularityProfile pn = singularity_profile(make_input(g, naive, 2), true);
    SingularityProfile pi = singularity_profile(make_input(g, id, 2), true);
    CHECK(pn.a2 == 28);
    CHECK(pn.a3 == 20);
    CHECK(pi.a2 == 28);
    CHECK(pi.a3 == 12);
}

TEST_CASE("witness search in the affine overgroup reproduces a recorded merge") {
    Catalog cat = load_catalog();
    GroupTable g = cat.find("A3,3")->build_group();
    const GroupTable& agl = builtin_overgroup("AGL2F3");
    for (const Perm& gen : g.generators()) CHECK(agl.contains(gen));
    // the group is normal in the affine group, so every element is usable
    for (const Perm& a : agl.generators())
        for (const Perm& b : g.generators()) CHECK(g.contains(conjugate(b, a)));

    auto theta_a = extend_generator_inversion(
        g, {parse_permutation("(0,1,8)(2,3,4)(5,6,7)", 9), parse_permutation("(1,8)(2,7)(3,6)(4,5)", 9),
            parse_permutation("(0,5)(1,7)(2,3)(6,8)", 9)});
    auto theta_b = extend_generator_inversion(
        g, {parse_permutation("(0,1)(2,5)(3,7)(4,6)", 9), parse_permutation("(0,1,8)(2,3,4)(5,6,7)", 9),
            parse_permutation("(0,5)(1,7)(2,3)(6,8)", 9)});
    REQUIRE(theta_a.has_value());
    REQUIRE(theta_b.has_value());
    CHECK_FALSE(are_equivalent(*theta_a, *theta_b, g));

    std::optional<Perm> found = overgroup_bridge_search(g, agl, *theta_a, *theta_b, 36);
    REQUIRE(found.has_value());
    GroupTable merged = extend(g, format_permutation(*found));
    CHECK(merged.order() == 36);
    // the creator generates the same index-two overgroup as the recorded one
    GroupTable recorded = extend(g, "(0,4,8,3,1,2)(5,6,7)");
    CHECK(recorded.order() == 36);
    CHECK(element_set(merged) == element_set(recorded));
}

TEST_CASE("twisted class of the sixteen element product group") {
    Catalog cat = load_catalog();
    const CatalogEntry* e = cat.find("C2xD4");
    GroupTable g = e->build_group();
    GroupInvolution id = identity_involution(g);
    GroupInvolution tw = descriptor_involution(g, e->involution_classes[1]);
    CHECK_FALSE(are_equivalent(tw, id, g));

    SingularityProfile pt = singularity_profile(make_input(g, tw, 2), true);
    SingularityProfile pi = singularity_profile(make_input(g, id, 2), true);
    CHECK(pt.a2 == 50);
    CHECK(pt.b4 == 2);
    CHECK(pi.a2 == 36);
    CHECK_FALSE(pt == pi);

    // the twist mixes the direct factors: the central involution of the
    // two element factor is carried into the dihedral part
    Perm a = parse_permutation("(0,1,2,3)", 6);
    Perm c = parse_permutation("(4,5)", 6);
    int ai = g.index_of(a), ci = g.index_of(c);
    REQUIRE(ai >= 0);
    REQUIRE(ci >= 0);
    CHECK(tw.apply_idx(ai) == ai);
    CHECK(tw.apply_idx(ci) == g.index_of(compose(compose(a, a), c)));
    CHECK(tw.apply_idx(ci) != ci);
}

TEST_CASE("deformation dedup folds the proven coincidences") {
    Catalog cat = load_catalog();
    DedupResult d = deformation_dedup(cat);
    CHECK(d.rows.size() == 32);
    CHECK(d.couples.size() == 3);
    CHECK(d.minimum_classes == 29);
    CHECK(d.headline == ">= 29 (+4 in dimension 6) = 33");

    std::set<std::pair<std::string, std::string>> keys;
    for (const auto& r : d.rows) keys.insert({r.group, r.klass});
    // absorbed rows are gone, their partners stay
    CHECK_FALSE(keys.count({"C2^3", ""}));
    CHECK_FALSE(keys.count({"C2xD4", "~id"}));
    CHECK_FALSE(keys.count({"C2^2wrC2", "~id"}));
    CHECK_FALSE(keys.count({"C2^4:S3", "~id"}));
    CHECK(keys.count({"C2", ""}));
    CHECK(keys.count({"C2^2", ""}));
    CHECK(keys.count({"S3", ""}));

    std::set<std::set<std::string>> couples;
    for (const auto& f : d.couples)
        couples.insert({f.members[0].first + "/" + f.members[0].second,
                        f.members[1].first + "/" + f.members[1].second});
    std::set<std::set<std::string>> expected = {{"C2^2wrC2/!~id", "D4/"},
                                                {"C2^2:C4/", "C4/"},
                                                {"C2xS4/", "D6/"}};
    CHECK(couples == expected);
}
