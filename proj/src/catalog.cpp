#include "fujiki/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "json.hpp"

#include "fujiki/fixedpoints.hpp"

namespace fujiki {

using nlohmann::json;

GroupTable CatalogEntry::build_group() const {
    std::vector<Perm> gens;
    gens.reserve(generators.size());
    for (const auto& s : generators) gens.push_back(parse_permutation(s, degree));
    return close_group(gens);
}

const CatalogEntry* Catalog::find(const std::string& name) const {
    for (const auto& e : groups)
        if (e.name == name) return &e;
    return nullptr;
}

const GoldenRow* Catalog::find_golden(const std::string& group, const std::string& klass) const {
    for (const auto& r : golden)
        if (r.group == group && r.klass == klass) return &r;
    return nullptr;
}

GroupInvolution descriptor_involution(const GroupTable& g, const InvolutionDescriptor& d) {
    std::optional<GroupInvolution> theta;
    if (d.kind == "identity") {
        theta = identity_involution(g);
    } else if (d.kind == "inversion") {
        theta = inversion_automorphism(g);
    } else if (d.kind == "conjugation") {
        theta = make_conjugation_involution(g, parse_permutation(d.conjugator, g.degree()));
    } else if (d.kind == "generator_family") {
        std::vector<Perm> fam;
        fam.reserve(d.family.size());
        for (const auto& s : d.family) fam.push_back(parse_permutation(s, g.degree()));
        theta = extend_generator_inversion(g, fam);
    } else {
        throw std::invalid_argument("unknown involution kind: " + d.kind);
    }
    if (!theta) throw std::invalid_argument("descriptor does not define an involution");
    if (!is_valid_involution(*theta))
        throw std::invalid_argument("descriptor involution is not valid");
    return *theta;
}

std::vector<int> generator_isomorphism(const GroupTable& src, const std::vector<Perm>& src_gens,
                                       const GroupTable& dst, const std::vector<Perm>& dst_gens) {
    if (src.order() != dst.order() || src_gens.size() != dst_gens.size()) return {};
    std::vector<int> phi(static_cast<size_t>(src.order()), -1);
    phi[static_cast<size_t>(src.identity_index())] = dst.identity_index();
    std::vector<int> queue{src.identity_index()};
    std::vector<int> gsrc, gdst;
    for (const auto& p : src_gens) gsrc.push_back(src.index_of(p));
    for (const auto& p : dst_gens) gdst.push_back(dst.index_of(p));
    for (int gi : gsrc)
        if (gi < 0) return {};
    for (int gi : gdst)
        if (gi < 0) return {};
    // span the Cayley graph; any relation conflict kills the assignment
    for (size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        for (size_t k = 0; k < gsrc.size(); ++k) {
            int nx = src.mult(x, gsrc[k]);
            int ny = dst.mult(phi[static_cast<size_t>(x)], gdst[k]);
            if (phi[static_cast<size_t>(nx)] < 0) {
                phi[static_cast<size_t>(nx)] = ny;
                queue.push_back(nx);
            } else if (phi[static_cast<size_t>(nx)] != ny) {
                return {};
            }
        }
    }
    std::vector<char> seen(static_cast<size_t>(dst.order()), 0);
    for (int v : phi) {
        if (v < 0 || seen[static_cast<size_t>(v)]) return {};
        seen[static_cast<size_t>(v)] = 1;
    }
    for (int i = 0; i < src.order(); ++i)
        for (int j = 0; j < src.order(); ++j)
            if (phi[static_cast<size_t>(src.mult(i, j))] !=
                dst.mult(phi[static_cast<size_t>(i)], phi[static_cast<size_t>(j)]))
                return {};
    return phi;
}

GroupInvolution transport_involution(const GroupInvolution& theta, const std::vector<int>& phi,
                                     const GroupTable& dst) {
    std::vector<int> inv(phi.size());
    for (size_t i = 0; i < phi.size(); ++i) inv[static_cast<size_t>(phi[i])] = static_cast<int>(i);
    GroupInvolution out;
    out.group = &dst;
    out.map.resize(phi.size());
    out.kind = GroupInvolution::Kind::generator_family;
    for (size_t x = 0; x < phi.size(); ++x)
        out.map[x] = static_cast<uint16_t>(
            phi[static_cast<size_t>(theta.map[static_cast<size_t>(inv[x])])]);
    return out;
}

namespace {

// 64 points indexed 16c + 4b + a over (a, b, c) in (Z/4)^3; each generator
// is an affine map of the exponent vector.
Perm coordinate_map(int (*fa)(int, int, int), int (*fb)(int, int, int), int (*fc)(int, int, int)) {
    std::vector<uint8_t> img(64);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) {
                int a2 = ((fa(a, b, c) % 4) + 4) % 4;
                int b2 = ((fb(a, b, c) % 4) + 4) % 4;
                int c2 = ((fc(a, b, c) % 4) + 4) % 4;
                img[static_cast<size_t>(16 * c + 4 * b + a)] =
                    static_cast<uint8_t>(16 * c2 + 4 * b2 + a2);
            }
    return Perm{img};
}

struct CoordinateGenerators {
    Perm u, v, w, t1, t2, t3;
};

CoordinateGenerators coordinate_generators() {
    CoordinateGenerators g;
    g.u = coordinate_map([](int a, int, int) { return a + 1; },
                         [](int, int b, int) { return b; }, [](int, int, int c) { return c; });
    g.v = coordinate_map([](int a, int, int) { return a; },
                         [](int, int b, int) { return b + 1; }, [](int, int, int c) { return c; });
    g.w = coordinate_map([](int a, int, int) { return a; }, [](int, int b, int) { return b; },
                         [](int, int, int c) { return c + 1; });
    g.t1 = coordinate_map([](int, int b, int) { return b; }, [](int a, int, int) { return a; },
                          [](int, int, int c) { return c; });
    g.t2 = coordinate_map([](int a, int, int) { return a; }, [](int, int, int c) { return c; },
                          [](int, int b, int) { return b; });
    g.t3 = coordinate_map([](int a, int, int c) { return a - c; },
                          [](int, int b, int c) { return b - c; },
                          [](int, int, int c) { return -c; });
    return g;
}

GroupTable build_overgroup(const std::string& name) {
    auto close_strings = [](const std::vector<std::string>& cyc, int degree) {
        std::vector<Perm> gens;
        gens.reserve(cyc.size());
        for (const auto& s : cyc) gens.push_back(parse_permutation(s, degree));
        return close_group(gens);
    };
    if (name == "Q1536" || name == "F384") {
        CoordinateGenerators c = coordinate_generators();
        if (name == "Q1536") return close_group({c.u, c.v, c.w, c.t1, c.t2, c.t3});
        // determinant-one words in the coordinate generators
        return close_group({compose(c.u, invert(c.v)), compose(c.v, invert(c.w)),
                            compose(compose(c.u, c.u), c.t1), compose(c.t1, c.t2),
                            compose(c.t2, c.t3)});
    }
    if (name == "AGL2F3")
        return close_strings({"(0,5,3,4,1,2,7,6)", "(0,1,8)(2,3,4)(5,6,7)", "(2,3,4)(5,7,6)",
                              "(0,3,6)(1,4,7)(2,5,8)"},
                             9);
    if (name == "W2880")
        return close_strings({"(0,8)(1,9)(2,10)(3,11)(4,14)(5,15)(6,12)(7,13)",
                              "(0,11,14)(1,9,13)(2,8,15)(3,10,12)(4,6,5)",
                              "(0,10)(1,11)(2,8)(3,9)(4,12)(5,13)(6,14)(7,15)",
                              "(0,1)(2,3)(8,10)(9,11)(12,15)(13,14)",
                              "(0,2)(1,3)(8,11)(9,10)(12,13)(14,15)",
                              "(0,4)(1,8)(2,13)(5,14)(6,11)(9,15)"},
                             16);
    if (name == "H192")
        return close_strings({"(0,7)(1,2)", "(0,1,2)(4,5,6)", "(0,4)(1,6)(2,5)(3,7)", "(2,7)(5,6)"},
                             8);
    if (name == "C2p4C6")
        return close_strings({"(0,2)(1,7)(3,5)(4,6)", "(3,5)(4,6)", "(0,7)(1,2)(3,4)(5,6)",
                              "(0,1,2)(3,5,4)", "(0,4)(1,5)(2,6)(3,7)"},
                             8);
    throw std::invalid_argument("unknown overgroup: " + name);
}

int expected_overgroup_order(const std::string& name) {
    if (name == "F384") return 384;
    if (name == "Q1536") return 1536;
    if (name == "AGL2F3") return 432;
    if (name == "W2880") return 2880;
    if (name == "H192") return 192;
    if (name == "C2p4C6") return 96;
    return 0;
}

}  // namespace

const GroupTable& builtin_overgroup(const std::string& name) {
    static std::map<std::string, GroupTable> cache;
    auto it = cache.find(name);
    if (it == cache.end()) {
        GroupTable g = build_overgroup(name);
        if (g.order() != expected_overgroup_order(name))
            throw std::runtime_error("overgroup " + name + " closed to unexpected order " +
                                     std::to_string(g.order()));
        it = cache.emplace(name, std::move(g)).first;
    }
    return it->second;
}

namespace {

SingularityProfile parse_profile(const json& j) {
    SingularityProfile p;
    p.a2 = j.value("a2", 0L);
    p.a3 = j.value("a3", 0L);
    p.a4 = j.value("a4", 0L);
    p.a6 = j.value("a6", 0L);
    p.a8 = j.value("a8", 0L);
    p.a12 = j.value("a12", 0L);
    p.b4 = j.value("b4", 0L);
    p.b6 = j.value("b6", 0L);
    return p;
}

Catalog parse_catalog(const json& doc) {
    Catalog cat;
    cat.schema_version = doc.at("schema_version").get<int>();
    for (const auto& jg : doc.at("groups")) {
        CatalogEntry e;
        e.name = jg.at("name").get<std::string>();
        e.small_group = {jg.at("small_group").at(0).get<int>(),
                         jg.at("small_group").at(1).get<int>()};
        e.degree = jg.at("degree").get<int>();
        e.generators = jg.at("generators").get<std::vector<std::string>>();
        e.xiao_rank = jg.at("xiao_rank").get<int>();
        e.admissible = jg.at("admissible").get<bool>();
        for (const auto& jc : jg.at("involution_classes")) {
            InvolutionDescriptor d;
            d.label = jc.at("label").get<std::string>();
            d.kind = jc.at("kind").get<std::string>();
            d.conjugator = jc.value("conjugator", "");
            d.family = jc.value("family", std::vector<std::string>{});
            d.in_main_table = jc.at("in_main_table").get<bool>();
            e.involution_classes.push_back(std::move(d));
        }
        if (jg.contains("bridges"))
            for (const auto& jb : jg.at("bridges"))
                e.bridges.push_back(
                    {jb.at("creator").get<std::string>(), jb.at("order").get<int>()});
        if (jg.contains("classification")) {
            const auto& jc = jg.at("classification");
            ClassificationSpec cs;
            cs.source_generators = jc.at("source_generators").get<std::vector<std::string>>();
            cs.images = jc.at("images").get<std::vector<std::string>>();
            cs.overgroup = jc.at("overgroup").get<std::string>();
            cs.target_order = jc.at("target_order").get<int>();
            e.classification = std::move(cs);
        }
        e.notes = jg.value("notes", "");
        cat.groups.push_back(std::move(e));
    }
    for (const auto& jr : doc.at("golden_table")) {
        GoldenRow r;
        r.group = jr.at("group").get<std::string>();
        r.klass = jr.at("class").get<std::string>();
        r.b2 = jr.at("b2").get<long>();
        r.profile = parse_profile(jr.at("profile"));
        r.b4 = jr.at("b4").get<long>();
        r.chi = jr.at("chi").get<long>();
        r.c4 = parse_rational(jr.at("c4").get<std::string>());
        r.c2sq = parse_rational(jr.at("c2sq").get<std::string>());
        r.cbar = parse_rational(jr.at("cbar").get<std::string>());
        cat.golden.push_back(std::move(r));
    }
    for (const auto& jf : doc.at("deformation_facts")) {
        DeformationFact f;
        std::string kind = jf.at("kind").get<std::string>();
        if (kind != "proven" && kind != "candidate")
            throw std::runtime_error("unknown deformation fact kind: " + kind);
        f.proven = kind == "proven";
        for (const auto& jm : jf.at("members"))
            f.members.emplace_back(jm.at(0).get<std::string>(), jm.at(1).get<std::string>());
        f.note = jf.value("note", "");
        cat.deformation_facts.push_back(std::move(f));
    }
    return cat;
}

void validate_catalog(const Catalog& cat) {
    auto fail = [](const std::string& what) { throw std::runtime_error("catalog: " + what); };
    if (cat.schema_version != 1)
        fail("unsupported schema version " + std::to_string(cat.schema_version));

    std::map<std::string, GroupTable> built;
    std::set<std::string> names;
    for (const auto& e : cat.groups) {
        if (!names.insert(e.name).second) fail("duplicate group name " + e.name);
        GroupTable g = e.build_group();
        if (g.order() != e.small_group.first)
            fail(e.name + ": generators close to order " + std::to_string(g.order()) +
                 ", expected " + std::to_string(e.small_group.first));
        std::set<std::string> labels;
        for (const auto& d : e.involution_classes) {
            if (!labels.insert(d.label).second) fail(e.name + ": duplicate class label");
            try {
                descriptor_involution(g, d);
            } catch (const std::exception& ex) {
                fail(e.name + " class '" + d.label + "': " + ex.what());
            }
        }
        for (const auto& b : e.bridges) {
            std::vector<Perm> gens = g.generators();
            gens.push_back(parse_permutation(b.creator, e.degree));
            GroupTable h = close_group(gens);
            if (h.order() != b.order)
                fail(e.name + ": bridge " + b.creator + " closes to order " +
                     std::to_string(h.order()) + ", expected " + std::to_string(b.order));
        }
        if (e.classification) {
            if (e.classification->source_generators.size() != e.classification->images.size())
                fail(e.name + ": classification generator/image length mismatch");
            std::vector<Perm> src;
            for (const auto& s : e.classification->source_generators) {
                Perm p = parse_permutation(s, e.degree);
                if (!g.contains(p)) fail(e.name + ": classification source generator not in group");
                src.push_back(p);
            }
            if (close_group(src).order() != g.order())
                fail(e.name + ": classification source generators do not generate the group");
            if (expected_overgroup_order(e.classification->overgroup) == 0)
                fail(e.name + ": unknown overgroup " + e.classification->overgroup);
        }
        built.emplace(e.name, std::move(g));
    }

    for (const auto& r : cat.golden) {
        const CatalogEntry* e = cat.find(r.group);
        if (!e) fail("golden row references unknown group " + r.group);
        if (!e->admissible) fail("golden row references non-admissible group " + r.group);
        const InvolutionDescriptor* d = nullptr;
        for (const auto& c : e->involution_classes)
            if (c.label == r.klass) d = &c;
        if (!d) fail(r.group + ": golden row references unknown class '" + r.klass + "'");
        if (!d->in_main_table)
            fail(r.group + " class '" + r.klass + "': golden row for a class marked off-table");
        const GroupTable& g = built.at(r.group);
        GroupInvolution theta = descriptor_involution(g, *d);
        FujikiInput in = make_input(g, theta, 2);
        long div = fixed_surface_orbit_count(in);
        if (e->xiao_rank + div != r.b2)
            fail(r.group + " class '" + r.klass + "': rank " + std::to_string(e->xiao_rank) +
                 " + divisors " + std::to_string(div) + " != b2 " + std::to_string(r.b2));
    }

    for (const auto& f : cat.deformation_facts) {
        if (f.members.empty() || f.members.size() > 2) fail("deformation fact member count");
        if (!f.proven && f.members.size() != 2) fail("candidate fact must pair two rows");
        const GoldenRow* first = nullptr;
        for (const auto& [group, klass] : f.members) {
            const CatalogEntry* e = cat.find(group);
            if (!e) fail("deformation fact references unknown group " + group);
            bool found = false;
            for (const auto& c : e->involution_classes) found = found || c.label == klass;
            if (!found) fail(group + ": deformation fact references unknown class '" + klass + "'");
            const GoldenRow* r = cat.find_golden(group, klass);
            if (f.members.size() == 2) {
                if (!r) fail(group + ": deformation fact member has no golden row");
                if (first && (first->b2 != r->b2 || !(first->profile == r->profile)))
                    fail("deformation fact pairs rows with different b2 or profile");
                first = r;
            }
        }
    }
}

}  // namespace

Catalog load_catalog(const std::string& path) {
    std::string text;
    std::string source = path;
    if (source.empty()) {
        const char* env = std::getenv("FUJIKI_CATALOG");
        if (env && *env) source = env;
    }
    if (source.empty()) {
        text = builtin_catalog_json();
    } else {
        std::ifstream in(source);
        if (!in) throw std::runtime_error("cannot open catalog file: " + source);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& ex) {
        throw std::runtime_error(std::string("catalog parse error: ") + ex.what());
    }
    Catalog cat;
    try {
        cat = parse_catalog(doc);
    } catch (const json::exception& ex) {
        throw std::runtime_error(std::string("catalog schema error: ") + ex.what());
    }
    validate_catalog(cat);
    return cat;
}

namespace {

class UnionFind {
  public:
    explicit UnionFind(size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    size_t find(size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(size_t a, size_t b) { parent_[find(a)] = find(b); }

  private:
    std::vector<size_t> parent_;
};

}  // namespace

EntryClassification classify_entry(const GroupTable& g, const CatalogEntry& entry,
                                   EnumerationMethod enumeration) {
    EntryClassification out;
    out.candidates = enumerate_valid_involutions(g, enumeration);
    std::map<std::vector<uint16_t>, size_t> index;
    for (size_t i = 0; i < out.candidates.size(); ++i) index.emplace(out.candidates[i].map, i);
    UnionFind uf(out.candidates.size());

    std::vector<GroupTable> bridge_tables;
    for (const auto& b : entry.bridges) {
        std::vector<Perm> gens = g.generators();
        gens.push_back(parse_permutation(b.creator, g.degree()));
        bridge_tables.push_back(close_group(gens));
    }
    std::vector<const GroupTable*> bridges;
    bridges.reserve(bridge_tables.size());
    for (const auto& b : bridge_tables) bridges.push_back(&b);

    for (const auto& c : classify_involutions(out.candidates, bridges)) {
        size_t first = index.at(c.members.front().map);
        for (const auto& m : c.members) uf.unite(first, index.at(m.map));
    }

    if (entry.classification) {
        const ClassificationSpec& cs = *entry.classification;
        const GroupTable& ov = builtin_overgroup(cs.overgroup);
        std::vector<Perm> src, img;
        for (const auto& s : cs.source_generators) src.push_back(parse_permutation(s, g.degree()));
        for (const auto& s : cs.images) img.push_back(parse_permutation(s, ov.degree()));
        GroupTable dst = close_group(img);
        std::vector<int> phi = generator_isomorphism(g, src, dst, img);
        if (phi.empty())
            throw std::runtime_error(entry.name +
                                     ": stored generator images do not define an isomorphism");
        std::vector<GroupInvolution> moved;
        moved.reserve(out.candidates.size());
        for (const auto& th : out.candidates) moved.push_back(transport_involution(th, phi, dst));
        if (cs.target_order == 0) {
            std::map<std::vector<uint16_t>, size_t> moved_index;
            for (size_t i = 0; i < moved.size(); ++i) moved_index.emplace(moved[i].map, i);
            for (const auto& c : classify_involutions(moved, {&ov})) {
                size_t first = moved_index.at(c.members.front().map);
                for (const auto& m : c.members) uf.unite(first, moved_index.at(m.map));
            }
        } else {
            // one representative per current class, merged through subgroups
            // of the target order
            std::vector<size_t> reps;
            for (size_t i = 0; i < moved.size(); ++i)
                if (uf.find(i) == i) reps.push_back(i);
            for (size_t a = 0; a < reps.size(); ++a)
                for (size_t b = a + 1; b < reps.size(); ++b) {
                    if (uf.find(reps[a]) == uf.find(reps[b])) continue;
                    if (overgroup_bridge_search(dst, ov, moved[reps[a]], moved[reps[b]],
                                                cs.target_order))
                        uf.unite(reps[a], reps[b]);
                }
        }
    }

    std::map<size_t, std::vector<size_t>> grouped;
    for (size_t i = 0; i < out.candidates.size(); ++i) grouped[uf.find(i)].push_back(i);
    for (const auto& [root, members] : grouped) {
        InvolutionClass c;
        for (size_t i : members) c.members.push_back(out.candidates[i]);
        c.representative = c.members.front();  // candidates are sorted by map
        out.classes.push_back(std::move(c));
    }
    std::sort(out.classes.begin(), out.classes.end(),
              [](const InvolutionClass& a, const InvolutionClass& b) {
                  return a.representative.map < b.representative.map;
              });

    for (const auto& d : entry.involution_classes) {
        GroupInvolution th = descriptor_involution(g, d);
        int ci = -1;
        for (size_t c = 0; c < out.classes.size() && ci < 0; ++c)
            for (const auto& m : out.classes[c].members)
                if (m.map == th.map) {
                    ci = static_cast<int>(c);
                    break;
                }
        out.descriptor_class.push_back(ci);
    }
    return out;
}

DedupResult deformation_dedup(const Catalog& cat) {
    DedupResult out;
    std::set<std::pair<std::string, std::string>> absorbed;
    for (const auto& f : cat.deformation_facts)
        if (f.proven && f.members.size() == 2) absorbed.insert(f.members.front());
    for (const auto& r : cat.golden)
        if (!absorbed.count({r.group, r.klass})) out.rows.push_back(r);

    for (size_t i = 0; i < out.rows.size(); ++i)
        for (size_t j = i + 1; j < out.rows.size(); ++j) {
            const GoldenRow& a = out.rows[i];
            const GoldenRow& b = out.rows[j];
            if (a.b2 != b.b2 || !(a.profile == b.profile)) continue;
            DeformationFact f;
            f.proven = false;
            f.members = {{a.group, a.klass}, {b.group, b.klass}};
            f.note = "equal Betti number and singularity profile";
            out.couples.push_back(std::move(f));
        }

    out.minimum_classes = static_cast<int>(out.rows.size() - out.couples.size());
    int series = 0;
    for (const char* name : {"C2", "C2^2", "C2^3", "C2^4"})
        if (cat.find(name)) ++series;
    out.headline = ">= " + std::to_string(out.minimum_classes) + " (+" + std::to_string(series) +
                   " in dimension 6) = " + std::to_string(out.minimum_classes + series);
    return out;
}

}  // namespace fujiki
