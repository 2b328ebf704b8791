#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fujiki/catalog.hpp"
#include "fujiki/fixedpoints.hpp"
#include "fujiki/invariants.hpp"
#include "fujiki/involution.hpp"
#include "fujiki/report.hpp"
#include "fujiki/singularities.hpp"

using namespace fujiki;

namespace {

TableFormat parse_format(const std::string& name) {
    if (name == "csv") return TableFormat::csv;
    if (name == "json") return TableFormat::json;
    if (name == "markdown") return TableFormat::markdown;
    throw std::invalid_argument("unknown format: " + name);
}

const CatalogEntry& entry_or_throw(const Catalog& cat, const std::string& name) {
    const CatalogEntry* e = cat.find(name);
    if (!e) throw std::invalid_argument("unknown group: " + name);
    return *e;
}

const InvolutionDescriptor& descriptor_or_throw(const CatalogEntry& e, const std::string& label,
                                                bool label_given) {
    if (!label_given) {
        if (e.involution_classes.empty())
            throw std::invalid_argument(e.name + " has no involution classes");
        return e.involution_classes.front();
    }
    for (const auto& d : e.involution_classes)
        if (d.label == label) return d;
    throw std::invalid_argument(e.name + " has no class '" + label + "'");
}

int run_table(const std::string& format, bool golden, bool dedup) {
    Catalog cat = load_catalog();
    std::vector<TableRow> rows = compute_all_rows(cat);
    TableFormat fmt = parse_format(format);
    if (dedup)
        std::fputs(render_dedup(dedup_report(cat, rows), fmt).c_str(), stdout);
    else
        std::fputs(render_table(rows, fmt).c_str(), stdout);
    bool ok = true;
    for (const auto& r : rows) ok = ok && r.verified;
    if (golden) {
        std::vector<GoldenMismatch> bad = compare_with_golden(cat, rows);
        for (const auto& m : bad)
            std::fprintf(stderr, "mismatch %s/%s %s: expected %s, got %s\n", m.group.c_str(),
                         m.klass.c_str(), m.field.c_str(), m.expected.c_str(), m.actual.c_str());
        ok = ok && bad.empty();
    }
    return ok ? 0 : 1;
}

int run_list() {
    Catalog cat = load_catalog();
    for (const auto& e : cat.groups) {
        std::printf("%-10s order %3d  degree %2d  rank %2d  classes %zu%s\n", e.name.c_str(),
                    e.small_group.first, e.degree, e.xiao_rank, e.involution_classes.size(),
                    e.admissible ? "" : "  (not admissible)");
    }
    return 0;
}

int run_involutions(const std::string& group, const std::string& method, bool bridge) {
    Catalog cat = load_catalog();
    const CatalogEntry& e = entry_or_throw(cat, group);
    EnumerationMethod m;
    if (method == "bases")
        m = EnumerationMethod::bases;
    else if (method == "ambient")
        m = EnumerationMethod::ambient;
    else
        throw std::invalid_argument("unknown method: " + method);

    CatalogEntry stripped = e;
    if (!bridge) {
        stripped.bridges.clear();
        stripped.classification.reset();
    }
    GroupTable g = e.build_group();
    EntryClassification r = classify_entry(g, stripped, m);
    std::printf("group %s (order %d, degree %d): %zu candidates, %zu classes (method %s, "
                "bridges %s)\n",
                e.name.c_str(), g.order(), g.degree(), r.candidates.size(), r.classes.size(),
                method.c_str(), bridge ? "on" : "off");
    for (size_t c = 0; c < r.classes.size(); ++c) {
        const InvolutionClass& cls = r.classes[c];
        bool has_id = false;
        for (const auto& member : cls.members) {
            bool id = true;
            for (size_t i = 0; i < member.map.size() && id; ++i)
                id = member.map[i] == static_cast<uint16_t>(i);
            has_id = has_id || id;
        }
        std::printf("class %zu: %zu members%s\n", c + 1, cls.members.size(),
                    has_id ? ", contains the identity" : "");
        for (const Perm& gen : g.generators()) {
            Perm image = cls.representative.apply(gen);
            std::printf("  representative: %s -> %s\n", format_permutation(gen).c_str(),
                        format_permutation(image).c_str());
        }
    }
    return 0;
}

int run_profile(const std::string& group, const std::string& label, bool label_given) {
    Catalog cat = load_catalog();
    const CatalogEntry& e = entry_or_throw(cat, group);
    const InvolutionDescriptor& d = descriptor_or_throw(e, label, label_given);
    GroupTable g = e.build_group();
    GroupInvolution theta = descriptor_involution(g, d);
    FujikiInput in = make_input(g, theta, 2);
    int div = fixed_surface_orbit_count(in);
    SingularityProfile p = singularity_profile(in, e.admissible);
    std::printf("group: %s\n", e.name.c_str());
    std::printf("class: '%s'\n", d.label.c_str());
    std::printf("fixed surface orbits: %d\n", div);
    std::printf("b2: %ld\n", static_cast<long>(betti_two(e.xiao_rank, div)));
    std::printf("profile: %s\n", profile_string(p).c_str());
    return 0;
}

int run_verify(const std::string& group, const std::string& label, bool label_given) {
    Catalog cat = load_catalog();
    const CatalogEntry& e = entry_or_throw(cat, group);
    const InvolutionDescriptor& d = descriptor_or_throw(e, label, label_given);
    TableRow row = compute_row(e, d);
    EulerData euler = euler_data(row.profile, row.b2, 0);
    ChernData chern = chern_data(row.profile, euler);
    VerificationResult v = verify_square(Rational(3 * e.small_group.first), chern);
    std::printf("group: %s\n", e.name.c_str());
    std::printf("class: '%s'\n", d.label.c_str());
    std::printf("b2: %ld\nb4: %ld\nchi: %ld\n", row.b2, row.b4, row.chi);
    std::printf("profile: %s\n", profile_string(row.profile).c_str());
    std::printf("c4: %s\nc2sq: %s\n", row.c4.str().c_str(), row.c2_squared.str().c_str());
    std::printf("radicand: %s\n", v.radicand.str().c_str());
    if (v.ok)
        std::printf("cbar: %s\nverified: yes\n", v.root->str().c_str());
    else
        std::printf("squarefree part: %s\nverified: no\n", v.squarefree.str().c_str());
    return v.ok ? 0 : 1;
}

int run_verify_custom(long order_factor, long b2, long b3, const std::string& profile) {
    SingularityProfile p = parse_profile_string(profile);
    EulerData euler = euler_data(p, b2, b3);
    ChernData chern = chern_data(p, euler);
    VerificationResult v = verify_square(Rational(order_factor), chern);
    std::printf("b4: %ld\nchi: %ld\n", euler.b4, euler.chi);
    std::printf("c4: %s\ns0: %s\nc2sq: %s\n", chern.c4.str().c_str(), chern.s0.str().c_str(),
                chern.c2sq.str().c_str());
    std::printf("radicand: %s\n", v.radicand.str().c_str());
    if (v.ok)
        std::printf("cbar: %s\nverified: yes\n", v.root->str().c_str());
    else
        std::printf("squarefree part: %s\nverified: no\n", v.squarefree.str().c_str());
    return v.ok ? 0 : 1;
}

int run_series(int max_n) {
    SeriesSeparation sep = series_separation(max_n);
    for (const SeriesRow& r : series_rows())
        std::printf("S(%s)^[3]: order %ld, invariant rank %ld, b2 %ld\n", r.name.c_str(), r.order,
                    r.invariant_rank, r.b2);
    std::printf("equal b2 pairs:\n");
    for (const auto& [a, b] : sep.pairs) std::printf("  %s ~ %s\n", a.c_str(), b.c_str());
    std::printf("order ratios to separate (%zu distinct):\n", sep.fractions.size());
    for (const Rational& f : sep.fractions) std::printf("  %s\n", f.str().c_str());
    std::printf("kth roots irrational for 3 <= k <= %d: %s\n", sep.max_n,
                sep.all_irrational ? "yes" : "no");
    return sep.all_irrational ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"group-theoretic classification tables for symplectic orbifold families"};
    app.require_subcommand(1);
    int exit_code = 0;

    auto* table = app.add_subcommand("table", "compute and render the classification table");
    auto table_format = std::make_shared<std::string>("markdown");
    auto table_golden = std::make_shared<bool>(false);
    auto table_dedup = std::make_shared<bool>(false);
    table->add_option("--format", *table_format, "csv, json or markdown")
        ->check(CLI::IsMember({"csv", "json", "markdown"}));
    table->add_flag("--golden", *table_golden, "compare against the fixture table");
    table->add_flag("--dedup", *table_dedup, "fold proven deformation coincidences");
    table->callback([=, &exit_code] { exit_code = run_table(*table_format, *table_golden, *table_dedup); });

    auto* list = app.add_subcommand("list", "list the catalog groups");
    list->callback([&exit_code] { exit_code = run_list(); });

    auto* inv = app.add_subcommand("involutions", "enumerate and classify valid involutions");
    auto inv_group = std::make_shared<std::string>();
    auto inv_method = std::make_shared<std::string>("bases");
    auto inv_bridge = std::make_shared<bool>(false);
    inv->add_option("group", *inv_group, "catalog group name")->required();
    inv->add_option("--method", *inv_method, "bases or ambient")
        ->check(CLI::IsMember({"bases", "ambient"}));
    inv->add_flag("--bridge", *inv_bridge, "apply the stored overgroup merges");
    inv->callback(
        [=, &exit_code] { exit_code = run_involutions(*inv_group, *inv_method, *inv_bridge); });

    auto* prof = app.add_subcommand("profile", "singularity profile of one class");
    auto prof_group = std::make_shared<std::string>();
    auto prof_class = std::make_shared<std::string>();
    prof->add_option("group", *prof_group, "catalog group name")->required();
    auto* prof_class_opt = prof->add_option("--class", *prof_class, "involution class label");
    prof->callback([=, &exit_code] {
        exit_code = run_profile(*prof_group, *prof_class, prof_class_opt->count() > 0);
    });

    auto* ver = app.add_subcommand("verify", "full invariant chain for one class");
    auto ver_group = std::make_shared<std::string>();
    auto ver_class = std::make_shared<std::string>();
    ver->add_option("group", *ver_group, "catalog group name")->required();
    auto* ver_class_opt = ver->add_option("--class", *ver_class, "involution class label");
    ver->callback([=, &exit_code] {
        exit_code = run_verify(*ver_group, *ver_class, ver_class_opt->count() > 0);
    });

    auto* custom = app.add_subcommand("verify-custom", "run the square test on custom inputs");
    auto c_factor = std::make_shared<long>(0);
    auto c_b2 = std::make_shared<long>(0);
    auto c_b3 = std::make_shared<long>(0);
    auto c_profile = std::make_shared<std::string>();
    custom->add_option("--order-factor", *c_factor, "multiplier in front of the radicand")
        ->required();
    custom->add_option("--b2", *c_b2, "second Betti number")->required();
    custom->add_option("--b3", *c_b3, "third Betti number");
    custom->add_option("--profile", *c_profile, "singularity profile, e.g. a2=45,a4=2")
        ->required();
    custom->callback(
        [=, &exit_code] { exit_code = run_verify_custom(*c_factor, *c_b2, *c_b3, *c_profile); });

    auto* series = app.add_subcommand("series", "dimension-six series and b2 separation");
    auto s_max = std::make_shared<int>(10);
    series->add_option("--max-n", *s_max, "largest root exponent to certify");
    series->callback([=, &exit_code] { exit_code = run_series(*s_max); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return exit_code;
}
