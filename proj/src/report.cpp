#include "fujiki/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "fujiki/fixedpoints.hpp"
#include "fujiki/involution.hpp"

namespace fujiki {

TableRow compute_row(const CatalogEntry& entry, const InvolutionDescriptor& descriptor) {
    GroupTable g = entry.build_group();
    GroupInvolution theta = descriptor_involution(g, descriptor);
    FujikiInput in = make_input(g, theta, 2);

    TableRow row;
    row.group = entry.name;
    row.involution_class = descriptor.label;
    row.b2 = betti_two(entry.xiao_rank, fixed_surface_orbit_count(in));
    row.profile = singularity_profile(in, entry.admissible);
    EulerData euler = euler_data(row.profile, row.b2, 0);
    row.b4 = euler.b4;
    row.chi = euler.chi;
    ChernData chern = chern_data(row.profile, euler);
    row.c4 = chern.c4;
    row.c2_squared = chern.c2sq;
    VerificationResult v = verify_square(Rational(3 * g.order()), chern);
    row.cbar = v.root;
    row.verified = v.ok;
    return row;
}

std::vector<TableRow> compute_all_rows(const Catalog& cat) {
    std::vector<TableRow> rows;
    for (const auto& e : cat.groups) {
        if (!e.admissible) continue;
        for (const auto& d : e.involution_classes)
            if (d.in_main_table) rows.push_back(compute_row(e, d));
    }
    return rows;
}

std::vector<GoldenMismatch> compare_with_golden(const Catalog& cat,
                                                const std::vector<TableRow>& rows) {
    std::vector<GoldenMismatch> out;
    auto add = [&](const std::string& g, const std::string& k, const std::string& field,
                   const std::string& expected, const std::string& actual) {
        out.push_back({g, k, field, expected, actual});
    };
    if (rows.size() != cat.golden.size())
        add("", "", "row count", std::to_string(cat.golden.size()), std::to_string(rows.size()));
    for (const auto& r : rows) {
        const GoldenRow* gold = cat.find_golden(r.group, r.involution_class);
        if (!gold) {
            add(r.group, r.involution_class, "fixture row", "present", "missing");
            continue;
        }
        auto num = [&](const char* field, long expected, long actual) {
            if (expected != actual)
                add(r.group, r.involution_class, field, std::to_string(expected),
                    std::to_string(actual));
        };
        num("b2", gold->b2, r.b2);
        num("a2", gold->profile.a2, r.profile.a2);
        num("a3", gold->profile.a3, r.profile.a3);
        num("a4", gold->profile.a4, r.profile.a4);
        num("a6", gold->profile.a6, r.profile.a6);
        num("a8", gold->profile.a8, r.profile.a8);
        num("a12", gold->profile.a12, r.profile.a12);
        num("b4sing", gold->profile.b4, r.profile.b4);
        num("b6sing", gold->profile.b6, r.profile.b6);
        num("b4", gold->b4, r.b4);
        num("chi", gold->chi, r.chi);
        auto rat = [&](const char* field, const Rational& expected, const Rational& actual) {
            if (!(expected == actual))
                add(r.group, r.involution_class, field, expected.str(), actual.str());
        };
        rat("c4", gold->c4, r.c4);
        rat("c2sq", gold->c2sq, r.c2_squared);
        if (!r.cbar)
            add(r.group, r.involution_class, "cbar", gold->cbar.str(), "(irrational)");
        else
            rat("cbar", gold->cbar, *r.cbar);
    }
    return out;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// table style: integers bare, halves as decimals, other fractions p/q
std::string markdown_rational(const Rational& r) {
    if (r.is_integer()) return r.str();
    if (r.den() == 2) {
        cpp_int a = r.num() < 0 ? cpp_int(-r.num()) : r.num();
        cpp_int whole = a / 2;
        return (r.num() < 0 ? "-" : "") + whole.str() + ".5";
    }
    return r.str();
}

const char* const kColumns[] = {"group", "class", "b2",  "a2",  "a3", "a4",   "a6",
                                "a8",    "a12",   "b4sing", "b6sing", "b4", "chi",  "c4",
                                "c2sq",  "cbar",  "verified"};

std::vector<std::string> row_cells(const TableRow& r, bool markdown) {
    auto rat = [&](const Rational& x) { return markdown ? markdown_rational(x) : x.str(); };
    return {r.group,
            r.involution_class,
            std::to_string(r.b2),
            std::to_string(r.profile.a2),
            std::to_string(r.profile.a3),
            std::to_string(r.profile.a4),
            std::to_string(r.profile.a6),
            std::to_string(r.profile.a8),
            std::to_string(r.profile.a12),
            std::to_string(r.profile.b4),
            std::to_string(r.profile.b6),
            std::to_string(r.b4),
            std::to_string(r.chi),
            rat(r.c4),
            rat(r.c2_squared),
            r.cbar ? rat(*r.cbar) : std::string(),
            r.verified ? "true" : "false"};
}

std::string render_csv(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    for (size_t i = 0; i < std::size(kColumns); ++i) out << (i ? "," : "") << kColumns[i];
    out << "\n";
    for (const auto& r : rows) {
        std::vector<std::string> cells = row_cells(r, false);
        for (size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
        out << "\n";
    }
    return out.str();
}

nlohmann::ordered_json row_json(const TableRow& r) {
    nlohmann::ordered_json j;
    j["group"] = r.group;
    j["class"] = r.involution_class;
    j["b2"] = r.b2;
    j["a2"] = r.profile.a2;
    j["a3"] = r.profile.a3;
    j["a4"] = r.profile.a4;
    j["a6"] = r.profile.a6;
    j["a8"] = r.profile.a8;
    j["a12"] = r.profile.a12;
    j["b4sing"] = r.profile.b4;
    j["b6sing"] = r.profile.b6;
    j["b4"] = r.b4;
    j["chi"] = r.chi;
    j["c4"] = r.c4.str();
    j["c2sq"] = r.c2_squared.str();
    if (r.cbar)
        j["cbar"] = r.cbar->str();
    else
        j["cbar"] = nullptr;
    j["verified"] = r.verified;
    return j;
}

std::string render_json_rows(const std::vector<TableRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) arr.push_back(row_json(r));
    return arr.dump(2) + "\n";
}

std::string render_markdown(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    out << "|";
    for (const char* c : kColumns) out << " " << c << " |";
    out << "\n|";
    for (size_t i = 0; i < std::size(kColumns); ++i) out << "---|";
    out << "\n";
    for (const auto& r : rows) {
        std::vector<std::string> cells = row_cells(r, true);
        out << "|";
        for (const auto& c : cells) out << " " << c << " |";
        out << "\n";
    }
    return out.str();
}

std::string couple_key(const std::pair<std::string, std::string>& member) {
    return member.second.empty() ? member.first : member.first + ":" + member.second;
}

}  // namespace

std::string render_table(const std::vector<TableRow>& rows, TableFormat format) {
    switch (format) {
        case TableFormat::csv:
            return render_csv(rows);
        case TableFormat::json:
            return render_json_rows(rows);
        case TableFormat::markdown:
            return render_markdown(rows);
    }
    throw std::invalid_argument("unknown table format");
}

DedupReport dedup_report(const Catalog& cat, const std::vector<TableRow>& all_rows) {
    DedupReport out;
    std::set<std::pair<std::string, std::string>> absorbed;
    for (const auto& f : cat.deformation_facts)
        if (f.proven && f.members.size() == 2) absorbed.insert(f.members.front());
    for (const auto& r : all_rows)
        if (!absorbed.count({r.group, r.involution_class})) out.rows.push_back(r);

    for (size_t i = 0; i < out.rows.size(); ++i)
        for (size_t j = i + 1; j < out.rows.size(); ++j) {
            const TableRow& a = out.rows[i];
            const TableRow& b = out.rows[j];
            if (a.b2 != b.b2 || !(a.profile == b.profile)) continue;
            DeformationFact f;
            f.proven = false;
            f.members = {{a.group, a.involution_class}, {b.group, b.involution_class}};
            f.note = "equal Betti number and singularity profile";
            out.couples.push_back(std::move(f));
        }

    for (const auto& row : series_rows())
        if (row.name == "C2" || row.name == "C2^2" || row.name == "C2^3" || row.name == "C2^4")
            out.series.push_back(row);

    out.minimum_classes = static_cast<int>(out.rows.size() - out.couples.size());
    out.headline = ">= " + std::to_string(out.minimum_classes) + " (+" +
                   std::to_string(out.series.size()) +
                   " in dimension 6) = " +
                   std::to_string(out.minimum_classes + static_cast<int>(out.series.size()));
    return out;
}

std::string render_dedup(const DedupReport& report, TableFormat format) {
    if (format == TableFormat::json) {
        nlohmann::ordered_json j;
        j["rows"] = nlohmann::ordered_json::array();
        for (const auto& r : report.rows) j["rows"].push_back(row_json(r));
        j["couples"] = nlohmann::ordered_json::array();
        for (const auto& c : report.couples)
            j["couples"].push_back({couple_key(c.members[0]), couple_key(c.members[1])});
        j["series"] = nlohmann::ordered_json::array();
        for (const auto& s : report.series) {
            nlohmann::ordered_json row;
            row["group"] = s.name;
            row["order"] = s.order;
            row["b2"] = s.b2;
            j["series"].push_back(row);
        }
        j["minimum_classes"] = report.minimum_classes;
        j["headline"] = report.headline;
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << render_table(report.rows, format);
    out << "\n";
    for (const auto& c : report.couples)
        out << "candidate couple: " << couple_key(c.members[0]) << " ~ " << couple_key(c.members[1])
            << "\n";
    for (const auto& s : report.series)
        out << "series: S(" << s.name << ")^[3] b2=" << s.b2 << "\n";
    out << report.headline << "\n";
    return out.str();
}

SingularityProfile parse_profile_string(const std::string& text) {
    SingularityProfile p;
    if (text.empty() || text == "-") return p;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("profile item needs key=value: " + item);
        std::string key = item.substr(0, eq);
        long value = 0;
        try {
            value = std::stol(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad profile count: " + item);
        }
        if (key == "a2")
            p.a2 = value;
        else if (key == "a3")
            p.a3 = value;
        else if (key == "a4")
            p.a4 = value;
        else if (key == "a6")
            p.a6 = value;
        else if (key == "a8")
            p.a8 = value;
        else if (key == "a12")
            p.a12 = value;
        else if (key == "b4")
            p.b4 = value;
        else if (key == "b6")
            p.b6 = value;
        else
            throw std::invalid_argument("unknown profile key: " + key);
    }
    return p;
}

}  // namespace fujiki
