#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fujiki/catalog.hpp"
#include "fujiki/invariants.hpp"
#include "fujiki/rational.hpp"
#include "fujiki/singularities.hpp"

namespace fujiki {

// One fully recomputed row of the classification table.
struct TableRow {
    std::string group;
    std::string involution_class;
    long b2 = 0;
    long b4 = 0;
    long chi = 0;
    SingularityProfile profile;
    Rational c4;
    Rational c2_squared;
    std::optional<Rational> cbar;  // present iff the radicand is a perfect square
    bool verified = false;         // verified <=> cbar present
};

enum class TableFormat { csv, json, markdown };

// Recomputes one row from the group data alone; the fixture table is never
// consulted.
TableRow compute_row(const CatalogEntry& entry, const InvolutionDescriptor& descriptor);

// All main-table rows, in catalog order.
std::vector<TableRow> compute_all_rows(const Catalog& cat);

struct GoldenMismatch {
    std::string group, klass, field, expected, actual;
};

// Field-by-field comparison of recomputed rows against the fixture table.
std::vector<GoldenMismatch> compare_with_golden(const Catalog& cat,
                                                const std::vector<TableRow>& rows);

std::string render_table(const std::vector<TableRow>& rows, TableFormat format);

// Dedup view: proven coincidences folded away, ambiguous couples flagged,
// and the dimension-six series appended to the headline count.
struct DedupReport {
    std::vector<TableRow> rows;
    std::vector<DeformationFact> couples;
    std::vector<SeriesRow> series;
    int minimum_classes = 0;
    std::string headline;
};

DedupReport dedup_report(const Catalog& cat, const std::vector<TableRow>& all_rows);

std::string render_dedup(const DedupReport& report, TableFormat format);

// Parses "a2=45,a4=2" style profile summaries; "-" or "" is the empty
// profile.  Throws std::invalid_argument on unknown keys or bad numbers.
SingularityProfile parse_profile_string(const std::string& text);

}  // namespace fujiki
