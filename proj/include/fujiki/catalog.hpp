#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fujiki/group.hpp"
#include "fujiki/involution.hpp"
#include "fujiki/rational.hpp"
#include "fujiki/singularities.hpp"

namespace fujiki {

// One stored involution class of a catalog group.
struct InvolutionDescriptor {
    std::string label;                // "" for single-class groups, else "~id" / "!~id"
    std::string kind;                 // identity | inversion | conjugation | generator_family
    std::string conjugator;           // cycle string, conjugation kind only
    std::vector<std::string> family;  // cycle strings, generator_family kind only
    bool in_main_table = true;        // carries a golden-table row
};

// Same-degree bridge overgroup <G, creator>, order asserted at load.
struct BridgeSpec {
    std::string creator;
    int order = 0;
};

// Classification through an isomorphic copy in another embedding: the map
// source_generators[k] -> images[k] extends to an isomorphism, candidates are
// transported along it and merged inside the named built-in overgroup
// (target_order == 0) or through order-target_order subgroups of it found by
// bridge search (target_order > 0).
struct ClassificationSpec {
    std::vector<std::string> source_generators;
    std::vector<std::string> images;
    std::string overgroup;
    int target_order = 0;
};

struct CatalogEntry {
    std::string name;
    std::pair<int, int> small_group;  // (order, library index)
    int degree = 0;
    std::vector<std::string> generators;
    int xiao_rank = 0;  // rank of the invariant lattice of the surface action
    bool admissible = false;
    std::vector<InvolutionDescriptor> involution_classes;
    std::vector<BridgeSpec> bridges;
    std::optional<ClassificationSpec> classification;
    std::string notes;

    GroupTable build_group() const;
};

// One fixture row of the dimension-4 main table.
struct GoldenRow {
    std::string group;
    std::string klass;
    long b2 = 0;
    SingularityProfile profile;
    long b4 = 0;
    long chi = 0;
    Rational c4, c2sq, cbar;
};

struct DeformationFact {
    bool proven = false;  // false: candidate couple (matching b2 and profile)
    std::vector<std::pair<std::string, std::string>> members;  // (group, class) keys
    std::string note;
};

struct Catalog {
    int schema_version = 0;
    std::vector<CatalogEntry> groups;
    std::vector<GoldenRow> golden;
    std::vector<DeformationFact> deformation_facts;

    const CatalogEntry* find(const std::string& name) const;
    const GoldenRow* find_golden(const std::string& group, const std::string& klass) const;
};

// Raw built-in catalog document (compiled in).
const char* builtin_catalog_json();

// Loads and validates a catalog: the built-in document when path is empty
// (the FUJIKI_CATALOG environment variable overrides it), otherwise the given
// file.  Validation covers the schema, generator closure orders, descriptor
// validity, bridge closure orders, golden-table key resolution and the
// cross-consistency xiao_rank + divisor count == b2 on every golden row.
// Throws std::runtime_error with a diagnostic on any violation.
Catalog load_catalog(const std::string& path = "");

// Named ambient groups used by bridge specs; built on first use and cached:
//   F384    order  384 on 64 points  (determinant-one coordinate words)
//   Q1536   order 1536 on 64 points  (all coordinate automorphisms)
//   AGL2F3  order  432 on  9 points
//   W2880   order 2880 on 16 points
//   H192    order  192 on  8 points
//   C2p4C6  order   96 on  8 points
const GroupTable& builtin_overgroup(const std::string& name);

// Builds the involution a descriptor stores; throws std::invalid_argument
// when the descriptor does not define a valid involution on g.
GroupInvolution descriptor_involution(const GroupTable& g, const InvolutionDescriptor& d);

// Isomorphism src -> dst extending src_gens[k] -> dst_gens[k], as an index
// map over src's elements; empty when the assignment does not extend to one.
std::vector<int> generator_isomorphism(const GroupTable& src, const std::vector<Perm>& src_gens,
                                       const GroupTable& dst, const std::vector<Perm>& dst_gens);

// theta pushed through an element-index isomorphism onto dst.
GroupInvolution transport_involution(const GroupInvolution& theta, const std::vector<int>& phi,
                                     const GroupTable& dst);

struct EntryClassification {
    std::vector<GroupInvolution> candidates;  // bases enumeration, sorted by map
    std::vector<InvolutionClass> classes;     // after all catalog-specified merges
    std::vector<int> descriptor_class;        // class index of each stored descriptor
};

// Classifies the entry's valid involutions with its bridges and alternate
// embeddings.  enumeration selects how candidates are found; the ambient
// method requires degree <= 9.
EntryClassification classify_entry(const GroupTable& g, const CatalogEntry& entry,
                                   EnumerationMethod enumeration = EnumerationMethod::bases);

struct DedupResult {
    std::vector<GoldenRow> rows;           // golden rows after proven collapses
    std::vector<DeformationFact> couples;  // remaining equal (b2, profile) pairs
    int minimum_classes = 0;               // rows.size() - couples.size()
    std::string headline;
};

// Collapses proven-equivalent golden rows (the absorbed member of each proven
// fact is dropped, its target kept) and flags remaining rows that share both
// b2 and singularity profile as candidate couples.
DedupResult deformation_dedup(const Catalog& cat);

}  // namespace fujiki
