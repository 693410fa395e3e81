#pragma once

// Exhaustive enumeration of the antichain-basis code families, the catalog of
// uncountable analytic relations, the graph sub-bases, and instantiation of
// codes as evaluable relations.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qramsey/codes.hpp"
#include "qramsey/relations.hpp"

namespace qramsey {

enum class Family { P, A, Cpi02, N, V, H, S, C, Ac };

Family parse_family(std::string_view text);
std::string family_name(Family f);

/// Filters over all 256 tuples, in lexicographic order.
std::vector<Code4> enum_P();
std::vector<Code4> enum_A();
std::vector<Code4> enum_Cpi02_second();
/// Filters over all 64 tuples, in lexicographic order.
std::vector<Code6> enum_N();
std::vector<Code6> enum_C();
/// Filters over all 64^4 tuples, in lexicographic order.
std::vector<Code6x4> enum_V();
std::vector<Code6x4> enum_H();
std::vector<Code6x4> enum_S();

/// One member of an enumerated family: the sub-family it comes from, its code
/// literal, and the relation it names.
struct CodeEntry {
    std::string family;
    std::string code;
    RelationSpec spec;
};

/// P codes plus Delta(C) on 2^omega.
std::vector<CodeEntry> enum_AGamma(const GammaClass& g);
/// The Pi02 catalog: A^{Pi02} and the second family, disjointly tagged.
std::vector<CodeEntry> enum_Cpi02();
/// Uniform listing for export and the command line.
std::vector<CodeEntry> listing(Family f);

RelationSpec instantiate(const Code4& t, Family f, const GammaClass& g = GammaClass::sigma02());
RelationSpec instantiate(const Code6& t, Family f, bool complement);
RelationSpec instantiate(const Code6x4& t, Family f, bool complement);

enum class Topology { Clopen, OpenNotClosed, ClosedNotOpen };
std::string topology_name(Topology t);

struct CatalogEntry {
    int index = 0;
    std::string name;
    RelationSpec spec;
    Profile flags;
    Topology topology = Topology::Clopen;
    bool graph = false;
};

/// The thirteen catalog entries with their recorded properties.
std::vector<CatalogEntry> catalog_Ac();

struct SubbaseEntry {
    std::string family;  // N, V, S or R01_1
    std::string code;
    bool complement = false;
    bool acyclic_claim = false;
    bool member = false;  // re-check of the family filter
    RelationSpec spec;
};

struct GraphSubbases {
    std::vector<SubbaseEntry> pi01_le;  // 5 entries
    std::vector<SubbaseEntry> pi01_sq;  // 6 entries
    std::vector<SubbaseEntry> sigma01;  // 10 entries
};

GraphSubbases graph_subbases();

/// Named cardinalities in a fixed order.
std::vector<std::pair<std::string, std::size_t>> cardinality_table();

std::string to_csv(const std::vector<CodeEntry>& entries);
std::string to_json(Family f, const std::vector<CodeEntry>& entries);

}  // namespace qramsey
