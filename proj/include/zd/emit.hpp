#pragma once
// Serialization: the multiplication table in its printed tab layout
// plus CSV and JSON, pretty text for listings and partitions, JSON
// reports for censuses and scans, and DOT graphs for kites, donuts,
// Fano triangles, and hyper-strut diagrams. Identical inputs always
// produce byte-identical output.

#include <array>
#include <string>

#include "json.hpp"
#include "zd/boxkite.hpp"
#include "zd/cdalgebra.hpp"
#include "zd/flowmorph.hpp"
#include "zd/pathion.hpp"
#include "zd/zerodiv.hpp"

namespace zd {

using Json = nlohmann::ordered_json;

// ---- Multiplication table -------------------------------------------

// Tab-separated grid with the real unit shown as U / -U.
std::string table_pretty(const CDAlgebra& alg);

// Header row of column indices, then rows of signed product indices;
// the real unit keeps its sign as 0 / -0.
std::string table_csv(const CDAlgebra& alg);

// Array of rows; each entry is {"sign": +-1, "index": i xor j}.
Json table_json(const CDAlgebra& alg);

// ---- Enumeration listings --------------------------------------------

std::string triples_pretty(const CDAlgebra& alg);
Json assessors_json(const CDAlgebra& alg);
Json trios_json(const CDAlgebra& alg);
Json couplings_json(const CDAlgebra& alg);

// One GoTo listing in the printed layout: header, column captions, six
// coupling rows (rows 4..6 are the sign flips of rows 1..3).
std::string goto_pretty(const GoToListing& listing);

// The 7x7 (o, S) grid; each cell "id (o,S) (o,S) id (o,S) (o,S)".
std::string osiris_pretty(const OsirisPartition& p);

// Roman-numeral reduction of the same grid.
std::string osiris_stripped_pretty(const OsirisPartition& p);
Json osiris_json(const OsirisPartition& p);

// ---- Box-kite reports -------------------------------------------------

// All seven kites, one strut-table row each.
std::string strut_table_pretty(const std::array<BoxKite, 7>& kites);

// Single-kite detail: vertices, struts, sails and vents with signs.
std::string boxkite_pretty(const BoxKite& kite);
Json boxkite_json(const BoxKite& kite);

Json lanyard_census_json(const LanyardCensus& census);
Json seinfeld_json(const SeinfeldCensus& census);
std::string dna_pretty(const DnaResult& r);
std::string donut_pretty(const DonutMap& m);
Json donut_json(const DonutMap& m);

// ---- Flowmorph and hyper-kite reports ---------------------------------

std::string fano_pretty(const FanoLabeling& l);
Json counting_order_json(const CountingOrderReport& r);
Json moreno_json(const CDAlgebra& alg, const MorenoCopy& copy);
Json hyper_census_json(const HyperBoxKite& k, const HyperCensus& c);

// ---- DOT graphs --------------------------------------------------------

// Octahedron: 6 assessor nodes, 12 signed edges, 3 dashed struts.
std::string boxkite_dot(const CDAlgebra& alg, const BoxKite& kite);

// Square-with-diagonals torus layout of one GoTo listing; the four
// column trios are triangles labeled by their cartouche numerals.
std::string donut_dot(const CDAlgebra& alg, const DonutMap& m);

// 7 nodes, each line an oriented 3-cycle of arrows.
std::string fano_dot(const FanoLabeling& l);

// Hyper-box-kite vertices with dashed strut pairings.
std::string pathion_dot(const HyperBoxKite& k);

}  // namespace zd
