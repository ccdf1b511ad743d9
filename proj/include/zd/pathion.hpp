#pragma once
// 2^N-ion extension of the box-kite construction: hyper-box-kites with
// their strut pairings for dim_exp 4..8, plus the brute-force edge and
// trio census that pins the 32-D counts.

#include <array>
#include <vector>

#include "zd/cdalgebra.hpp"

namespace zd {

// Vertices are (k, k xor G) with G = 2^(dim_exp-1) + signature, k
// running over 1..2^(dim_exp-1)-1 without the signature itself; struts
// pair k with k xor signature. With the maximal signature every vertex
// pair is (k, M-k) for M = 2^dim_exp - 1.
struct HyperBoxKite {
  unsigned dim_exp = 0;
  unsigned signature = 0;
  std::vector<std::array<unsigned, 2>> vertices;
  std::vector<std::array<std::array<unsigned, 2>, 2>> struts;
};

// Throws std::invalid_argument unless 4 <= dim_exp <= 8 and
// 1 <= signature < 2^(dim_exp-1).
HyperBoxKite hyper_box_kite(unsigned dim_exp, unsigned signature);

struct HyperCensus {
  int vertex_count = 0;
  int strut_count = 0;
  int edges = 0;  // non-strut vertex pairs with an exact zero coupling
  int trios = 0;  // XOR-closed triples of pairwise-coupled vertices
  bool struts_insulated = false;  // no strut pair couples, any signing
  bool all_pairs_couple = false;  // every non-strut pair is an edge
};

// Exhaustive diagonal-product scan of the kite over the matching
// algebra; throws std::invalid_argument when alg.dim_exp() differs.
HyperCensus verify_hyper_edges(const CDAlgebra& alg, const HyperBoxKite& k);

}  // namespace zd
