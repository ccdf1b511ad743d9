#include "zd/pathion.hpp"

#include <algorithm>
#include <stdexcept>

namespace zd {

namespace {

Element dyad(const std::array<unsigned, 2>& v, int sign) {
  return Element::basis(v[0]) + Element::basis(v[1], sign);
}

bool couples(const CDAlgebra& alg, const std::array<unsigned, 2>& v,
             const std::array<unsigned, 2>& w) {
  for (int sv : {+1, -1})
    for (int sw : {+1, -1})
      if (mul(alg, dyad(v, sv), dyad(w, sw)).is_zero()) return true;
  return false;
}

}  // namespace

HyperBoxKite hyper_box_kite(unsigned dim_exp, unsigned signature) {
  if (dim_exp < 4 || dim_exp > 8)
    throw std::invalid_argument("dim_exp must lie in 4..8");
  const unsigned half = 1u << (dim_exp - 1);
  if (signature < 1 || signature >= half)
    throw std::invalid_argument("signature must lie in 1..2^(dim_exp-1)-1");

  HyperBoxKite k;
  k.dim_exp = dim_exp;
  k.signature = signature;
  const unsigned g = half + signature;
  for (unsigned lo = 1; lo < half; ++lo)
    if (lo != signature) k.vertices.push_back({lo, lo ^ g});
  for (const auto& v : k.vertices) {
    const unsigned partner = v[0] ^ signature;
    if (v[0] < partner) k.struts.push_back({v, {partner, partner ^ g}});
  }
  return k;
}

HyperCensus verify_hyper_edges(const CDAlgebra& alg, const HyperBoxKite& k) {
  if (alg.dim_exp() != k.dim_exp)
    throw std::invalid_argument("algebra dimension does not match the kite");

  HyperCensus census;
  census.vertex_count = static_cast<int>(k.vertices.size());
  census.strut_count = static_cast<int>(k.struts.size());
  census.struts_insulated = true;
  census.all_pairs_couple = true;

  const int n = census.vertex_count;
  std::vector<std::vector<bool>> edge(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const bool coupled = couples(alg, k.vertices[i], k.vertices[j]);
      const bool strut =
          (k.vertices[i][0] ^ k.vertices[j][0]) == k.signature;
      if (strut) {
        if (coupled) census.struts_insulated = false;
        continue;
      }
      if (coupled) {
        ++census.edges;
        edge[i][j] = edge[j][i] = true;
      } else {
        census.all_pairs_couple = false;
      }
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!edge[i][j]) continue;
      for (int l = j + 1; l < n; ++l)
        if (edge[i][l] && edge[j][l] &&
            (k.vertices[i][0] ^ k.vertices[j][0]) == k.vertices[l][0])
          ++census.trios;
    }
  return census;
}

}  // namespace zd
