#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "zd/boxkite.hpp"
#include "zd/golden.hpp"
#include "zd/pathion.hpp"

using namespace zd;

namespace {

using Vertex = std::array<unsigned, 2>;

std::set<Vertex> vertex_set(const HyperBoxKite& k) {
  return {k.vertices.begin(), k.vertices.end()};
}

}  // namespace

TEST_CASE("hyper-box-kite at dim_exp 4 reproduces each strut-table row") {
  for (const auto& row : golden::printed_strut_table()) {
    const HyperBoxKite k = hyper_box_kite(4, row.signature);
    CHECK(k.dim_exp == 4);
    CHECK(k.signature == row.signature);
    CHECK(k.vertices.size() == 6);
    CHECK(k.struts.size() == 3);

    std::set<Vertex> printed;
    for (const auto& [o, S] : row.vertices) printed.insert(Vertex{o, S});
    CHECK(vertex_set(k) == printed);

    // Every vertex is (k, k xor G) and struts pair signature-mates.
    const unsigned G = 8 + row.signature;
    for (const Vertex& v : k.vertices) CHECK((v[0] ^ v[1]) == G);
    for (const auto& strut : k.struts) {
      CHECK((strut[0][0] ^ strut[1][0]) == row.signature);
      CHECK(strut[0][0] < strut[1][0]);
    }
  }
}

TEST_CASE("16-D census: every hyper-kite is a box-kite") {
  const CDAlgebra sed = build_algebra(4);
  for (unsigned s = 1; s <= 7; ++s) {
    const HyperCensus c = verify_hyper_edges(sed, hyper_box_kite(4, s));
    CHECK(c.vertex_count == 6);
    CHECK(c.strut_count == 3);
    CHECK(c.edges == 12);
    CHECK(c.trios == 4);
    CHECK(c.struts_insulated);
    CHECK(c.all_pairs_couple);
  }
}

TEST_CASE("32-D maximal-signature kite: vertices, struts, and the census "
          "the scan actually finds") {
  const HyperBoxKite k = hyper_box_kite(5, 15);
  REQUIRE(k.vertices.size() == 14);
  REQUIRE(k.struts.size() == 7);

  // Maximal signature: every vertex pair sums to 31.
  for (const Vertex& v : k.vertices) {
    CHECK(v[0] + v[1] == 31);
    CHECK((v[0] ^ v[1]) == 31);
  }

  const std::vector<std::array<Vertex, 2>> printed_struts = {
      {Vertex{1, 30}, Vertex{14, 17}}, {Vertex{2, 29}, Vertex{13, 18}},
      {Vertex{3, 28}, Vertex{12, 19}}, {Vertex{4, 27}, Vertex{11, 20}},
      {Vertex{5, 26}, Vertex{10, 21}}, {Vertex{6, 25}, Vertex{9, 22}},
      {Vertex{7, 24}, Vertex{8, 23}}};
  REQUIRE(k.struts.size() == printed_struts.size());
  for (std::size_t i = 0; i < printed_struts.size(); ++i) {
    CHECK(k.struts[i][0] == printed_struts[i][0]);
    CHECK(k.struts[i][1] == printed_struts[i][1]);
  }

  // Exhaustive diagonal-product scan. The 91 vertex pairs split into
  // 7 insulated struts, 36 zero-dividing edges, and 48 pairs that never
  // annihilate; the edges close into 12 trios. (The full 84/28 pattern
  // lives at the low signatures instead -- see the next case.)
  const CDAlgebra pat = build_algebra(5);
  const HyperCensus c = verify_hyper_edges(pat, k);
  CHECK(c.vertex_count == 14);
  CHECK(c.strut_count == 7);
  CHECK(c.edges == 36);
  CHECK(c.trios == 12);
  CHECK(c.struts_insulated);
  CHECK_FALSE(c.all_pairs_couple);
}

TEST_CASE("32-D low-signature kites carry the full 84-edge, 28-trio web") {
  const CDAlgebra pat = build_algebra(5);
  for (unsigned s : {1u, 6u, 8u}) {
    const HyperBoxKite k = hyper_box_kite(5, s);
    const HyperCensus c = verify_hyper_edges(pat, k);
    CHECK(c.vertex_count == 14);
    CHECK(c.strut_count == 7);
    CHECK(c.edges == 84);
    CHECK(c.trios == 28);
    CHECK(c.struts_insulated);
    CHECK(c.all_pairs_couple);
  }
}

TEST_CASE("32-D signature split: signatures 1..8 saturate, 9..15 do not") {
  const CDAlgebra pat = build_algebra(5);
  for (unsigned s = 1; s <= 15; ++s) {
    const HyperCensus c = verify_hyper_edges(pat, hyper_box_kite(5, s));
    CHECK(c.struts_insulated);
    if (s <= 8) {
      CHECK(c.edges == 84);
      CHECK(c.trios == 28);
      CHECK(c.all_pairs_couple);
    } else {
      CHECK(c.edges == 36);
      CHECK(c.trios == 12);
      CHECK_FALSE(c.all_pairs_couple);
    }
  }
}

TEST_CASE("64-D maximal-signature census") {
  const CDAlgebra alg = build_algebra(6);
  const HyperBoxKite k = hyper_box_kite(6, 31);
  const HyperCensus c = verify_hyper_edges(alg, k);
  CHECK(c.vertex_count == 30);
  CHECK(c.strut_count == 15);
  CHECK(c.edges == 276);
  CHECK(c.trios == 92);
  CHECK(c.struts_insulated);
  CHECK_FALSE(c.all_pairs_couple);
}

TEST_CASE("hyper-box-kite construction scales to 128-D and 256-D") {
  for (unsigned n : {7u, 8u}) {
    const unsigned half = 1u << (n - 1);
    const HyperBoxKite k = hyper_box_kite(n, half - 1);
    CHECK(k.vertices.size() == half - 2);
    CHECK(k.struts.size() == half / 2 - 1);
    for (const Vertex& v : k.vertices) CHECK((v[0] ^ v[1]) == 2 * half - 1);
  }
}

TEST_CASE("hyper-box-kite rejects out-of-range arguments") {
  CHECK_THROWS_AS(hyper_box_kite(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(hyper_box_kite(9, 1), std::invalid_argument);
  CHECK_THROWS_AS(hyper_box_kite(5, 0), std::invalid_argument);
  CHECK_THROWS_AS(hyper_box_kite(5, 16), std::invalid_argument);
  CHECK_THROWS_AS(hyper_box_kite(4, 8), std::invalid_argument);

  const CDAlgebra sed = build_algebra(4);
  CHECK_THROWS_AS(verify_hyper_edges(sed, hyper_box_kite(5, 15)),
                  std::invalid_argument);
}
