#include "zd/cdalgebra.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "zd/golden.hpp"

using namespace zd;

namespace {

std::string render_cell(int sign, unsigned index) {
  std::string s = sign < 0 ? "-" : "";
  return s + (index == 0 ? "U" : std::to_string(index));
}

std::vector<std::vector<std::string>> parse_grid(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::vector<std::string> cells;
    std::size_t p = pos;
    while (p <= eol) {
      std::size_t tab = text.find('\t', p);
      if (tab == std::string_view::npos || tab > eol) tab = eol;
      cells.emplace_back(text.substr(p, tab - p));
      p = tab + 1;
    }
    rows.push_back(std::move(cells));
    pos = eol + 1;
  }
  return rows;
}

// Grid in the printed layout: header row of column labels, then one
// row per unit, each prefixed with its label. Index 0 renders as "U".
std::vector<std::vector<std::string>> render_grid(const CDAlgebra& alg) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{""};
  for (unsigned c = 0; c < alg.dim(); ++c) header.push_back(render_cell(1, c));
  rows.push_back(header);
  for (unsigned r = 0; r < alg.dim(); ++r) {
    std::vector<std::string> row{render_cell(1, r)};
    for (unsigned c = 0; c < alg.dim(); ++c) {
      auto [s, k] = alg.mul_basis(r, c);
      row.push_back(render_cell(s, k));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

FloatElement random_unit(const CDAlgebra& alg, std::mt19937& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  FloatElement x;
  for (unsigned i = 0; i < alg.dim(); ++i)
    x += FloatElement::basis(i, dist(rng));
  return (1.0 / norm(x)) * x;
}

}  // namespace

TEST_CASE("basis products obey the XOR index law") {
  for (Doubling d : {Doubling::canonical, Doubling::conj_swap,
                     Doubling::mirror}) {
    const CDAlgebra alg = build_algebra(4, d);
    for (unsigned i = 0; i < alg.dim(); ++i)
      for (unsigned j = 0; j < alg.dim(); ++j) {
        const SignedIndex p = alg.mul_basis(i, j);
        CHECK(p.index == (i ^ j));
        CHECK((p.sign == 1 || p.sign == -1));
      }
  }
}

TEST_CASE("unit element, squares, and anticommutativity at every level") {
  for (Doubling d : {Doubling::canonical, Doubling::conj_swap,
                     Doubling::mirror})
    for (unsigned n = 0; n <= 5; ++n) {
      const CDAlgebra alg = build_algebra(n, d);
      for (unsigned i = 0; i < alg.dim(); ++i) {
        CHECK(alg.sign(0, i) == 1);
        CHECK(alg.sign(i, 0) == 1);
        if (i != 0) CHECK(alg.sign(i, i) == -1);
        for (unsigned j = 1; j < alg.dim(); ++j)
          if (i != 0 && i != j) CHECK(alg.sign(i, j) == -alg.sign(j, i));
      }
    }
}

TEST_CASE("the three doubling conventions generate distinct sign tables") {
  const CDAlgebra a = build_algebra(4, Doubling::canonical);
  const CDAlgebra b = build_algebra(4, Doubling::conj_swap);
  const CDAlgebra c = build_algebra(4, Doubling::mirror);
  auto differ = [](const CDAlgebra& x, const CDAlgebra& y) {
    for (unsigned i = 0; i < 16; ++i)
      for (unsigned j = 0; j < 16; ++j)
        if (x.sign(i, j) != y.sign(i, j)) return true;
    return false;
  };
  CHECK(differ(a, b));
  CHECK(differ(a, c));
  CHECK(differ(b, c));
}

TEST_CASE("generated sedenion table matches the printed one except at the "
          "two documented misprints") {
  const CDAlgebra alg = build_algebra(4);
  const auto printed = parse_grid(golden::printed_sedenion_table());
  const auto ours = render_grid(alg);
  REQUIRE(printed.size() == 17);
  REQUIRE(ours.size() == 17);

  std::set<std::pair<int, int>> expected_mismatches;
  for (const golden::CellException& ex : golden::table_exceptions())
    expected_mismatches.insert({ex.row + 1, ex.col + 1});

  std::set<std::pair<int, int>> mismatches;
  for (int r = 0; r < 17; ++r) {
    REQUIRE(printed[r].size() == 17);
    REQUIRE(ours[r].size() == 17);
    for (int c = 0; c < 17; ++c)
      if (printed[r][c] != ours[r][c]) mismatches.insert({r, c});
  }
  CHECK(mismatches == expected_mismatches);

  for (const golden::CellException& ex : golden::table_exceptions()) {
    CHECK(printed[ex.row + 1][ex.col + 1] == ex.printed);
    CHECK(ours[ex.row + 1][ex.col + 1] == ex.corrected);
  }
}

TEST_CASE("low-dimensional levels come out right") {
  const CDAlgebra reals = build_algebra(0);
  CHECK(reals.dim() == 1);
  CHECK(reals.sign(0, 0) == 1);

  const CDAlgebra cplx = build_algebra(1);
  CHECK(cplx.sign(1, 1) == -1);

  const CDAlgebra quat = build_algebra(2);
  CHECK(quat.mul_basis(1, 2) == SignedIndex{1, 3});
  CHECK(quat.mul_basis(2, 3) == SignedIndex{1, 1});
  CHECK(quat.mul_basis(3, 1) == SignedIndex{1, 2});
  CHECK(quat.mul_basis(2, 1) == SignedIndex{-1, 3});

  CHECK_THROWS_AS(build_algebra(kMaxDimExp + 1), std::invalid_argument);
  CHECK_THROWS_AS(build_algebra(2).sign(4, 0), std::invalid_argument);
}

TEST_CASE("left multiplication by a unit squares to -1 on the basis") {
  for (unsigned n : {3u, 4u, 5u}) {
    const CDAlgebra alg = build_algebra(n);
    for (unsigned a = 1; a < alg.dim(); ++a)
      for (unsigned p = 1; p < alg.dim(); ++p)
        if (p != a) CHECK(alg.sign(a, p) * alg.sign(a, a ^ p) == -1);
  }
}

TEST_CASE("canonical triples associate on their own units; the octonion "
          "basis (e1,e2,e4) does not") {
  for (unsigned n : {2u, 3u, 4u, 5u}) {
    const CDAlgebra alg = build_algebra(n);
    for (const Triple& t : triples(alg)) {
      const Element ea = Element::basis(t.a), eb = Element::basis(t.b),
                    ec = Element::basis(t.c);
      CHECK(mul(alg, ea, eb) == ec);
      CHECK(mul(alg, eb, ec) == ea);
      CHECK(mul(alg, ec, ea) == eb);
      CHECK(mul(alg, mul(alg, ea, eb), ec) == mul(alg, ea, mul(alg, eb, ec)));
    }
  }
  const CDAlgebra oct = build_algebra(3);
  const Element e1 = Element::basis(1), e2 = Element::basis(2),
                e4 = Element::basis(4);
  CHECK(mul(oct, mul(oct, e1, e2), e4) == -mul(oct, e1, mul(oct, e2, e4)));
}

TEST_CASE("triple enumeration matches the count formula and printed lists") {
  for (unsigned n : {2u, 3u, 4u, 5u}) {
    const CDAlgebra alg = build_algebra(n);
    const unsigned units = alg.dim() - 1;
    CHECK(triples(alg).size() == units * (units - 1) / 6);
  }

  const CDAlgebra oct = build_algebra(3);
  const auto otrips = triples(oct);
  const auto& printed_o = golden::printed_o_trips();
  REQUIRE(otrips.size() == printed_o.size());
  for (std::size_t i = 0; i < otrips.size(); ++i) {
    CHECK(otrips[i].a == printed_o[i][0]);
    CHECK(otrips[i].b == printed_o[i][1]);
    CHECK(otrips[i].c == printed_o[i][2]);
  }

  // The 28 sedenion-involving triples match the printed S-trip list,
  // whose rows are already in canonical orientation.
  const CDAlgebra sed = build_algebra(4);
  std::set<std::array<unsigned, 3>> ours;
  for (const Triple& t : triples(sed))
    if (t.b >= 8 || t.c >= 8) ours.insert({t.a, t.b, t.c});
  std::set<std::array<unsigned, 3>> printed_s(golden::printed_s_trips().begin(),
                                              golden::printed_s_trips().end());
  CHECK(ours == printed_s);
  CHECK(ours.size() == 28);
}

TEST_CASE("triple_through orientation and errors") {
  const CDAlgebra sed = build_algebra(4);
  for (unsigned i = 1; i < 16; ++i)
    for (unsigned j = 1; j < 16; ++j) {
      if (i == j) continue;
      const Triple t = triple_through(sed, i, j);
      CHECK(t.a == std::min({i, j, i ^ j}));
      CHECK(t.c == (t.a ^ t.b));
      CHECK(sed.mul_basis(t.a, t.b) == SignedIndex{1, t.c});
    }
  CHECK_THROWS_AS(triple_through(sed, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(triple_through(sed, 0, 5), std::invalid_argument);
}

TEST_CASE("sparse element arithmetic") {
  const CDAlgebra sed = build_algebra(4);
  const Element a = Element::basis(3) + Element::basis(5, 2);
  const Element b = Element::basis(5, -2) + Element::basis(9);

  CHECK((a + b) == (Element::basis(3) + Element::basis(9)));
  CHECK((a - a).is_zero());
  CHECK((-a).coeff(5) == -2);
  CHECK((3 * a).coeff(5) == 6);
  CHECK(Element::basis(7, 0).is_zero());
  CHECK(a.coeff(4) == 0);

  // multiplying by the real unit is the identity
  CHECK(mul(sed, Element::basis(0), a) == a);
  CHECK(mul(sed, a, Element::basis(0)) == a);

  // bilinearity spot-check
  const Element c = Element::basis(1) - Element::basis(14, 3);
  CHECK(mul(sed, a + b, c) == mul(sed, a, c) + mul(sed, b, c));
  CHECK(mul(sed, c, a + b) == mul(sed, c, a) + mul(sed, c, b));

  CHECK(to_string(a) == "e3 + 2e5");
  CHECK(to_string(-a) == "-e3 - 2e5");
  CHECK(to_string(Element{}) == "0");
}

TEST_CASE("flexible power law holds numerically at N=4 and N=5") {
  std::mt19937 rng(20240811);
  for (unsigned n : {4u, 5u}) {
    const CDAlgebra alg = build_algebra(n);
    for (int trial = 0; trial < 20; ++trial) {
      const FloatElement x = random_unit(alg, rng);
      for (auto [p, q] : std::array<std::array<unsigned, 2>, 4>{
               {{1, 2}, {2, 3}, {3, 4}, {4, 4}}}) {
        const FloatElement lhs =
            mul(alg, pow_element(alg, x, p), pow_element(alg, x, q));
        CHECK(norm(lhs - pow_element(alg, x, p + q)) < 1e-9);
      }
    }
  }
  CHECK_THROWS_AS(pow_element(build_algebra(4), FloatElement::basis(1), 0),
                  std::invalid_argument);
}
