#include "zd/flowmorph.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"

using namespace zd;

namespace {

const CDAlgebra& sed() {
  static const CDAlgebra alg = build_algebra(4);
  return alg;
}

SignPattern flips(std::initializer_list<unsigned> labels) {
  SignPattern p;
  for (unsigned l : labels) p.mask |= 1u << l;
  return p;
}

}  // namespace

TEST_CASE("the canonical triangle carries the seven O-trips") {
  const FanoLabeling fano = canonical_fano();
  const std::array<FanoLine, 7> expected = {{{1, 2, 3},
                                             {1, 4, 5},
                                             {1, 7, 6},
                                             {2, 4, 6},
                                             {2, 5, 7},
                                             {3, 4, 7},
                                             {3, 6, 5}}};
  CHECK(fano.lines == expected);
  // Fano axioms: singleton intersections, three lines through a point.
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) {
      std::set<unsigned> a(fano.lines[i].begin(), fano.lines[i].end());
      int shared = 0;
      for (unsigned p : fano.lines[j]) shared += a.count(p);
      CHECK(shared == 1);
    }
  for (unsigned p = 1; p <= 7; ++p) {
    int through = 0;
    for (const FanoLine& line : fano.lines)
      through += std::count(line.begin(), line.end(), p);
    CHECK(through == 3);
  }
}

TEST_CASE("sign flips reverse 0, 3, 4, or 7 lines") {
  const FanoLabeling base = canonical_fano();

  const auto [unchanged, zero] = apply_sign_pattern(base, flips({}));
  CHECK(zero == 0);
  CHECK(unchanged == base);

  const auto [six_flipped, three] = apply_sign_pattern(base, flips({6}));
  CHECK(three == 3);
  std::vector<FanoLine> changed;
  for (int i = 0; i < 7; ++i)
    if (six_flipped.lines[i] != base.lines[i])
      changed.push_back(base.lines[i]);
  CHECK(changed == std::vector<FanoLine>{{1, 7, 6}, {2, 4, 6}, {3, 6, 5}});
  CHECK(six_flipped.lines[2] == FanoLine{1, 6, 7});
  CHECK(six_flipped.lines[3] == FanoLine{2, 6, 4});
  CHECK(six_flipped.lines[6] == FanoLine{3, 5, 6});

  const auto [all_reversed, seven] = apply_sign_pattern(base, flips({1, 2, 3}));
  CHECK(seven == 7);
  for (int i = 0; i < 7; ++i)
    CHECK(all_reversed.lines[i] != base.lines[i]);
  // Reversal is an involution pattern-wise: applying the same flips
  // twice restores the original orientation.
  CHECK(apply_sign_pattern(all_reversed, flips({1, 2, 3})).first == base);
}

TEST_CASE("reversal multiplicities over all 128 patterns") {
  const CountingOrderReport report = counting_order_search();
  int total = 0;
  for (int r = 0; r < 8; ++r) {
    total += report.reversal_multiplicity[r];
    if (r != 0 && r != 3 && r != 4 && r != 7)
      CHECK(report.reversal_multiplicity[r] == 0);
  }
  CHECK(total == 128);
  CHECK(report.reversal_multiplicity[0] == 8);
  CHECK(report.reversal_multiplicity[3] == 56);
  CHECK(report.reversal_multiplicity[4] == 56);
  CHECK(report.reversal_multiplicity[7] == 8);
}

TEST_CASE("counting order: two stragglers, one at best, never zero") {
  const CountingOrderReport report = counting_order_search();
  CHECK(report.canonical_out_of_order == 2);
  CHECK(out_of_order_lines(canonical_fano()) ==
        std::vector<FanoLine>{{1, 7, 6}, {3, 6, 5}});
  CHECK(report.min_out_of_order == 1);
  CHECK_FALSE(report.zero_attainable);
  // The flip-6 variant leaves only (2,6,4) out of order.
  const auto variant = apply_sign_pattern(canonical_fano(), flips({6})).first;
  CHECK(out_of_order_lines(variant) == std::vector<FanoLine>{{2, 6, 4}});
  const auto best =
      apply_sign_pattern(canonical_fano(), SignPattern{report.best_mask});
  CHECK(out_of_order_lines(best.first).size() == 1);
}

TEST_CASE("Moreno copy of (1,2,12)") {
  const MorenoCopy copy = moreno_copy(sed(), 1, 2, 12);
  const std::array<SignedUnit, 7> expected = {{{1, 1},
                                               {2, 1},
                                               {3, 1},
                                               {15, -1},
                                               {14, 1},
                                               {13, -1},
                                               {12, 1}}};
  CHECK(copy.slots == expected);
  CHECK(missigned_triples(sed(), copy) ==
        std::vector<FanoLine>{{3, 4, 7}, {3, 6, 5}});
  CHECK_FALSE(is_flowmorphic(induced_labeling(sed(), copy)));
  // The image's indices close under XOR.
  std::set<unsigned> indices;
  for (const SignedUnit& u : copy.slots) indices.insert(u.index);
  CHECK(indices.size() == 7);
  for (unsigned i : indices)
    for (unsigned j : indices)
      if (i != j) CHECK(indices.count(i ^ j) == 1);
}

TEST_CASE("Moreno copy of (1,2,7) is the octonions proper") {
  const MorenoCopy copy = moreno_copy(sed(), 1, 2, 7);
  for (unsigned label = 1; label <= 7; ++label) {
    CHECK(copy.slot(label).index == label);
    CHECK(copy.slot(label).sign == 1);
  }
  CHECK(missigned_triples(sed(), copy).empty());
  CHECK(is_flowmorphic(induced_labeling(sed(), copy)));
}

TEST_CASE("Moreno copy preconditions") {
  CHECK_THROWS_AS(moreno_copy(sed(), 1, 2, 3), std::domain_error);
  CHECK_THROWS_AS(moreno_copy(sed(), 2, 4, 6), std::domain_error);
  CHECK_THROWS_AS(moreno_copy(sed(), 1, 1, 12), std::invalid_argument);
  CHECK_THROWS_AS(moreno_copy(sed(), 1, 9, 12), std::invalid_argument);
  CHECK_THROWS_AS(moreno_copy(sed(), 0, 2, 12), std::invalid_argument);
  CHECK_THROWS_AS(moreno_copy(sed(), 1, 2, 16), std::invalid_argument);
  CHECK_THROWS_AS(moreno_copy(sed(), 1, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(moreno_copy(build_algebra(3), 1, 2, 7),
                  std::invalid_argument);
}

TEST_CASE("every valid copy is either an 8-Ball copy or harbors divisors") {
  int eight_ball = 0, harboring = 0;
  for (unsigned a = 1; a <= 7; ++a)
    for (unsigned b = 1; b <= 7; ++b) {
      if (a == b) continue;
      for (unsigned y = 8; y <= 15; ++y) {
        const MorenoCopy copy = moreno_copy(sed(), a, b, y);
        bool contains_eight = false;
        for (const SignedUnit& u : copy.slots)
          if (u.index == 8) contains_eight = true;
        const auto missigned = missigned_triples(sed(), copy);
        const bool flow = is_flowmorphic(induced_labeling(sed(), copy));
        if (contains_eight) {
          ++eight_ball;
          CHECK(missigned.empty());
          CHECK(flow);
        } else {
          ++harboring;
          CHECK(missigned ==
                std::vector<FanoLine>{{3, 4, 7}, {3, 6, 5}});
          CHECK_FALSE(flow);
        }
      }
    }
  CHECK(eight_ball == 168);
  CHECK(harboring == 168);
}

TEST_CASE("flowmorphism is invariant under the collineation group") {
  const auto& group = fano_collineations();
  CHECK(group.size() == 168);
  // Closure: composing two symmetries stays in the group.
  const auto& f = group[17];
  const auto& g = group[101];
  std::array<unsigned, 8> fg{};
  for (unsigned k = 1; k <= 7; ++k) fg[k] = f[g[k]];
  CHECK(std::find(group.begin(), group.end(), fg) != group.end());

  const FanoLabeling base = canonical_fano();
  CHECK(is_flowmorphic(base));
  for (std::size_t gi = 0; gi < group.size(); gi += 7) {
    FanoLabeling mapped = base;
    for (FanoLine& line : mapped.lines)
      for (unsigned& p : line) p = group[gi][p];
    CHECK(is_flowmorphic(mapped));
  }

  FanoLabeling broken = base;
  broken.lines[0] = {1, 2, 4};  // no longer a Fano plane
  CHECK_THROWS_AS(is_flowmorphic(broken), std::domain_error);
}

TEST_CASE("the table-count formula is kept symbolic") {
  const TableCountFormula f = table_count_formula();
  CHECK(f.labelings == 1307674368000LL);
  CHECK(f.space_symmetries == 20160);
  CHECK(f.labelings % f.space_symmetries == 0);
  CHECK(f.sign_patterns == 2048);
  CHECK(f.total == 132843110400LL);
}
