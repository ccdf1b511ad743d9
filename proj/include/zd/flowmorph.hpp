#pragma once
// Fano-plane labeling machinery: the canonical oriented triangle of
// O-trips, sign-flip orbits, Moreno's O-copy slot mapping with its
// mis-signed-triple detection, flowmorphism testing under the
// 168-element collineation group, and the symbolic table-count
// formula.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "zd/cdalgebra.hpp"

namespace zd {

// An oriented Fano line: a cyclic triple of point labels in 1..7,
// stored with its lowest label first.
using FanoLine = std::array<unsigned, 3>;

struct FanoLabeling {
  std::array<FanoLine, 7> lines{};
  friend bool operator==(const FanoLabeling&, const FanoLabeling&) =
      default;
};

// The seven O-trips in their table orientation.
FanoLabeling canonical_fano();

// A subset of the seven unit labels whose signs flip; bit k of `mask`
// stands for label k.
struct SignPattern {
  unsigned mask = 0;
  bool flips(unsigned label) const { return (mask >> label) & 1u; }
};

// Reverses every line containing an odd number of flipped labels and
// reports how many; the count is always 0, 3, 4, or 7.
std::pair<FanoLabeling, int> apply_sign_pattern(const FanoLabeling& l,
                                                const SignPattern& p);

// True when some rotation of the cyclic triple is strictly increasing.
bool counting_ordered(const FanoLine& line);

std::vector<FanoLine> out_of_order_lines(const FanoLabeling& l);

struct SignedUnit {
  unsigned index = 0;
  int sign = 1;
  friend bool operator==(const SignedUnit&, const SignedUnit&) = default;
};

// Moreno's O-copy: the units (a, b, ab, (ay)b, yb, ay, y) sitting in
// slots 1..7.
struct MorenoCopy {
  std::array<SignedUnit, 7> slots{};
  const SignedUnit& slot(unsigned label) const { return slots[label - 1]; }
  friend bool operator==(const MorenoCopy&, const MorenoCopy&) = default;
};

// Builds the O-copy over the 16-D table from octonion indices a, b and
// a third unit y. The anti-associativity (ay)b = -a(yb) is checked
// exactly; a triple that associates instead gets a std::domain_error
// quoting its (vanishing) associator. Out-of-range or repeated indices
// throw std::invalid_argument.
MorenoCopy moreno_copy(const CDAlgebra& alg, unsigned a, unsigned b,
                       unsigned y);

// Canonical lines whose slot products come out mis-signed:
// slot_i slot_j = -slot_k instead of +slot_k.
std::vector<FanoLine> missigned_triples(const CDAlgebra& alg,
                                        const MorenoCopy& copy);

// The labeling a copy induces on the triangle: each canonical line,
// reversed when its slot product is mis-signed.
FanoLabeling induced_labeling(const CDAlgebra& alg, const MorenoCopy& copy);

// True iff some relabeling of the seven points carries l's oriented
// lines onto the canonical ones. Throws std::domain_error unless l is
// a valid Fano labeling (three lines through every point, any two
// lines sharing exactly one).
bool is_flowmorphic(const FanoLabeling& l);

// The 168 point permutations preserving the canonical line set;
// perm[k] is the image of label k (entry 0 unused).
const std::vector<std::array<unsigned, 8>>& fano_collineations();

struct CountingOrderReport {
  // reversal_multiplicity[r] = number of the 128 sign patterns
  // reversing exactly r lines.
  std::array<int, 8> reversal_multiplicity{};
  int canonical_out_of_order = 0;
  int min_out_of_order = 0;
  unsigned best_mask = 0;  // a flip set attaining the minimum
  bool zero_attainable = false;
};

// Scans all 2^7 sign patterns for reversal counts and counting-order
// failures; no pattern puts all seven triples in counting order.
CountingOrderReport counting_order_search();

// Distinct 16-D tables under XOR indexing, kept symbolic:
// 15! / |PGL(4,2)| * 2^(15-4). The surrounding prose misquotes the
// arithmetic, so only the factors are authoritative.
struct TableCountFormula {
  long long labelings = 0;         // 15!
  long long space_symmetries = 0;  // |PGL(4,2)| = 20160
  long long sign_patterns = 0;     // 2^11
  long long total = 0;
};
TableCountFormula table_count_formula();

}  // namespace zd
