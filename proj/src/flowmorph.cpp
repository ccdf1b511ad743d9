#include "zd/flowmorph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace zd {

namespace {

constexpr std::array<FanoLine, 7> kCanonicalLines = {{{1, 2, 3},
                                                      {1, 4, 5},
                                                      {1, 7, 6},
                                                      {2, 4, 6},
                                                      {2, 5, 7},
                                                      {3, 4, 7},
                                                      {3, 6, 5}}};

FanoLine rotate_lowest_first(FanoLine line) {
  while (!(line[0] < line[1] && line[0] < line[2]))
    line = {line[1], line[2], line[0]};
  return line;
}

FanoLine reverse_line(const FanoLine& line) {
  return rotate_lowest_first({line[2], line[1], line[0]});
}

std::array<unsigned, 3> unordered(const FanoLine& line) {
  std::array<unsigned, 3> s = line;
  std::sort(s.begin(), s.end());
  return s;
}

void validate_labeling(const FanoLabeling& l) {
  std::array<int, 8> through{};
  for (const FanoLine& line : l.lines) {
    std::set<unsigned> pts(line.begin(), line.end());
    if (pts.size() != 3 || *pts.begin() < 1 || *pts.rbegin() > 7)
      throw std::domain_error("line is not a triple of labels in 1..7");
    for (unsigned p : line) ++through[p];
  }
  for (unsigned p = 1; p <= 7; ++p)
    if (through[p] != 3)
      throw std::domain_error("every point must lie on exactly 3 lines");
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) {
      int shared = 0;
      for (unsigned p : l.lines[i])
        for (unsigned q : l.lines[j])
          if (p == q) ++shared;
      if (shared != 1)
        throw std::domain_error("two lines must share exactly one point");
    }
}

// Oriented lines as a sorted, rotation-normalized set.
std::array<FanoLine, 7> normal_form(const FanoLabeling& l) {
  std::array<FanoLine, 7> out;
  for (int i = 0; i < 7; ++i) out[i] = rotate_lowest_first(l.lines[i]);
  std::sort(out.begin(), out.end());
  return out;
}

SignedUnit unit_product(const CDAlgebra& alg, const SignedUnit& u,
                        const SignedUnit& v) {
  return {u.index ^ v.index,
          u.sign * v.sign * alg.sign(u.index, v.index)};
}

}  // namespace

FanoLabeling canonical_fano() { return {kCanonicalLines}; }

std::pair<FanoLabeling, int> apply_sign_pattern(const FanoLabeling& l,
                                                const SignPattern& p) {
  FanoLabeling out = l;
  int reversed = 0;
  for (FanoLine& line : out.lines) {
    int flipped = 0;
    for (unsigned label : line)
      if (p.flips(label)) ++flipped;
    if (flipped % 2 == 1) {
      line = reverse_line(line);
      ++reversed;
    }
  }
  return {out, reversed};
}

bool counting_ordered(const FanoLine& line) {
  for (int r = 0; r < 3; ++r)
    if (line[r] < line[(r + 1) % 3] && line[(r + 1) % 3] < line[(r + 2) % 3])
      return true;
  return false;
}

std::vector<FanoLine> out_of_order_lines(const FanoLabeling& l) {
  std::vector<FanoLine> out;
  for (const FanoLine& line : l.lines)
    if (!counting_ordered(line)) out.push_back(rotate_lowest_first(line));
  return out;
}

MorenoCopy moreno_copy(const CDAlgebra& alg, unsigned a, unsigned b,
                       unsigned y) {
  if (alg.dim_exp() != 4)
    throw std::invalid_argument("Moreno copies live in the 16-D table");
  if (a < 1 || a > 7 || b < 1 || b > 7)
    throw std::invalid_argument("a and b must be octonion indices");
  if (y < 1 || y >= alg.dim())
    throw std::invalid_argument("y out of range");
  if (a == b || y == a || y == b)
    throw std::invalid_argument("a, b, y must be distinct");

  const SignedUnit ua{a, 1}, ub{b, 1}, uy{y, 1};
  const SignedUnit ab = unit_product(alg, ua, ub);
  const SignedUnit ay = unit_product(alg, ua, uy);
  const SignedUnit ay_b = unit_product(alg, ay, ub);
  const SignedUnit yb = unit_product(alg, uy, ub);
  const SignedUnit a_yb = unit_product(alg, ua, yb);
  if (ay_b.sign != -a_yb.sign)
    throw std::domain_error(
        "(" + std::to_string(a) + ", " + std::to_string(y) + ", " +
        std::to_string(b) +
        ") associates: [a, y, b] = (ay)b - a(yb) = 0, need (ay)b = -a(yb)");
  return {{ua, ub, ab, ay_b, yb, ay, uy}};
}

std::vector<FanoLine> missigned_triples(const CDAlgebra& alg,
                                        const MorenoCopy& copy) {
  std::vector<FanoLine> out;
  for (const FanoLine& line : kCanonicalLines) {
    const SignedUnit prod =
        unit_product(alg, copy.slot(line[0]), copy.slot(line[1]));
    const SignedUnit& expect = copy.slot(line[2]);
    if (prod.index != expect.index)
      throw std::domain_error("slot units are not XOR-closed");
    if (prod.sign != expect.sign) out.push_back(line);
  }
  return out;
}

FanoLabeling induced_labeling(const CDAlgebra& alg, const MorenoCopy& copy) {
  const auto missigned = missigned_triples(alg, copy);
  FanoLabeling out = canonical_fano();
  for (FanoLine& line : out.lines)
    if (std::find(missigned.begin(), missigned.end(), line) !=
        missigned.end())
      line = reverse_line(line);
  return out;
}

bool is_flowmorphic(const FanoLabeling& l) {
  validate_labeling(l);
  const std::array<FanoLine, 7> target = normal_form(canonical_fano());
  std::array<unsigned, 7> perm = {1, 2, 3, 4, 5, 6, 7};
  do {
    FanoLabeling mapped = l;
    for (FanoLine& line : mapped.lines)
      for (unsigned& p : line) p = perm[p - 1];
    if (normal_form(mapped) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

const std::vector<std::array<unsigned, 8>>& fano_collineations() {
  static const std::vector<std::array<unsigned, 8>> group = [] {
    std::set<std::array<unsigned, 3>> lineset;
    for (const FanoLine& line : kCanonicalLines)
      lineset.insert(unordered(line));
    std::vector<std::array<unsigned, 8>> out;
    std::array<unsigned, 7> perm = {1, 2, 3, 4, 5, 6, 7};
    do {
      bool preserves = true;
      for (const FanoLine& line : kCanonicalLines) {
        const FanoLine image = {perm[line[0] - 1], perm[line[1] - 1],
                                perm[line[2] - 1]};
        if (!lineset.count(unordered(image))) {
          preserves = false;
          break;
        }
      }
      if (preserves) {
        std::array<unsigned, 8> entry{};
        for (unsigned k = 1; k <= 7; ++k) entry[k] = perm[k - 1];
        out.push_back(entry);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }();
  return group;
}

CountingOrderReport counting_order_search() {
  CountingOrderReport report;
  const FanoLabeling base = canonical_fano();
  report.canonical_out_of_order =
      static_cast<int>(out_of_order_lines(base).size());
  report.min_out_of_order = 8;
  for (unsigned bits = 0; bits < 128; ++bits) {
    const SignPattern p{bits << 1};
    const auto [labeling, reversed] = apply_sign_pattern(base, p);
    ++report.reversal_multiplicity[reversed];
    const int ooo = static_cast<int>(out_of_order_lines(labeling).size());
    if (ooo < report.min_out_of_order) {
      report.min_out_of_order = ooo;
      report.best_mask = p.mask;
    }
  }
  report.zero_attainable = report.min_out_of_order == 0;
  return report;
}

TableCountFormula table_count_formula() {
  TableCountFormula f;
  f.labelings = 1;
  for (long long k = 2; k <= 15; ++k) f.labelings *= k;
  f.space_symmetries = 20160;
  f.sign_patterns = 1LL << 11;
  f.total = f.labelings / f.space_symmetries * f.sign_patterns;
  return f;
}

}  // namespace zd
