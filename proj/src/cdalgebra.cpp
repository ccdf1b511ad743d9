#include "zd/cdalgebra.hpp"

#include <algorithm>
#include <sstream>

namespace zd {
namespace {

// conj(e_t) = e_t for t = 0, -e_t otherwise.
int conj_sign(unsigned t) { return t == 0 ? 1 : -1; }

// One doubling step: lift a (half x half) sign table to (2half x 2half).
// Indices split as i = (hi, lo) with hi the top bit. Writing basis pairs
// as e_(0,x) = (e_x, 0) and e_(1,x) = (0, e_x), each product formula
// below is the doubling formula evaluated on those pairs.
std::vector<int8_t> double_table(const std::vector<int8_t>& prev,
                                 unsigned half_exp, Doubling d) {
  const unsigned half = 1u << half_exp;
  const unsigned dim = half << 1;
  auto s = [&](unsigned x, unsigned y) -> int {
    return prev[(std::size_t{x} << half_exp) | y];
  };
  std::vector<int8_t> next(std::size_t{dim} * dim);
  for (unsigned i = 0; i < dim; ++i) {
    const unsigned hi = i >> half_exp, x = i & (half - 1);
    for (unsigned j = 0; j < dim; ++j) {
      const unsigned hj = j >> half_exp, y = j & (half - 1);
      int v = 0;
      switch (d) {
        case Doubling::canonical:
          if (hi == 0 && hj == 0) v = s(x, y);
          else if (hi == 0 && hj == 1) v = s(y, x);
          else if (hi == 1 && hj == 0) v = conj_sign(y) * s(x, y);
          else v = -conj_sign(y) * s(y, x);
          break;
        case Doubling::conj_swap:
          if (hi == 0 && hj == 0) v = s(x, y);
          else if (hi == 0 && hj == 1) v = conj_sign(x) * s(x, y);
          else if (hi == 1 && hj == 0) v = s(y, x);
          else v = -conj_sign(x) * s(y, x);
          break;
        case Doubling::mirror:
          if (hi == 0 && hj == 0) v = s(y, x);
          else if (hi == 0 && hj == 1) v = s(y, x);
          else if (hi == 1 && hj == 0) v = conj_sign(y) * s(x, y);
          else v = -conj_sign(y) * s(x, y);
          break;
      }
      next[(std::size_t{i} << (half_exp + 1)) | j] = static_cast<int8_t>(v);
    }
  }
  return next;
}

}  // namespace

CDAlgebra build_algebra(unsigned dim_exp, Doubling d) {
  if (dim_exp > kMaxDimExp)
    throw std::invalid_argument("dim_exp exceeds kMaxDimExp");
  CDAlgebra alg;
  alg.dim_exp_ = dim_exp;
  alg.doubling_ = d;
  alg.table_ = {1};  // level 0: the reals
  for (unsigned n = 0; n < dim_exp; ++n)
    alg.table_ = double_table(alg.table_, n, d);
  return alg;
}

double norm(const FloatElement& x) {
  double s = 0;
  for (const auto& [i, c] : x.terms()) s += c * c;
  return std::sqrt(s);
}

FloatElement pow_element(const CDAlgebra& alg, const FloatElement& x,
                         unsigned p) {
  if (p == 0) throw std::invalid_argument("pow_element requires p >= 1");
  FloatElement acc = x;
  for (unsigned k = 1; k < p; ++k) acc = mul(alg, x, acc);
  return acc;
}

Triple triple_through(const CDAlgebra& alg, unsigned i, unsigned j) {
  if (i == 0 || j == 0 || i == j || i >= alg.dim() || j >= alg.dim())
    throw std::invalid_argument("triple_through needs distinct nonzero units");
  unsigned k = i ^ j;
  unsigned a = std::min({i, j, k});
  unsigned p = (a == i) ? j : i;
  unsigned q = a ^ p;
  // exactly one of (a,p), (a,q) multiplies positively; it fixes the cycle
  unsigned b = alg.sign(a, p) > 0 ? p : q;
  return {a, b, a ^ b};
}

std::vector<Triple> triples(const CDAlgebra& alg) {
  if (alg.dim_exp() < 2)
    throw std::invalid_argument("triples requires dim_exp >= 2");
  std::vector<Triple> out;
  const unsigned n = alg.dim();
  for (unsigned a = 1; a < n; ++a)
    for (unsigned b = a + 1; b < n; ++b) {
      unsigned c = a ^ b;
      if (c < b) continue;  // {a,b,c} visited once, with a minimal
      Triple t = triple_through(alg, a, b);
      out.push_back(t);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const Element& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : e.terms()) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    long long a = c < 0 ? -c : c;
    if (a != 1 || i == 0) os << a;
    if (i != 0) os << "e" << i;
    first = false;
  }
  return os.str();
}

std::string to_string(const Triple& t) {
  std::ostringstream os;
  os << "(" << t.a << "," << t.b << "," << t.c << ")";
  return os.str();
}

}  // namespace zd
