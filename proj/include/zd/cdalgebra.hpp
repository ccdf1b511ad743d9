#pragma once
// Cayley-Dickson 2^N-ion algebras with the XOR index law
// e_i * e_j = sign(i,j) * e_(i xor j), exact sparse element arithmetic
// over the generated sign table, and canonical associative-triple
// enumeration. Everything here is immutable after construction and
// safe to share across threads.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zd {

// Resource guard for table construction (2^8 = 256 units -> 64K sign
// entries). Not a mathematical bound; raise and recompile if needed.
inline constexpr unsigned kMaxDimExp = 8;

// Sign-rule variants for the doubling step (p,q)(r,s). `canonical` is
// (pr - conj(s)q, sp + q conj(r)) and reproduces the classical printed
// sedenion table. The other two are equally valid recursions that
// generate sign-inequivalent tables; they exist to demonstrate that
// table conventions are a real degree of freedom.
enum class Doubling {
  canonical,   // (pr - conj(s)q, sp + q conj(r))
  conj_swap,   // (pr - s conj(q), conj(p)s + rq)
  mirror,      // (rp - q conj(s), sp + q conj(r))
};

struct SignedIndex {
  int sign = 1;
  unsigned index = 0;
  friend bool operator==(const SignedIndex&, const SignedIndex&) = default;
};

class CDAlgebra {
 public:
  unsigned dim_exp() const { return dim_exp_; }
  unsigned dim() const { return 1u << dim_exp_; }
  Doubling doubling() const { return doubling_; }

  // sign(i,j) in {-1,+1}; indices must be < dim().
  int sign(unsigned i, unsigned j) const {
    check_index(i);
    check_index(j);
    return table_[(std::size_t{i} << dim_exp_) | j];
  }

  SignedIndex mul_basis(unsigned i, unsigned j) const {
    return {sign(i, j), i ^ j};
  }

 private:
  friend CDAlgebra build_algebra(unsigned, Doubling);
  void check_index(unsigned i) const {
    if (i >= dim()) throw std::invalid_argument("basis index out of range");
  }
  unsigned dim_exp_ = 0;
  Doubling doubling_ = Doubling::canonical;
  std::vector<int8_t> table_;
};

CDAlgebra build_algebra(unsigned dim_exp, Doubling d = Doubling::canonical);

// Sparse exact element: sorted unique indices, no stored zero
// coefficients. Coeff is integral for all zero-divisor logic; the
// double instantiation exists for the two floating-point checks
// (power associativity, zip identity).
template <typename Coeff>
class BasicElement {
 public:
  using Term = std::pair<unsigned, Coeff>;

  BasicElement() = default;
  static BasicElement basis(unsigned index, Coeff c = Coeff{1}) {
    BasicElement e;
    if (c != Coeff{}) e.terms_.push_back({index, c});
    return e;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coeff(unsigned index) const {
    for (const auto& [i, c] : terms_)
      if (i == index) return c;
    return Coeff{};
  }

  BasicElement operator-() const {
    BasicElement r = *this;
    for (auto& [i, c] : r.terms_) c = -c;
    return r;
  }

  BasicElement& operator+=(const BasicElement& o) {
    *this = *this + o;
    return *this;
  }
  BasicElement& operator-=(const BasicElement& o) {
    *this = *this + (-o);
    return *this;
  }

  friend BasicElement operator+(const BasicElement& a, const BasicElement& b) {
    BasicElement r;
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() ||
          (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
        r.terms_.push_back(b.terms_[j++]);
      } else {
        Coeff c = a.terms_[i].second + b.terms_[j].second;
        if (c != Coeff{}) r.terms_.push_back({a.terms_[i].first, c});
        ++i, ++j;
      }
    }
    return r;
  }
  friend BasicElement operator-(const BasicElement& a, const BasicElement& b) {
    return a + (-b);
  }
  friend BasicElement operator*(Coeff s, const BasicElement& a) {
    BasicElement r;
    if (s == Coeff{}) return r;
    r.terms_ = a.terms_;
    for (auto& [i, c] : r.terms_) c = s * c;
    return r;
  }

  friend bool operator==(const BasicElement&, const BasicElement&) = default;

 private:
  std::vector<Term> terms_;
};

using Element = BasicElement<long long>;
using FloatElement = BasicElement<double>;

template <typename Coeff>
BasicElement<Coeff> mul(const CDAlgebra& alg, const BasicElement<Coeff>& a,
                        const BasicElement<Coeff>& b) {
  BasicElement<Coeff> r;
  for (const auto& [i, ci] : a.terms()) {
    BasicElement<Coeff> row;
    for (const auto& [j, cj] : b.terms()) {
      auto [s, k] = alg.mul_basis(i, j);
      row += BasicElement<Coeff>::basis(k, Coeff(s) * ci * cj);
    }
    r += row;
  }
  return r;
}

double norm(const FloatElement& x);

// Repeated product x*(x*(x*...)) with p >= 1 factors.
FloatElement pow_element(const CDAlgebra& alg, const FloatElement& x,
                         unsigned p);

// Canonical triple (a,b,c): a is the lowest index, b the partner with
// e_a e_b = +e_c, c = a xor b. Enumerations are lexicographic.
struct Triple {
  unsigned a = 0, b = 0, c = 0;
  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

// The canonical triple through units {i, j, i xor j}.
Triple triple_through(const CDAlgebra& alg, unsigned i, unsigned j);

// All (2^N - 1)(2^N - 2)/6 canonical triples, lexicographic.
std::vector<Triple> triples(const CDAlgebra& alg);

std::string to_string(const Element& e);
std::string to_string(const Triple& t);

}  // namespace zd
