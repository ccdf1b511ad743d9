#include "zd/zerodiv.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace zd {
namespace {

void require_sedenions(const CDAlgebra& alg) {
  if (alg.dim_exp() != 4)
    throw std::invalid_argument("operation requires the dim_exp = 4 algebra");
}

const std::vector<Triple>& octonion_trips() {
  static const std::vector<Triple> t = [] {
    return triples(build_algebra(3));
  }();
  return t;
}

bool contains_unit(const Triple& t, unsigned u) {
  return t.a == u || t.b == u || t.c == u;
}

// Successor of u in the cyclic order (a, b, c).
unsigned cyclic_next(const Triple& t, unsigned u) {
  if (u == t.a) return t.b;
  if (u == t.b) return t.c;
  return t.a;
}

Trio trio_by_g(const CDAlgebra& alg, const Triple& otrip, unsigned g);

}  // namespace

Element diagonal_element(const Diagonal& d) {
  return Element::basis(d.a.o) + Element::basis(d.a.S, d.sign);
}

std::vector<Assessor> enumerate_assessors(const CDAlgebra& alg) {
  require_sedenions(alg);
  std::vector<Assessor> out;
  for (unsigned o = 1; o <= 7; ++o)
    for (unsigned S = 9; S <= 15; ++S)
      if (S != o + 8) out.push_back({o, S});
  return out;
}

bool is_assessor(const CDAlgebra& alg, unsigned o, unsigned S) {
  require_sedenions(alg);
  return o >= 1 && o <= 7 && S >= 9 && S <= 15 && S != o + 8;
}

bool is_zero_coupling(const CDAlgebra& alg, const Diagonal& lhs,
                      const Diagonal& rhs) {
  require_sedenions(alg);
  return mul(alg, diagonal_element(lhs), diagonal_element(rhs)).is_zero();
}

std::vector<Assessor> coassessor_partners(const CDAlgebra& alg,
                                          const Assessor& a) {
  require_sedenions(alg);
  if (!is_assessor(alg, a.o, a.S))
    throw std::invalid_argument("not an assessor: " + to_string(a));
  std::vector<Assessor> out;
  for (const Assessor& b : enumerate_assessors(alg)) {
    if (b == a) continue;
    if (is_zero_coupling(alg, {a, +1}, {b, +1}) ||
        is_zero_coupling(alg, {a, +1}, {b, -1}))
      out.push_back(b);
  }
  return out;
}

int edge_sign(const CDAlgebra& alg, const Assessor& a, const Assessor& b) {
  if (is_zero_coupling(alg, {a, +1}, {b, +1})) return +1;
  if (is_zero_coupling(alg, {a, +1}, {b, -1})) return -1;
  throw std::invalid_argument("not co-assessors: " + to_string(a) + " " +
                              to_string(b));
}

Coupling make_coupling(const CDAlgebra& alg, const Assessor& a,
                       const Assessor& b) {
  const Assessor lo = std::min(a, b), hi = std::max(a, b);
  return {{lo, +1}, {hi, edge_sign(alg, lo, hi)}};
}

std::vector<Coupling> enumerate_couplings(const CDAlgebra& alg) {
  require_sedenions(alg);
  std::vector<Coupling> out;
  const auto assessors = enumerate_assessors(alg);
  for (std::size_t i = 0; i < assessors.size(); ++i)
    for (std::size_t j = i + 1; j < assessors.size(); ++j) {
      for (int s : {+1, -1})
        if (is_zero_coupling(alg, {assessors[i], s}, {assessors[j], +1}))
          out.push_back({{assessors[i], s}, {assessors[j], +1}});
      for (int s : {+1, -1})
        if (is_zero_coupling(alg, {assessors[i], s}, {assessors[j], -1}))
          out.push_back({{assessors[i], s}, {assessors[j], -1}});
    }
  std::sort(out.begin(), out.end());
  return out;
}

Assessor rule1_third(const CDAlgebra& alg, const Assessor& a,
                     const Assessor& b) {
  require_sedenions(alg);
  if (a.g() != b.g() || a == b)
    throw std::invalid_argument("rule 1 needs distinct co-assessors");
  const Assessor third{a.o ^ b.o, a.o ^ b.S};
  if (!is_assessor(alg, third.o, third.S))
    throw std::invalid_argument("rule 1 completion is not an assessor");
  return third;
}

Trio rule1_complete(const CDAlgebra& alg, const Assessor& a,
                    const Assessor& b) {
  edge_sign(alg, a, b);  // throws unless they couple
  return trio_by_g(alg, triple_through(alg, a.o, b.o), a.g());
}

namespace {

Trio trio_by_g(const CDAlgebra& alg, const Triple& otrip, unsigned g) {
  Trio t;
  t.otrip = otrip;
  unsigned o = otrip.a;
  for (int k = 0; k < 3; ++k, o = cyclic_next(otrip, o))
    t.members[k] = {o, o ^ g};
  int minus = 0;
  for (int k = 0; k < 3; ++k) {
    t.edge_signs[k] = edge_sign(alg, t.members[k], t.members[(k + 1) % 3]);
    if (t.edge_signs[k] < 0) ++minus;
  }
  if (minus == 3) t.kind = TrioKind::zigzag;
  else if (minus == 1) t.kind = TrioKind::trefoil;
  else throw std::logic_error("trio with unexpected edge-sign pattern");
  return t;
}

}  // namespace

std::vector<Trio> enumerate_trios(const CDAlgebra& alg) {
  require_sedenions(alg);
  std::vector<Trio> out;
  for (const Triple& t : octonion_trips()) {
    Automorpheme am = automorpheme_of(alg, t);
    for (unsigned g : am.sedenions) out.push_back(trio_by_g(alg, t, g));
  }
  return out;
}

TwistResult rule2_twist(const CDAlgebra& alg, const Coupling& c) {
  require_sedenions(alg);
  if (!is_zero_coupling(alg, c.lhs, c.rhs))
    throw std::invalid_argument("rule 2 requires a zero coupling");
  const unsigned o1 = c.lhs.a.o, S1 = c.lhs.a.S;
  const unsigned o2 = c.rhs.a.o, S2 = c.rhs.a.S;
  const int alpha = c.lhs.sign, beta = c.rhs.sign;

  TwistResult r;
  r.g = c.lhs.a.g();
  // Exogamous regrouping: each octonion keeps its parenthesis, the two
  // sedenions trade places. Exactly one relative signing couples.
  r.twisted = make_coupling(alg, {o1, S2}, {o2, S1});
  // Endogamous regrouping: sedenions together, octonions together. Its
  // product collapses onto the shared XOR index G.
  const Element sed = Element::basis(S2, beta) + Element::basis(S1, alpha);
  const Element oct = Element::basis(o2) - Element::basis(o1);
  r.failed = mul(alg, sed, oct);
  if (r.failed.size() != 1 || r.failed.terms()[0].first != r.g)
    throw std::logic_error("rejected twist branch not supported on G");
  return r;
}

Automorpheme automorpheme_of(const CDAlgebra& alg, const Triple& otrip) {
  require_sedenions(alg);
  const auto& trips = octonion_trips();
  if (std::find(trips.begin(), trips.end(), otrip) == trips.end())
    throw std::invalid_argument("not a canonical octonion triple");
  Automorpheme am;
  am.otrip = otrip;
  std::size_t n = 0;
  for (unsigned S = 9; S <= 15; ++S) {
    if (S == (8 ^ otrip.a) || S == (8 ^ otrip.b) || S == (8 ^ otrip.c))
      continue;
    am.sedenions[n++] = S;
  }
  return am;
}

std::array<Relocation, 2> rule3_relocate(const CDAlgebra& alg,
                                         const Assessor& a) {
  require_sedenions(alg);
  if (!is_assessor(alg, a.o, a.S))
    throw std::invalid_argument("not an assessor: " + to_string(a));
  std::vector<Relocation> found;
  const auto& trips = octonion_trips();
  for (std::size_t i = 0; i < trips.size(); ++i) {
    if (!contains_unit(trips[i], a.o)) continue;
    Automorpheme am = automorpheme_of(alg, trips[i]);
    if (std::find(am.sedenions.begin(), am.sedenions.end(), a.S) ==
        am.sedenions.end())
      continue;
    found.push_back(
        {unsigned(i + 1), am, trio_by_g(alg, trips[i], a.g())});
  }
  if (found.size() != 2)
    throw std::logic_error("assessor not in exactly two listings");
  return {found[0], found[1]};
}

GoToListing goto_listing(const CDAlgebra& alg, const Triple& otrip) {
  require_sedenions(alg);
  GoToListing l;
  l.home = automorpheme_of(alg, otrip);
  const auto& trips = octonion_trips();
  l.id = unsigned(std::find(trips.begin(), trips.end(), otrip) -
                  trips.begin()) + 1;

  // Column 1 holds the unique triple zigzag; the trefoil columns follow
  // at XOR offsets (c, a, b) from the zigzag's shared invariant.
  unsigned g1 = 0;
  for (unsigned g : l.home.sedenions)
    if (trio_by_g(alg, otrip, g).kind == TrioKind::zigzag) g1 = g;
  if (g1 == 0) throw std::logic_error("listing without a zigzag column");
  const std::array<unsigned, 4> gs = {g1, g1 ^ otrip.c, g1 ^ otrip.a,
                                      g1 ^ otrip.b};

  for (int col = 0; col < 4; ++col) {
    GoToColumn& column = l.columns[col];
    column.g = gs[col];
    column.signature = gs[col] ^ 8u;
    column.trio = trio_by_g(alg, otrip, gs[col]);
    // Printed phase: columns 1-2 open on the up diagonal of the lowest
    // o-unit, columns 3-4 on its down diagonal; signs then propagate
    // along the edges, flipping wholesale after half a cycle.
    std::array<Diagonal, 6> beads;
    beads[0] = {column.trio.members[0], col < 2 ? +1 : -1};
    for (int k = 0; k < 2; ++k)
      beads[k + 1] = {column.trio.members[k + 1],
                      beads[k].sign * column.trio.edge_signs[k]};
    for (int k = 0; k < 3; ++k)
      beads[k + 3] = {beads[k].a, -beads[k].sign};
    for (int k = 0; k < 6; ++k)
      column.rows[k] = {beads[k], beads[(k + 1) % 6]};
  }
  return l;
}

std::vector<GoToListing> all_goto_listings(const CDAlgebra& alg) {
  std::vector<GoToListing> out;
  for (const Triple& t : octonion_trips()) out.push_back(goto_listing(alg, t));
  return out;
}

EightBallReport eight_ball_check(const CDAlgebra& alg) {
  require_sedenions(alg);
  EightBallReport r;

  // No diagonal of the plane (i, j) divides zero against any plane
  // diagonal whatsoever (both orders, all signings).
  auto plane_is_inert = [&](unsigned i, unsigned j) {
    for (unsigned k = 1; k < 16; ++k)
      for (unsigned l = k + 1; l < 16; ++l)
        for (int s1 : {+1, -1})
          for (int s2 : {+1, -1}) {
            const Element p = Element::basis(i) + Element::basis(j, s1);
            const Element q = Element::basis(k) + Element::basis(l, s2);
            if (mul(alg, p, q).is_zero() || mul(alg, q, p).is_zero())
              return false;
          }
    return true;
  };

  r.e8_in_no_assessor = true;
  for (unsigned o = 1; o <= 7; ++o)
    if (is_assessor(alg, o, 8)) r.e8_in_no_assessor = false;
  for (unsigned i = 1; i < 16 && r.e8_in_no_assessor; ++i)
    if (i != 8 && !plane_is_inert(std::min(i, 8u), std::max(i, 8u)))
      r.e8_in_no_assessor = false;

  // The three planes of each shut-out quaternion copy {o, 8, o+8}.
  r.excluded_copies_clean = true;
  for (unsigned o = 1; o <= 7 && r.excluded_copies_clean; ++o)
    if (!plane_is_inert(o, 8) || !plane_is_inert(o, o + 8) ||
        !plane_is_inert(8, o + 8))
      r.excluded_copies_clean = false;

  // Empirically a trio invariant G in 8..15 is shut out of an O-trip's
  // listing exactly when some member plane (m, m^G) is no assessor.
  r.exclusion_sets_match = true;
  for (const Triple& t : octonion_trips()) {
    std::array<unsigned, 4> expected = {8, 8 ^ t.a, 8 ^ t.b, 8 ^ t.c};
    std::sort(expected.begin(), expected.end());
    std::vector<unsigned> excluded;
    for (unsigned g = 8; g <= 15; ++g) {
      bool admitted = true;
      for (unsigned m : {t.a, t.b, t.c})
        if (!is_assessor(alg, m, m ^ g)) admitted = false;
      if (!admitted) excluded.push_back(g);
    }
    r.exclusion_sets.push_back(expected);
    if (excluded.size() != expected.size() ||
        !std::equal(expected.begin(), expected.end(), excluded.begin()))
      r.exclusion_sets_match = false;
  }
  return r;
}

double zip_check(const CDAlgebra& alg, const Coupling& c, double x,
                 double y) {
  require_sedenions(alg);
  if (!is_zero_coupling(alg, c.lhs, c.rhs))
    throw std::invalid_argument("zip_check requires a zero coupling");
  FloatElement L = FloatElement::basis(c.lhs.a.o, std::cos(x)) +
                   FloatElement::basis(c.lhs.a.S, c.lhs.sign * std::sin(x));
  FloatElement R = FloatElement::basis(c.rhs.a.o, std::cos(y)) +
                   FloatElement::basis(c.rhs.a.S, c.rhs.sign * std::sin(y));
  FloatElement P = mul(alg, L, R);
  const unsigned iE = c.lhs.a.o ^ c.rhs.a.o;
  const unsigned iG = c.lhs.a.o ^ c.rhs.a.S;
  double dev = 0;
  dev = std::max(dev, std::abs(std::abs(P.coeff(iE)) -
                               std::abs(std::cos(x + y))));
  dev = std::max(dev, std::abs(std::abs(P.coeff(iG)) -
                               std::abs(std::sin(x - y))));
  for (const auto& [i, coef] : P.terms())
    if (i != iE && i != iG) dev = std::max(dev, std::abs(coef));
  return dev;
}

std::string to_string(const Assessor& a) {
  std::ostringstream os;
  os << "(" << a.o << "," << a.S << ")";
  return os.str();
}

std::string to_string(const Diagonal& d) {
  std::ostringstream os;
  os << "(" << d.a.o << (d.sign > 0 ? "+" : "-") << d.a.S << ")";
  return os.str();
}

std::string to_string(const Coupling& c) {
  return to_string(c.lhs) + to_string(c.rhs);
}

}  // namespace zd
