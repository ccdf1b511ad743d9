#pragma once
// Sedenion zero-divisor structure: assessors (octonion/sedenion index
// pairs whose diagonals divide zero), co-assessor couplings, trios and
// their production rules, GoTo listings, and the numeric zip identity.
// All functions take the dim_exp = 4 algebra explicitly; they throw
// std::invalid_argument on any other dimension.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zd/cdalgebra.hpp"

namespace zd {

// An assessor is a plane spanned by e_o (o in 1..7) and e_S (S in
// 9..15, S != o + 8). Its two unit diagonals e_o + e_S ("up") and
// e_o - e_S ("down") are where all sedenion zero division lives.
struct Assessor {
  unsigned o = 0, S = 0;
  unsigned g() const { return o ^ S; }  // shared XOR invariant
  friend bool operator==(const Assessor&, const Assessor&) = default;
  friend auto operator<=>(const Assessor&, const Assessor&) = default;
};

struct Diagonal {
  Assessor a;
  int sign = 1;  // +1 = up (e_o + e_S), -1 = down (e_o - e_S)
  friend bool operator==(const Diagonal&, const Diagonal&) = default;
  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

Element diagonal_element(const Diagonal& d);

// Unordered pair of diagonals of distinct assessors whose exact product
// is zero. Canonical storage: lhs assessor < rhs assessor; signs are
// kept as-is, so a coupling and its global flip are distinct objects
// (the printed six-cycles count both, giving 168 in all). Listing
// emitters expose the printed left/right order separately.
struct Coupling {
  Diagonal lhs, rhs;
  friend bool operator==(const Coupling&, const Coupling&) = default;
  friend auto operator<=>(const Coupling&, const Coupling&) = default;
};

enum class TrioKind { zigzag, trefoil };

// Three mutually coupling assessors closed under Rule 1. Members are
// ordered by the cyclic order of their o-units in the canonical triple
// starting from its lowest unit; edge_signs[k] is the co-assessor edge
// sign between members[k] and members[(k+1)%3].
struct Trio {
  std::array<Assessor, 3> members{};
  Triple otrip{};
  std::array<int, 3> edge_signs{};
  TrioKind kind = TrioKind::zigzag;
  friend bool operator==(const Trio&, const Trio&) = default;
};

// An O-trip together with the four sedenions its 12 assessors draw on.
struct Automorpheme {
  Triple otrip{};
  std::array<unsigned, 4> sedenions{};  // ascending
};

std::vector<Assessor> enumerate_assessors(const CDAlgebra& alg);

bool is_assessor(const CDAlgebra& alg, unsigned o, unsigned S);

// True iff the exact product lhs*rhs is the zero element.
bool is_zero_coupling(const CDAlgebra& alg, const Diagonal& lhs,
                      const Diagonal& rhs);

// The four co-assessors of a (each shares a's XOR invariant g()).
std::vector<Assessor> coassessor_partners(const CDAlgebra& alg,
                                          const Assessor& a);

// +1 if up couples with up (and down with down), -1 if up couples with
// down. Throws if a and b are not co-assessors.
int edge_sign(const CDAlgebra& alg, const Assessor& a, const Assessor& b);

Coupling make_coupling(const CDAlgebra& alg, const Assessor& a,
                       const Assessor& b);

// All 168 signed couplings (84 edges x 2 compatible signings),
// canonically ordered.
std::vector<Coupling> enumerate_couplings(const CDAlgebra& alg);

// Production Rule 1: the unique assessor completing an edge to a trio.
Assessor rule1_third(const CDAlgebra& alg, const Assessor& a,
                     const Assessor& b);
Trio rule1_complete(const CDAlgebra& alg, const Assessor& a,
                    const Assessor& b);

// All 28 trios (one zigzag + three trefoils per O-trip).
std::vector<Trio> enumerate_trios(const CDAlgebra& alg);

// Production Rule 2: swap the two sedenion units between the coupling's
// parentheses. `twisted` is the resulting coupling (the swap admits
// exactly one zero-compatible relative signing); `failed` is the
// product of the rejected regrouping, always +-2 e_G where G is the
// coupling's shared XOR invariant.
struct TwistResult {
  Coupling twisted;
  Element failed;
  unsigned g = 0;
};
TwistResult rule2_twist(const CDAlgebra& alg, const Coupling& c);

// Production Rule 3: the two GoTo listings holding an assessor, each
// paired with the trio containing it there. Ascending listing id.
struct Relocation {
  unsigned goto_id = 0;  // 1..7
  Automorpheme home;
  Trio trio;
};
std::array<Relocation, 2> rule3_relocate(const CDAlgebra& alg,
                                         const Assessor& a);

Automorpheme automorpheme_of(const CDAlgebra& alg, const Triple& otrip);

// One column of a GoTo listing: a trio shown as its six-step coupling
// cycle (rows 4..6 are the global sign flips of rows 1..3). Rows keep
// the printed left/right order; row k couples trio members k%3 and
// (k+1)%3.
struct GoToColumn {
  unsigned g = 0;          // shared XOR invariant of the column's trio
  unsigned signature = 0;  // box-kite numeral the trio lives on (1..7)
  Trio trio;
  std::array<std::pair<Diagonal, Diagonal>, 6> rows;
};

struct GoToListing {
  unsigned id = 0;  // 1..7, ascending O-trip order
  Automorpheme home;
  std::array<GoToColumn, 4> columns;  // zigzag first
};

GoToListing goto_listing(const CDAlgebra& alg, const Triple& otrip);
std::vector<GoToListing> all_goto_listings(const CDAlgebra& alg);

// Diagnostics for the 8-ball exclusion: the pure sedenion e_8 joins no
// assessor, each O-trip excludes {8, 8^a, 8^b, 8^c}, and the excluded
// quaternion copies harbor no zero-dividing diagonals.
struct EightBallReport {
  bool e8_in_no_assessor = false;
  bool exclusion_sets_match = false;
  bool excluded_copies_clean = false;
  std::vector<std::array<unsigned, 4>> exclusion_sets;  // per O-trip
  bool ok() const {
    return e8_in_no_assessor && exclusion_sets_match && excluded_copies_clean;
  }
};
EightBallReport eight_ball_check(const CDAlgebra& alg);

// Numeric zip identity along a coupling: with L(x) = cos(x) e_o +
// sin(x) (sg) e_S on each side, the product lives on two indices with
// magnitudes |cos(x+y)| and |sin(x-y)|. Returns the largest deviation.
double zip_check(const CDAlgebra& alg, const Coupling& c, double x, double y);

std::string to_string(const Assessor& a);
std::string to_string(const Diagonal& d);
std::string to_string(const Coupling& c);

}  // namespace zd
