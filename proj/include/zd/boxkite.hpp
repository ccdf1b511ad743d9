#pragma once
// Box-kites: the seven octahedral frames the 42 assessors assemble
// into. Covers strut signatures and strut products, the sail/vent face
// census, the Osiris partition, the lanyard (diagonal-cycle) census,
// the strut-plane six-cycle with its recombinant twisting, composite
// (Seinfeld) zero-divisor counts, and the donut duals of the GoTo
// listings. Everything takes the dim_exp = 4 algebra explicitly.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zd/cdalgebra.hpp"
#include "zd/zerodiv.hpp"

namespace zd {

// Letters A..F are vertex slots 0..5; strut opposites are (A,F), (B,E),
// (C,D), i.e. letter k faces letter 5-k. The zigzag sail is {A,B,C}.
inline constexpr int strut_opposite(int letter) { return 5 - letter; }

// A triangular face of the kite. Sails are Rule-1-closed trios living
// in one GoTo listing each; vents need the full 16-D to operate and are
// not Rule-1 closed. Members are in letter order; edge_signs[k] joins
// members[k] and members[(k+1)%3].
struct KiteFace {
  std::array<int, 3> letters{};
  std::array<Assessor, 3> members{};
  std::array<int, 3> edge_signs{};
  TrioKind kind = TrioKind::trefoil;
  bool sail = false;
};

struct BoxKite {
  unsigned signature = 0;               // 1..7, the Roman numeral
  std::array<Assessor, 6> vertices{};   // A..F
  std::array<KiteFace, 4> sails{};      // ABC (zigzag), ADE, BDF, CEF
  std::array<KiteFace, 4> vents{};      // ABD, ACE, BCF, DEF
  std::array<unsigned, 4> goto_ids{};   // listing ids of the sails
};

std::string roman_numeral(unsigned signature);                  // 1..7
std::optional<unsigned> roman_value(const std::string& text);   // I..VII

// The seven kites in signature order; their vertex sets partition the
// 42 assessors.
std::array<BoxKite, 7> assemble_box_kites(const CDAlgebra& alg);

// Signature of the kite holding `a` (its XOR invariant minus 8).
unsigned kite_signature_of(const CDAlgebra& alg, const Assessor& a);

// Recomputes the signature from the three strut products; throws
// std::logic_error if they disagree (they never do).
unsigned strut_signature(const CDAlgebra& alg, const BoxKite& kite);

// Product of two strut-opposite diagonals: a single term, +-2 e_sig
// when the internal signs agree and +-2 e_8 when they differ. Throws
// std::invalid_argument unless p and q are strut opposites.
Element strut_product(const CDAlgebra& alg, const Assessor& p,
                      const Assessor& q, int sg_p, int sg_q);

// (o + S)(o - S): a single term on index 8 + signature.
Element slash_product(const CDAlgebra& alg, const Assessor& a);

// True iff every product of two diagonals drawn from one strut plane
// is supported on {0, signature, 8, 8 + signature}: each strut plane
// spans a quaternion copy.
bool quaternion_copy_closed(const CDAlgebra& alg, const BoxKite& kite);

// Sign-carrying twist: the lhs sedenion moves to the rhs octonion
// unchanged, the rhs sedenion moves to the lhs octonion with its sign
// flipped. It flips the edge sign, so plus-signed couplings land on
// minus-signed edges and vice versa; applying it twice yields the
// global flip, four times the identity. `rhs_top` runs the exchange in
// the mirrored sense, which is exactly the inverse twist.
Coupling signed_twist(const CDAlgebra& alg, const Coupling& c,
                      bool rhs_top = false);

// ---- Osiris partition ----------------------------------------------

struct OsirisCell {
  Assessor assessor;
  std::array<unsigned, 2> goto_ids{};  // ascending
  // partners[k] = the other two members of the trio holding `assessor`
  // in listing goto_ids[k], in trio member order.
  std::array<std::array<Assessor, 2>, 2> partners{};
  unsigned kite = 0;  // signature of the one box-kite the cell maps to
};

struct OsirisPartition {
  // cell(o, S) for o in 1..7, S in 9..15; empty on the S = o + 8
  // diagonal.
  std::array<std::array<std::optional<OsirisCell>, 7>, 7> cells{};
  const std::optional<OsirisCell>& cell(unsigned o, unsigned S) const {
    return cells[o - 1][S - 9];
  }
};

OsirisPartition osiris_partition(const CDAlgebra& alg);

// Roman-numeral view: stripped[o-1][S-9] = kite signature, 0 on the
// diagonal. Mirror-symmetric, and numeral i never shows in row i.
std::array<std::array<unsigned, 7>, 7> stripped_osiris(
    const OsirisPartition& partition);

// ---- Lanyards -------------------------------------------------------

// A closed chain of diagonals with consecutive exact zero products.
// Complete means both diagonals of every visited assessor are threaded.
struct Lanyard {
  std::vector<Diagonal> beads;
  bool complete = false;
};

// All simple closed lanyards of length 3..max_len over the kite's 12
// diagonals, counted once per rotation/reflection class.
std::vector<Lanyard> enumerate_lanyards(const CDAlgebra& alg,
                                        const BoxKite& kite, int max_len);

struct LanyardCensus {
  int max_len = 0;
  std::map<int, int> cycles_by_length;
  std::map<int, int> complete_by_length;
  int tray_rack_4 = 0;    // support = two full struts
  int butterfly_4 = 0;    // support = one strut + a square edge
  int sail_6 = 0;         // complete double covers of sail faces
  int vent_6 = 0;         // same for vents
  int hexagon_6 = 0;      // one diagonal of each of the six assessors
  int cats_cradle_6 = 0;  // hexagons along plus-signed paths only
  int waltz_6 = 0;        // hexagons with the oom-pah-pah sign word
  int complete_10 = 0;    // pyramid lanyards
  int complete_12 = 0;    // whole-kite lanyards
  bool twelve_cycle_sign_word = false;  // -+-+-+-++-+- pattern occurs
  // Two claspless strands: an 11-bead open path threading all but one
  // bead of the six assessors, and the 12-bead zigzag-sail-to-zigzag-
  // vent walk whose crossing step is plus-signed.
  bool missing_link_strand = false;
  bool double_zigzag_strand = false;
  friend bool operator==(const LanyardCensus&, const LanyardCensus&) =
      default;
};

LanyardCensus lanyard_census(const CDAlgebra& alg, const BoxKite& kite,
                             int max_len);

// ---- Strut-plane six-cycle and recombinant twisting -----------------

// One oriented strut plane: dyads[0] is the protocol lead (first o in
// the kite-signature cyclic order), dyads[1] its strut opposite with
// the opposite internal sign.
struct StrutTerm {
  std::array<Diagonal, 2> dyads{};
};

// The six-term cycle in strut-signature cycle-ordering; terms 4..6 are
// the global flips of 1..3, and every dyad of a term zero-divides both
// dyads of its successor.
std::array<StrutTerm, 6> strut_plane_cycle(const CDAlgebra& alg,
                                           const BoxKite& kite);

// One derived strut pair: two 2-dyad composites that are strut
// opposites on the kite with the given target signature.
struct DnaTwist {
  std::array<std::array<Diagonal, 2>, 2> struts{};
  unsigned target = 0;
};

struct DnaResult {
  int position = 0;   // 1..6 into the strut-plane cycle
  DnaTwist column;    // symmetric flip, crosswise regroup
  DnaTwist diagonal;  // asymmetric flip, vertical regroup
};

// Twists the consecutive cycle terms at `position` (1..6; 6 wraps to
// 1). Column targets XOR diagonally opposite o's, diagonal targets XOR
// same-column o's; three consecutive positions reach all six other
// kites. Throws std::invalid_argument for positions outside 1..6.
DnaResult recombinant_dna(const CDAlgebra& alg, const BoxKite& kite,
                          int position);

// ---- Seinfeld hyperplanes --------------------------------------------

inline constexpr unsigned kDefaultSeed = 42;

// Case counts for the nine composite zero-divisor configurations, plus
// the number of distinct 4-D hyperplanes (struts x orientations = 6).
// Every configuration is verified exactly on a spanning set and with
// `samples` random nonzero integer scalar assignments in [-9, 9];
// throws std::logic_error if any product fails to vanish.
struct SeinfeldCensus {
  std::array<int, 9> case_counts{};
  int hyperplanes = 0;
  friend bool operator==(const SeinfeldCensus&, const SeinfeldCensus&) =
      default;
};

SeinfeldCensus seinfeld_census(const CDAlgebra& alg, const BoxKite& kite,
                               int samples, unsigned seed = kDefaultSeed);

// ---- Donuts ----------------------------------------------------------

// One wallpaper pasting: `from` (a plus-signed coupling) is glued to
// `to`, its signed-twist image inside the same listing, which lands on
// a minus edge. Read from the minus side the glue is the mirrored
// (inverse) twist. Half-diagonal pastings involve a center-group
// member; square-edge pastings do not.
struct DonutPasting {
  Coupling from, to;
  unsigned from_kite = 0, to_kite = 0;
  bool half_diagonal = false;
};

// Torus layout of one GoTo listing: the otrip's first o in the middle,
// second o paired North/South, third o paired West/East. The four
// triangles are the listing's columns, each a trio on a different kite
// (the cartouches).
struct DonutMap {
  unsigned listing_id = 0;
  Triple otrip{};
  std::array<Assessor, 4> center{};
  std::array<Assessor, 2> north{}, south{}, west{}, east{};
  std::array<unsigned, 4> cartouches{};
  std::vector<DonutPasting> pastings;  // 12, covering all 24 couplings
};

// Throws std::invalid_argument unless `otrip` is an octonion triple.
DonutMap donut_map(const CDAlgebra& alg, const Triple& otrip);

std::array<DonutMap, 7> all_donut_maps(const CDAlgebra& alg);

}  // namespace zd
