#include "zd/boxkite.hpp"

#include <algorithm>
#include <bitset>
#include <cstdlib>
#include <random>
#include <set>
#include <stdexcept>

namespace zd {
namespace {

void require_sedenions(const CDAlgebra& alg) {
  if (alg.dim_exp() != 4)
    throw std::invalid_argument("box-kite machinery needs dim_exp = 4");
}

const CDAlgebra& oct() {
  static const CDAlgebra a = build_algebra(3);
  return a;
}

const std::vector<Triple>& octonion_trips() {
  static const std::vector<Triple> t = [] { return triples(oct()); }();
  return t;
}

bool contains_unit(const Triple& t, unsigned u) {
  return t.a == u || t.b == u || t.c == u;
}

unsigned listing_id_of(const Triple& t) {
  const auto& all = octonion_trips();
  for (std::size_t k = 0; k < all.size(); ++k)
    if (all[k] == t) return static_cast<unsigned>(k) + 1;
  throw std::invalid_argument("not an octonion triple");
}

Assessor strut_partner_of(const Assessor& a) {
  const unsigned s = a.g() - 8;
  return {a.o ^ s, a.S ^ s};
}

KiteFace make_face(const CDAlgebra& alg, const std::array<Assessor, 6>& v,
                   std::array<int, 3> letters, bool sail) {
  KiteFace f;
  f.letters = letters;
  for (int i = 0; i < 3; ++i) f.members[i] = v[letters[i]];
  int minus = 0;
  for (int i = 0; i < 3; ++i) {
    f.edge_signs[i] = edge_sign(alg, f.members[i], f.members[(i + 1) % 3]);
    if (f.edge_signs[i] < 0) ++minus;
  }
  if (minus != 1 && minus != 3)
    throw std::logic_error("face edge-sign census broke");
  f.kind = minus == 3 ? TrioKind::zigzag : TrioKind::trefoil;
  f.sail = sail;
  return f;
}

BoxKite assemble_one(const CDAlgebra& alg, unsigned s) {
  BoxKite k;
  k.signature = s;
  const unsigned G = 8 + s;

  // The zigzag sail is the unique all-minus trio among the four O-trips
  // avoiding s; its members (canonically cyclic from the lowest o) are
  // A, B, C and their strut partners give F, E, D.
  std::optional<Trio> zig;
  for (const Triple& t : octonion_trips()) {
    if (contains_unit(t, s)) continue;
    Trio trio = rule1_complete(alg, {t.a, t.a ^ G}, {t.b, t.b ^ G});
    if (trio.kind != TrioKind::zigzag) continue;
    if (zig) throw std::logic_error("two zigzags on one box-kite");
    zig = trio;
  }
  if (!zig) throw std::logic_error("box-kite without a zigzag sail");

  for (int i = 0; i < 3; ++i) {
    k.vertices[i] = zig->members[i];
    k.vertices[5 - i] = strut_partner_of(zig->members[i]);
  }

  static constexpr std::array<std::array<int, 3>, 4> kSails = {
      {{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}}};
  static constexpr std::array<std::array<int, 3>, 4> kVents = {
      {{0, 1, 3}, {0, 2, 4}, {1, 2, 5}, {3, 4, 5}}};
  for (int i = 0; i < 4; ++i) {
    k.sails[i] = make_face(alg, k.vertices, kSails[i], true);
    k.vents[i] = make_face(alg, k.vertices, kVents[i], false);
    k.goto_ids[i] = listing_id_of(triple_through(
        oct(), k.sails[i].members[0].o, k.sails[i].members[1].o));
  }
  return k;
}

Element line_element(const Assessor& a, int sg) {
  return diagonal_element({a, sg});
}

}  // namespace

std::string roman_numeral(unsigned signature) {
  static const std::array<const char*, 7> r = {"I",  "II", "III", "IV",
                                               "V",  "VI", "VII"};
  if (signature < 1 || signature > 7)
    throw std::invalid_argument("signature out of 1..7");
  return r[signature - 1];
}

std::optional<unsigned> roman_value(const std::string& text) {
  static const std::array<const char*, 7> r = {"I",  "II", "III", "IV",
                                               "V",  "VI", "VII"};
  for (unsigned k = 0; k < 7; ++k)
    if (text == r[k]) return k + 1;
  return std::nullopt;
}

std::array<BoxKite, 7> assemble_box_kites(const CDAlgebra& alg) {
  require_sedenions(alg);
  std::array<BoxKite, 7> out;
  for (unsigned s = 1; s <= 7; ++s) out[s - 1] = assemble_one(alg, s);
  return out;
}

unsigned kite_signature_of(const CDAlgebra& alg, const Assessor& a) {
  require_sedenions(alg);
  if (!is_assessor(alg, a.o, a.S))
    throw std::invalid_argument("not an assessor");
  return a.g() - 8;
}

Element strut_product(const CDAlgebra& alg, const Assessor& p,
                      const Assessor& q, int sg_p, int sg_q) {
  require_sedenions(alg);
  if (!is_assessor(alg, p.o, p.S) || !is_assessor(alg, q.o, q.S) ||
      p.g() != q.g() || !(strut_partner_of(p) == q))
    throw std::invalid_argument("strut product needs strut opposites");
  Element r = mul(alg, line_element(p, sg_p), line_element(q, sg_q));
  if (r.size() != 1 || std::abs(r.terms()[0].second) != 2)
    throw std::logic_error("strut product lost its single-term shape");
  return r;
}

Element slash_product(const CDAlgebra& alg, const Assessor& a) {
  require_sedenions(alg);
  if (!is_assessor(alg, a.o, a.S))
    throw std::invalid_argument("not an assessor");
  return mul(alg, line_element(a, +1), line_element(a, -1));
}

unsigned strut_signature(const CDAlgebra& alg, const BoxKite& kite) {
  unsigned sig = 0;
  for (int t = 0; t < 3; ++t) {
    const Assessor &p = kite.vertices[t], &q = kite.vertices[5 - t];
    const unsigned same = strut_product(alg, p, q, +1, +1).terms()[0].first;
    const unsigned flip = strut_product(alg, p, q, -1, -1).terms()[0].first;
    const unsigned mixed = strut_product(alg, p, q, +1, -1).terms()[0].first;
    if (same != flip || mixed != 8 ||
        (sig != 0 && sig != same))
      throw std::logic_error("strut products disagree on the signature");
    sig = same;
  }
  if (sig != kite.signature)
    throw std::logic_error("strut products disagree on the signature");
  return sig;
}

bool quaternion_copy_closed(const CDAlgebra& alg, const BoxKite& kite) {
  const std::array<unsigned, 4> allowed = {0u, kite.signature, 8u,
                                           8u + kite.signature};
  for (int axis = 0; axis < 3; ++axis) {
    const std::array<Assessor, 2> plane = {kite.vertices[axis],
                                           kite.vertices[5 - axis]};
    for (const Assessor& p : plane)
      for (int sp : {+1, -1})
        for (const Assessor& q : plane)
          for (int sq : {+1, -1}) {
            const Element r =
                mul(alg, line_element(p, sp), line_element(q, sq));
            for (const auto& [idx, c] : r.terms())
              if (std::find(allowed.begin(), allowed.end(), idx) ==
                  allowed.end())
                return false;
          }
  }
  return true;
}

Coupling signed_twist(const CDAlgebra& alg, const Coupling& c,
                      bool rhs_top) {
  require_sedenions(alg);
  if (!is_zero_coupling(alg, c.lhs, c.rhs))
    throw std::invalid_argument("signed twist needs a zero coupling");
  const unsigned o1 = c.lhs.a.o, o2 = c.rhs.a.o;
  const unsigned S1 = c.lhs.a.S, S2 = c.rhs.a.S;
  Coupling out;
  if (!rhs_top) {
    out = {{{o1, S2}, -c.rhs.sign}, {{o2, S1}, +c.lhs.sign}};
  } else {
    out = {{{o1, S2}, +c.rhs.sign}, {{o2, S1}, -c.lhs.sign}};
  }
  if (out.rhs.a < out.lhs.a) std::swap(out.lhs, out.rhs);
  if (!is_zero_coupling(alg, out.lhs, out.rhs))
    throw std::logic_error("signed twist left the zero-divisor lattice");
  return out;
}

// ---- Osiris partition ------------------------------------------------

OsirisPartition osiris_partition(const CDAlgebra& alg) {
  require_sedenions(alg);
  OsirisPartition p;
  for (const Assessor& a : enumerate_assessors(alg)) {
    OsirisCell cell;
    cell.assessor = a;
    const auto rel = rule3_relocate(alg, a);
    for (int k : {0, 1}) {
      cell.goto_ids[k] = rel[k].goto_id;
      int out = 0;
      for (const Assessor& m : rel[k].trio.members)
        if (!(m == a)) cell.partners[k][out++] = m;
    }
    cell.kite = a.g() - 8;
    p.cells[a.o - 1][a.S - 9] = cell;
  }
  return p;
}

std::array<std::array<unsigned, 7>, 7> stripped_osiris(
    const OsirisPartition& partition) {
  std::array<std::array<unsigned, 7>, 7> out{};
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 7; ++c)
      if (partition.cells[r][c]) out[r][c] = partition.cells[r][c]->kite;
  return out;
}

// ---- Lanyards --------------------------------------------------------

namespace {

// The 12 diagonals indexed letter*2 + (down ? 1 : 0); two diagonals are
// adjacent iff their exact product vanishes (strut opposites never do).
struct DiagonalGraph {
  std::array<Diagonal, 12> nodes{};
  std::array<std::bitset<12>, 12> adj{};
};

DiagonalGraph diagonal_graph(const CDAlgebra& alg, const BoxKite& kite) {
  DiagonalGraph g;
  for (int t = 0; t < 6; ++t) {
    g.nodes[2 * t] = {kite.vertices[t], +1};
    g.nodes[2 * t + 1] = {kite.vertices[t], -1};
  }
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j)
      if (i / 2 != j / 2 && is_zero_coupling(alg, g.nodes[i], g.nodes[j]))
        g.adj[i][j] = true;
  return g;
}

bool lanyard_complete(const std::vector<int>& path) {
  std::bitset<12> seen;
  for (int n : path) seen[n] = true;
  for (int n : path)
    if (!seen[n ^ 1]) return false;
  return true;
}

}  // namespace

std::vector<Lanyard> enumerate_lanyards(const CDAlgebra& alg,
                                        const BoxKite& kite, int max_len) {
  if (max_len < 3) throw std::invalid_argument("max_len must be >= 3");
  const DiagonalGraph g = diagonal_graph(alg, kite);
  std::vector<Lanyard> out;
  std::vector<int> path;
  std::bitset<12> on_path;

  // Rooted at the cycle's least node, closing edge recorded once per
  // direction class (second node below last), so each rotation and
  // reflection class lands exactly once.
  auto dfs = [&](auto&& self, int root, int cur) -> void {
    if (static_cast<int>(path.size()) >= 3 && g.adj[cur][root] &&
        path[1] < path.back()) {
      Lanyard l;
      for (int n : path) l.beads.push_back(g.nodes[n]);
      l.complete = lanyard_complete(path);
      out.push_back(std::move(l));
    }
    if (static_cast<int>(path.size()) == max_len) return;
    for (int next = root + 1; next < 12; ++next) {
      if (!g.adj[cur][next] || on_path[next]) continue;
      path.push_back(next);
      on_path[next] = true;
      self(self, root, next);
      on_path[next] = false;
      path.pop_back();
    }
  };

  for (int root = 0; root < 12; ++root) {
    path.assign(1, root);
    on_path.reset();
    on_path[root] = true;
    dfs(dfs, root, root);
  }
  return out;
}

namespace {

// Does the cyclic step-sign word match the pattern up to rotation and
// reflection?
bool cyclic_word_match(const std::vector<int>& word,
                       const std::vector<int>& pattern) {
  const std::size_t n = word.size();
  if (pattern.size() != n) return false;
  for (int dir : {+1, -1}) {
    std::vector<int> w = word;
    if (dir < 0) std::reverse(w.begin(), w.end());
    for (std::size_t r = 0; r < n; ++r) {
      bool ok = true;
      for (std::size_t k = 0; k < n && ok; ++k)
        ok = w[(k + r) % n] == pattern[k];
      if (ok) return true;
    }
  }
  return false;
}

bool missing_link_search(const DiagonalGraph& g) {
  // Open 11-bead simple path threading both diagonals of five assessors
  // and exactly one diagonal of the sixth.
  std::vector<int> path;
  std::bitset<12> used;
  auto dfs = [&](auto&& self, int cur) -> bool {
    if (path.size() == 11) {
      std::array<int, 6> mult{};
      for (int n : path) ++mult[n / 2];
      int singles = 0;
      for (int m : mult)
        if (m == 1) ++singles;
      return singles == 1;
    }
    for (int next = 0; next < 12; ++next) {
      if (used[next] || !g.adj[cur][next]) continue;
      path.push_back(next);
      used[next] = true;
      if (self(self, next)) return true;
      used[next] = false;
      path.pop_back();
    }
    return false;
  };
  for (int first = 0; first < 12; ++first) {
    path.assign(1, first);
    used.reset();
    used[first] = true;
    if (dfs(dfs, first)) return true;
  }
  return false;
}

bool double_zigzag_search(const DiagonalGraph& g) {
  // Open 12-bead strand: first six beads use exactly the zigzag sail's
  // letters {A,B,C}, the crossing step is plus-signed, the last six use
  // the zigzag vent's letters {D,E,F}.
  auto side_paths = [&](std::bitset<12> pool, int start) {
    // All orderings of the whole pool starting at `start` (or anywhere
    // when start < 0) that walk adjacent diagonals.
    std::vector<std::vector<int>> found;
    std::vector<int> path;
    std::bitset<12> used;
    auto dfs = [&](auto&& self, int cur) -> void {
      if (path.size() == pool.count()) {
        found.push_back(path);
        return;
      }
      for (int next = 0; next < 12; ++next) {
        if (!pool[next] || used[next] || !g.adj[cur][next]) continue;
        path.push_back(next);
        used[next] = true;
        self(self, next);
        used[next] = false;
        path.pop_back();
      }
    };
    for (int first = 0; first < 12; ++first) {
      if (!pool[first] || (start >= 0 && first != start)) continue;
      path.assign(1, first);
      used.reset();
      used[first] = true;
      dfs(dfs, first);
    }
    return found;
  };

  std::bitset<12> sail_pool, vent_pool;
  for (int n = 0; n < 12; ++n) (n / 2 < 3 ? sail_pool : vent_pool)[n] = true;
  for (const auto& first : side_paths(sail_pool, -1)) {
    const int exit = first.back();
    for (int entry = 6; entry < 12; ++entry) {
      if (!g.adj[exit][entry]) continue;
      if (g.nodes[exit].sign != g.nodes[entry].sign) continue;  // plus step
      if (!side_paths(vent_pool, entry).empty()) return true;
    }
  }
  return false;
}

}  // namespace

LanyardCensus lanyard_census(const CDAlgebra& alg, const BoxKite& kite,
                             int max_len) {
  LanyardCensus census;
  census.max_len = max_len;
  const DiagonalGraph g = diagonal_graph(alg, kite);

  auto letter_of = [&](const Diagonal& d) {
    for (int t = 0; t < 6; ++t)
      if (kite.vertices[t] == d.a) return t;
    throw std::logic_error("bead off the kite");
  };

  const std::vector<int> waltz = {+1, -1, -1, +1, -1, -1};
  const std::vector<int> twelve = {-1, +1, -1, +1, -1, +1,
                                   -1, +1, +1, -1, +1, -1};

  for (const Lanyard& l : enumerate_lanyards(alg, kite, max_len)) {
    const int n = static_cast<int>(l.beads.size());
    ++census.cycles_by_length[n];
    if (l.complete) ++census.complete_by_length[n];

    std::array<int, 6> mult{};
    for (const Diagonal& d : l.beads) ++mult[letter_of(d)];
    int letters = 0;
    for (int m : mult)
      if (m > 0) ++letters;

    std::vector<int> word(n);
    for (int k = 0; k < n; ++k)
      word[k] = l.beads[k].sign * l.beads[(k + 1) % n].sign;

    if (n == 4 && letters == 4) {
      int struts = 0;
      for (int t = 0; t < 3; ++t)
        if (mult[t] == 1 && mult[5 - t] == 1) ++struts;
      if (struts == 2) ++census.tray_rack_4;
      if (struts == 1) ++census.butterfly_4;
    } else if (n == 6 && letters == 3 && l.complete) {
      std::array<bool, 6> has{};
      for (int t = 0; t < 6; ++t) has[t] = mult[t] > 0;
      auto face_is = [&](const std::array<KiteFace, 4>& faces) {
        for (const KiteFace& f : faces) {
          std::array<bool, 6> want{};
          for (int letter : f.letters) want[letter] = true;
          if (want == has) return true;
        }
        return false;
      };
      if (face_is(kite.sails)) ++census.sail_6;
      if (face_is(kite.vents)) ++census.vent_6;
    } else if (n == 6 && letters == 6) {
      ++census.hexagon_6;
      if (std::all_of(word.begin(), word.end(),
                      [](int w) { return w > 0; }))
        ++census.cats_cradle_6;
      if (cyclic_word_match(word, waltz)) ++census.waltz_6;
    }
    if (n == 10 && l.complete) ++census.complete_10;
    if (n == 12 && l.complete) {
      ++census.complete_12;
      if (cyclic_word_match(word, twelve))
        census.twelve_cycle_sign_word = true;
    }
  }
  if (max_len >= 11) census.missing_link_strand = missing_link_search(g);
  if (max_len >= 12) census.double_zigzag_strand = double_zigzag_search(g);
  return census;
}

// ---- Strut-plane six-cycle and recombinant twisting ------------------

std::array<StrutTerm, 6> strut_plane_cycle(const CDAlgebra& alg,
                                           const BoxKite& kite) {
  require_sedenions(alg);
  const unsigned s = kite.signature, G = 8 + s;

  // Each O-trip through s, rotated to lead with s, orders one strut:
  // (s, x, y) puts x's assessor in front.
  struct Lead {
    unsigned lead_o = 0, second_o = 0;
  };
  std::vector<Lead> leads;
  for (const Triple& t : octonion_trips()) {
    if (!contains_unit(t, s)) continue;
    if (t.a == s)
      leads.push_back({t.b, t.c});
    else if (t.b == s)
      leads.push_back({t.c, t.a});
    else
      leads.push_back({t.a, t.b});
  }
  std::sort(leads.begin(), leads.end(),
            [](const Lead& a, const Lead& b) { return a.lead_o < b.lead_o; });

  std::array<StrutTerm, 6> cycle{};
  int sign = +1;
  for (int k = 0; k < 3; ++k) {
    const Assessor lead{leads[k].lead_o, leads[k].lead_o ^ G};
    const Assessor second{leads[k].second_o, leads[k].second_o ^ G};
    if (k > 0) sign *= edge_sign(alg, cycle[k - 1].dyads[0].a, lead);
    cycle[k].dyads[0] = {lead, sign};
    cycle[k].dyads[1] = {second, -sign};
  }
  for (int k = 0; k < 3; ++k) {
    cycle[k + 3].dyads[0] = {cycle[k].dyads[0].a, -cycle[k].dyads[0].sign};
    cycle[k + 3].dyads[1] = {cycle[k].dyads[1].a, -cycle[k].dyads[1].sign};
  }

  for (int k = 0; k < 6; ++k)
    for (const Diagonal& p : cycle[k].dyads)
      for (const Diagonal& q : cycle[(k + 1) % 6].dyads)
        if (!mul(alg, diagonal_element(p), diagonal_element(q)).is_zero())
          throw std::logic_error("strut-plane cycle lost a cross kill");
  return cycle;
}

DnaResult recombinant_dna(const CDAlgebra& alg, const BoxKite& kite,
                          int position) {
  if (position < 1 || position > 6)
    throw std::invalid_argument("position must be in 1..6");
  const auto cycle = strut_plane_cycle(alg, kite);
  const StrutTerm& top = cycle[position - 1];
  const StrutTerm& bot = cycle[position % 6];
  const Diagonal TL = top.dyads[0], TR = top.dyads[1];
  const Diagonal BL = bot.dyads[0], BR = bot.dyads[1];

  DnaResult r;
  r.position = position;

  // Column twist: each sedenion drops to the other row of its own
  // column, flipped on the way up; the products regroup crosswise.
  r.column.struts = {{{Diagonal{{TL.a.o, BL.a.S}, -BL.sign},
                       Diagonal{{BR.a.o, TR.a.S}, +TR.sign}},
                      {Diagonal{{BL.a.o, TL.a.S}, +TL.sign},
                       Diagonal{{TR.a.o, BR.a.S}, -BR.sign}}}};
  r.column.target = TL.a.o ^ BR.a.o;

  // Diagonal twist: sedenions cross both diagonals, flipping only when
  // they land in the left column; the products regroup vertically.
  r.diagonal.struts = {{{Diagonal{{TL.a.o, BR.a.S}, -BR.sign},
                         Diagonal{{BL.a.o, TR.a.S}, -TR.sign}},
                        {Diagonal{{TR.a.o, BL.a.S}, +BL.sign},
                         Diagonal{{BR.a.o, TL.a.S}, +TL.sign}}}};
  r.diagonal.target = TL.a.o ^ BL.a.o;

  for (const DnaTwist* tw : {&r.column, &r.diagonal}) {
    if (tw->target < 1 || tw->target > 7 || tw->target == kite.signature)
      throw std::logic_error("recombinant target escaped the seven kites");
    for (const auto& strut : tw->struts) {
      const Assessor &p = strut[0].a, &q = strut[1].a;
      if (!is_assessor(alg, p.o, p.S) || !is_assessor(alg, q.o, q.S) ||
          p.g() != 8 + tw->target || !(strut_partner_of(p) == q) ||
          strut[0].sign * strut[1].sign != -1)
        throw std::logic_error("recombinant output is not a strut pair");
    }
    if (tw->struts[0][0].a.o == tw->struts[1][0].a.o ||
        tw->struts[0][0].a.o == tw->struts[1][1].a.o)
      throw std::logic_error("recombinant outputs collapsed onto one strut");
  }
  return r;
}

// ---- Seinfeld hyperplanes ---------------------------------------------

namespace {

struct StrutFrame {
  int X, Xp;                   // strut letters (up, down)
  std::array<int, 4> square;   // remaining letters in square-cycle order
};

constexpr std::array<StrutFrame, 3> kFrames = {{{0, 5, {1, 2, 4, 3}},
                                                {1, 4, {0, 2, 5, 3}},
                                                {2, 3, {0, 1, 5, 4}}}};

}  // namespace

SeinfeldCensus seinfeld_census(const CDAlgebra& alg, const BoxKite& kite,
                               int samples, unsigned seed) {
  require_sedenions(alg);
  if (samples < 0) throw std::invalid_argument("samples must be >= 0");
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-9, 9);
  auto scalar = [&]() -> long long {
    int v = 0;
    while (v == 0) v = dist(rng);
    return v;
  };

  auto dyad = [&](int letter, int sg) {
    return diagonal_element({kite.vertices[letter], sg});
  };
  auto es = [&](int i, int j) {
    return edge_sign(alg, kite.vertices[i], kite.vertices[j]);
  };
  auto expect_zero = [&](const Element& x, const Element& y) {
    if (!mul(alg, x, y).is_zero())
      throw std::logic_error("composite zero product failed to vanish");
  };
  // Exact check on a spanning set of dyad pairs, then `samples` random
  // nonzero integer scalar mixes of the same span.
  auto verify = [&](const std::vector<Element>& left,
                    const std::vector<Element>& right) {
    for (const Element& x : left)
      for (const Element& y : right) expect_zero(x, y);
    for (int n = 0; n < samples; ++n) {
      Element x, y;
      for (const Element& e : left) x += scalar() * e;
      for (const Element& e : right) y += scalar() * e;
      expect_zero(x, y);
    }
  };

  SeinfeldCensus census;
  auto& C = census.case_counts;

  // Oriented strut plane (frame t, orientation w) and the four lines it
  // kills: (Y, w * es(X, Y)) for each square letter Y.
  auto killed_sign = [&](int t, int w, int square_slot) {
    return w * es(kFrames[t].X, kFrames[t].square[square_slot]);
  };
  auto plane = [&](int t, int w) {
    return std::vector<Element>{dyad(kFrames[t].X, w),
                                dyad(kFrames[t].Xp, -w)};
  };
  auto killed_line = [&](int t, int w, int slot) {
    return dyad(kFrames[t].square[slot], killed_sign(t, w, slot));
  };

  for (int t = 0; t < 3; ++t) {
    for (int w : {+1, -1}) {
      // Case 1: each plane member pair kills four single lines.
      for (int slot = 0; slot < 4; ++slot) {
        verify(plane(t, w), {killed_line(t, w, slot)});
        ++C[0];
      }

      // Case 3: the four killed lines split by sign into two adjacent
      // pairs; the plane kills both 2-D spans.
      std::array<std::vector<int>, 2> by_sign;  // [0] plus, [1] minus
      for (int slot = 0; slot < 4; ++slot)
        by_sign[killed_sign(t, w, slot) > 0 ? 0 : 1].push_back(slot);
      for (const auto& group : by_sign) {
        if (group.size() != 2)
          throw std::logic_error("killed lines did not split two and two");
        const int a = kFrames[t].square[group[0]],
                  b = kFrames[t].square[group[1]];
        if (a + b == 5)
          throw std::logic_error("same-sign killed pair fell on a strut");
        verify(plane(t, w),
               {killed_line(t, w, group[0]), killed_line(t, w, group[1])});
        ++C[2];
      }

      // Cases 6-9: tangled triads and the full 4-space, killed by each
      // single member line and by the whole plane.
      for (int skip = 0; skip < 4; ++skip) {
        std::vector<Element> triad;
        for (int slot = 0; slot < 4; ++slot)
          if (slot != skip) triad.push_back(killed_line(t, w, slot));
        verify({dyad(kFrames[t].X, w)}, triad);
        ++C[5];
        verify({dyad(kFrames[t].Xp, -w)}, triad);
        ++C[5];
        verify(plane(t, w), triad);
        ++C[6];
      }
      std::vector<Element> space;
      for (int slot = 0; slot < 4; ++slot)
        space.push_back(killed_line(t, w, slot));
      verify({dyad(kFrames[t].X, w)}, space);
      ++C[7];
      verify({dyad(kFrames[t].Xp, -w)}, space);
      ++C[7];
      verify(plane(t, w), space);
      ++C[8];
    }

    // Case 2: mismatch-signed square edges kill the strut's two ends at
    // opposite signs. Each square carries two plus and two minus edges.
    int plus_edges = 0;
    for (int k = 0; k < 4; ++k) {
      const int U = kFrames[t].square[k], V = kFrames[t].square[(k + 1) % 4];
      const int eps = es(U, V);
      if (eps > 0) ++plus_edges;
      for (int orient = 0; orient < 2; ++orient) {
        const int sU = orient == 0 ? +1 : -1;
        const int sV = -sU * eps;
        const int sigma = sU * es(U, kFrames[t].X);
        verify({dyad(U, sU), dyad(V, sV)}, {dyad(kFrames[t].X, sigma)});
        ++C[1];
        verify({dyad(U, sU), dyad(V, sV)}, {dyad(kFrames[t].Xp, -sigma)});
        ++C[1];
      }
    }
    if (plus_edges != 2)
      throw std::logic_error("tray-rack square lost its two-plus balance");
  }

  // Case 4: strut planes kill each other pairwise at forced
  // orientations; case 5: that adjacency is one six-cycle, the same one
  // the strut-plane cycle walks.
  std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> kills;
  for (int t = 0; t < 3; ++t)
    for (int u = t + 1; u < 3; ++u)
      for (int w : {+1, -1}) {
        const int wu = w * es(kFrames[t].X, kFrames[u].X);
        verify(plane(t, w), plane(u, wu));
        ++C[3];
        kills.insert({{t, w}, {u, wu}});
        kills.insert({{u, wu}, {t, w}});
      }

  const auto cycle = strut_plane_cycle(alg, kite);
  auto plane_key = [&](const StrutTerm& term) {
    for (int t = 0; t < 3; ++t)
      for (const Diagonal& d : term.dyads)
        if (kite.vertices[kFrames[t].X] == d.a)
          return std::pair<int, int>{t, d.sign};
    throw std::logic_error("strut term off its kite");
  };
  std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> walked;
  for (int k = 0; k < 6; ++k) {
    walked.insert({plane_key(cycle[k]), plane_key(cycle[(k + 1) % 6])});
    walked.insert({plane_key(cycle[(k + 1) % 6]), plane_key(cycle[k])});
  }
  if (walked != kills)
    throw std::logic_error("kill graph is not the strut-plane six-cycle");
  C[4] = 1;

  // The six 4-spaces are pairwise distinct, and each is killed by
  // exactly two of the twelve single diagonals (its strut's two ends,
  // oppositely signed) -- the two-way assessor identification.
  std::set<std::vector<std::pair<int, int>>> spaces;
  for (int t = 0; t < 3; ++t)
    for (int w : {+1, -1}) {
      std::vector<std::pair<int, int>> key;
      std::vector<Element> space;
      for (int slot = 0; slot < 4; ++slot) {
        key.push_back({kFrames[t].square[slot], killed_sign(t, w, slot)});
        space.push_back(killed_line(t, w, slot));
      }
      std::sort(key.begin(), key.end());
      spaces.insert(key);
      int killers = 0;
      for (int letter = 0; letter < 6; ++letter)
        for (int sg : {+1, -1}) {
          bool kills_all = true;
          for (const Element& line : space)
            if (!mul(alg, dyad(letter, sg), line).is_zero())
              kills_all = false;
          if (kills_all) ++killers;
        }
      if (killers != 2)
        throw std::logic_error("hyperplane lost its two-way identification");
    }
  census.hyperplanes = static_cast<int>(spaces.size());
  return census;
}

// ---- Donuts ------------------------------------------------------------

DonutMap donut_map(const CDAlgebra& alg, const Triple& otrip) {
  const GoToListing lst = goto_listing(alg, otrip);
  DonutMap d;
  d.listing_id = lst.id;
  d.otrip = lst.home.otrip;

  const unsigned a = d.otrip.a, b = d.otrip.b, c = d.otrip.c;
  std::array<Assessor, 4> bs{}, cs{};
  for (int k = 0; k < 4; ++k) {
    const unsigned g = lst.columns[k].g;
    d.center[k] = {a, a ^ g};
    bs[k] = {b, b ^ g};
    cs[k] = {c, c ^ g};
    d.cartouches[k] = lst.columns[k].signature;
  }
  d.north = {bs[0], bs[1]};
  d.south = {bs[2], bs[3]};
  d.west = {cs[0], cs[1]};
  d.east = {cs[2], cs[3]};

  // All 24 couplings live inside the four column trios.
  std::vector<Coupling> all;
  for (const GoToColumn& col : lst.columns)
    for (int i = 0; i < 3; ++i) {
      const Coupling base = make_coupling(alg, col.trio.members[i],
                                          col.trio.members[(i + 1) % 3]);
      all.push_back(base);
      all.push_back({{base.lhs.a, -base.lhs.sign},
                     {base.rhs.a, -base.rhs.sign}});
    }
  std::sort(all.begin(), all.end());

  std::set<Coupling> used;
  for (const Coupling& from : all) {
    if (from.lhs.sign * from.rhs.sign != +1) continue;  // plus edges lead
    const Coupling to = signed_twist(alg, from);
    if (!std::binary_search(all.begin(), all.end(), to) || used.count(from) ||
        used.count(to) || to.lhs.sign * to.rhs.sign != -1)
      throw std::logic_error("twist image left the listing");
    used.insert(from);
    used.insert(to);
    const bool half_diag = from.lhs.a.o == a || from.rhs.a.o == a;
    d.pastings.push_back({from, to, from.lhs.a.g() - 8, to.lhs.a.g() - 8,
                          half_diag});
  }
  if (d.pastings.size() != 12 || used.size() != all.size())
    throw std::logic_error("donut pasting count broke");
  return d;
}

std::array<DonutMap, 7> all_donut_maps(const CDAlgebra& alg) {
  std::array<DonutMap, 7> out;
  for (std::size_t k = 0; k < octonion_trips().size(); ++k)
    out[k] = donut_map(alg, octonion_trips()[k]);
  return out;
}

}  // namespace zd
