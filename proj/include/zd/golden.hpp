#pragma once
// Embedded transcriptions of the classical printed reference tables the
// generated structures are checked against: the 16x16 sedenion table
// (with its two documented misprints), the seven GoTo listings, and the
// box-kite strut table. Everything here is data, no logic.

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace zd::golden {

// Printed 16x16 table, tab-separated, header line first, real unit
// rendered as U/-U. Two cells are misprints in the source; see
// table_exceptions().
std::string_view printed_sedenion_table();

struct CellException {
  int row;  // -1 = header line
  int col;  // 0-based entry column (the row label is not an entry)
  std::string printed;   // what the source shows
  std::string corrected; // what the algebra generates
};
const std::vector<CellException>& table_exceptions();

// Printed octonion triple list (canonical cyclic orientation).
const std::vector<std::array<unsigned, 3>>& printed_o_trips();

// Printed sedenion triple list (the 28 triples involving an index > 8).
const std::vector<std::array<unsigned, 3>>& printed_s_trips();

// One printed GoTo listing: the automorpheme row and the first three
// coupling rows of each of the four columns (rows 4-6 of a column are
// the global sign flips of rows 1-3).
struct GoToFixture {
  std::array<unsigned, 3> otrip;
  std::array<unsigned, 7> automorpheme;     // 3 octonions + 4 sedenions
  // columns[c][r] = "(o+S)(o-S)" style text, c in 0..3, r in 0..2
  std::array<std::array<std::string, 3>, 4> columns;
};
const std::vector<GoToFixture>& printed_goto_listings();

// Printed strut table: per kite I..VII the four GoTo ids (zigzag first)
// and the vertices A..F as (o,S) pairs.
struct StrutTableRow {
  unsigned signature;                       // 1..7 == I..VII
  std::array<unsigned, 4> goto_ids;
  std::array<std::array<unsigned, 2>, 6> vertices;  // A,B,C,D,E,F
};
const std::array<StrutTableRow, 7>& printed_strut_table();

// Printed Osiris partition: rows o = 1..7, columns S = 9..15, each cell
// "id (o,S) (o,S) id (o,S) (o,S)", empty on the S = o + 8 diagonal.
// The order of the two partner pairs inside an entry is typographically
// inconsistent in the source; compare entries pairwise as sets. One
// cell is misprinted, see osiris_exception().
const std::array<std::array<std::string, 7>, 7>& printed_osiris_table();

// Printed stripped-down Osiris partition: the box-kite numeral for each
// cell, 0 on the diagonal.
const std::array<std::array<unsigned, 7>, 7>& printed_stripped_osiris();

// The one misprinted Osiris partition cell: (o=2, S=13) duplicates the
// second listing's partner pairs; the corrected first pair is (1,14)(3,12).
struct OsirisException {
  unsigned o, S;
  std::string printed;
  std::string corrected;
};
const OsirisException& osiris_exception();

}  // namespace zd::golden
