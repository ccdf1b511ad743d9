#include "zd/golden.hpp"

namespace zd::golden {

std::string_view printed_sedenion_table() {
  // Verbatim transcription. Col 13 of the header and col 13 of row U
  // both print "1" in the source; those are the two documented
  // misprints (see table_exceptions).
  static const std::string t =
      "\tU\t1\t2\t3\t4\t5\t6\t7\t8\t9\t10\t11\t12\t1\t14\t15\n"
      "U\tU\t1\t2\t3\t4\t5\t6\t7\t8\t9\t10\t11\t12\t1\t14\t15\n"
      "1\t1\t-U\t3\t-2\t5\t-4\t-7\t6\t9\t-8\t-11\t10\t-13\t12\t15\t-14\n"
      "2\t2\t-3\t-U\t1\t6\t7\t-4\t-5\t10\t11\t-8\t-9\t-14\t-15\t12\t13\n"
      "3\t3\t2\t-1\t-U\t7\t-6\t5\t-4\t11\t-10\t9\t-8\t-15\t14\t-13\t12\n"
      "4\t4\t-5\t-6\t-7\t-U\t1\t2\t3\t12\t13\t14\t15\t-8\t-9\t-10\t-11\n"
      "5\t5\t4\t-7\t6\t-1\t-U\t-3\t2\t13\t-12\t15\t-14\t9\t-8\t11\t-10\n"
      "6\t6\t7\t4\t-5\t-2\t3\t-U\t-1\t14\t-15\t-12\t13\t10\t-11\t-8\t9\n"
      "7\t7\t-6\t5\t4\t-3\t-2\t1\t-U\t15\t14\t-13\t-12\t11\t10\t-9\t-8\n"
      "8\t8\t-9\t-10\t-11\t-12\t-13\t-14\t-15\t-U\t1\t2\t3\t4\t5\t6\t7\n"
      "9\t9\t8\t-11\t10\t-13\t12\t15\t-14\t-1\t-U\t-3\t2\t-5\t4\t7\t-6\n"
      "10\t10\t11\t8\t-9\t-14\t-15\t12\t13\t-2\t3\t-U\t-1\t-6\t-7\t4\t5\n"
      "11\t11\t-10\t9\t8\t-15\t14\t-13\t12\t-3\t-2\t1\t-U\t-7\t6\t-5\t4\n"
      "12\t12\t13\t14\t15\t8\t-9\t-10\t-11\t-4\t5\t6\t7\t-U\t-1\t-2\t-3\n"
      "13\t13\t-12\t15\t-14\t9\t8\t11\t-10\t-5\t-4\t7\t-6\t1\t-U\t3\t-2\n"
      "14\t14\t-15\t-12\t13\t10\t-11\t8\t9\t-6\t-7\t-4\t5\t2\t-3\t-U\t1\n"
      "15\t15\t14\t-13\t-12\t11\t10\t-9\t8\t-7\t6\t-5\t-4\t3\t2\t-1\t-U\n";
  return t;
}

const std::vector<CellException>& table_exceptions() {
  static const std::vector<CellException> ex = {
      {-1, 13, "1", "13"},  // header misprints column label 13
      {0, 13, "1", "13"},   // row U, col 13: U*e13 = e13, printed "1"
  };
  return ex;
}

const std::vector<std::array<unsigned, 3>>& printed_o_trips() {
  static const std::vector<std::array<unsigned, 3>> t = {
      {1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6},
      {2, 5, 7}, {3, 4, 7}, {3, 6, 5},
  };
  return t;
}

const std::vector<std::array<unsigned, 3>>& printed_s_trips() {
  // Printed in seven rows grouped by lowest unit; compared as a set of
  // canonically oriented triples.
  static const std::vector<std::array<unsigned, 3>> t = {
      {1, 8, 9},  {1, 11, 10}, {1, 13, 12}, {1, 14, 15},
      {2, 8, 10}, {2, 9, 11},  {2, 14, 12}, {2, 15, 13},
      {3, 8, 11}, {3, 10, 9},  {3, 15, 12}, {3, 13, 14},
      {4, 8, 12}, {4, 9, 13},  {4, 10, 14}, {4, 11, 15},
      {5, 8, 13}, {5, 12, 9},  {5, 10, 15}, {5, 14, 11},
      {6, 8, 14}, {6, 15, 9},  {6, 12, 10}, {6, 11, 13},
      {7, 8, 15}, {7, 9, 14},  {7, 13, 10}, {7, 12, 11},
  };
  return t;
}

const std::vector<GoToFixture>& printed_goto_listings() {
  static const std::vector<GoToFixture> g = {
      {{1, 2, 3},
       {1, 2, 3, 12, 13, 14, 15},
       {{{"(1+13)(2-14)", "(2-14)(3+15)", "(3+15)(1-13)"},
         {"(1+14)(2+13)", "(2+13)(3-12)", "(3-12)(1-14)"},
         {"(1-12)(2-15)", "(2-15)(3-14)", "(3-14)(1+12)"},
         {"(1-15)(2+12)", "(2+12)(3+13)", "(3+13)(1+15)"}}}},
      {{1, 4, 5},
       {1, 4, 5, 10, 11, 14, 15},
       {{{"(1+14)(4-11)", "(4-11)(5+10)", "(5+10)(1-14)"},
         {"(1+11)(4+14)", "(4+14)(5-15)", "(5-15)(1-11)"},
         {"(1-15)(4-10)", "(4-10)(5-11)", "(5-11)(1+15)"},
         {"(1-10)(4+15)", "(4+15)(5+14)", "(5+14)(1+10)"}}}},
      {{1, 7, 6},
       {1, 7, 6, 10, 11, 12, 13},
       {{{"(1+11)(7-13)", "(7-13)(6+12)", "(6+12)(1-11)"},
         {"(1+13)(7+11)", "(7+11)(6-10)", "(6-10)(1-13)"},
         {"(1-10)(7-12)", "(7-12)(6-13)", "(6-13)(1+10)"},
         {"(1-12)(7+10)", "(7+10)(6+11)", "(6+11)(1+12)"}}}},
      {{2, 4, 6},
       {2, 4, 6, 9, 11, 13, 15},
       {{{"(2+15)(4-9)", "(4-9)(6+11)", "(6+11)(2-15)"},
         {"(2+9)(4+15)", "(4+15)(6-13)", "(6-13)(2-9)"},
         {"(2-13)(4-11)", "(4-11)(6-9)", "(6-9)(2+13)"},
         {"(2-11)(4+13)", "(4+13)(6+15)", "(6+15)(2+11)"}}}},
      {{2, 5, 7},
       {2, 5, 7, 9, 11, 12, 14},
       {{{"(2+9)(5-14)", "(5-14)(7+12)", "(7+12)(2-9)"},
         {"(2+14)(5+9)", "(5+9)(7-11)", "(7-11)(2-14)"},
         {"(2-11)(5-12)", "(5-12)(7-14)", "(7-14)(2+11)"},
         {"(2-12)(5+11)", "(5+11)(7+9)", "(7+9)(2+12)"}}}},
      {{3, 4, 7},
       {3, 4, 7, 9, 10, 13, 14},
       {{{"(3+13)(4-10)", "(4-10)(7+9)", "(7+9)(3-13)"},
         {"(3+10)(4+13)", "(4+13)(7-14)", "(7-14)(3-10)"},
         {"(3-14)(4-9)", "(4-9)(7-10)", "(7-10)(3+14)"},
         {"(3-9)(4+14)", "(4+14)(7+13)", "(7+13)(3+9)"}}}},
      {{3, 6, 5},
       {3, 6, 5, 9, 10, 12, 15},
       {{{"(3+10)(6-15)", "(6-15)(5+12)", "(5+12)(3-10)"},
         {"(3+15)(6+10)", "(6+10)(5-9)", "(5-9)(3-15)"},
         {"(3-9)(6-12)", "(6-12)(5-15)", "(5-15)(3+9)"},
         {"(3-12)(6+9)", "(6+9)(5+10)", "(5+10)(3+12)"}}}},
  };
  return g;
}

const std::array<StrutTableRow, 7>& printed_strut_table() {
  static const std::array<StrutTableRow, 7> t = {{
      {1, {7, 6, 4, 5}, {{{3, 10}, {6, 15}, {5, 12}, {4, 13}, {7, 14}, {2, 11}}}},
      {2, {3, 2, 6, 7}, {{{1, 11}, {7, 13}, {6, 12}, {4, 14}, {5, 15}, {3, 9}}}},
      {3, {5, 4, 2, 3}, {{{2, 9}, {5, 14}, {7, 12}, {4, 15}, {6, 13}, {1, 10}}}},
      {4, {1, 3, 5, 7}, {{{1, 13}, {2, 14}, {3, 15}, {7, 11}, {6, 10}, {5, 9}}}},
      {5, {4, 1, 6, 3}, {{{2, 15}, {4, 9}, {6, 11}, {3, 14}, {1, 12}, {7, 10}}}},
      {6, {6, 1, 2, 5}, {{{3, 13}, {4, 10}, {7, 9}, {1, 15}, {2, 12}, {5, 11}}}},
      {7, {2, 1, 4, 7}, {{{1, 14}, {4, 11}, {5, 10}, {2, 13}, {3, 12}, {6, 9}}}},
  }};
  return t;
}

const std::array<std::array<std::string, 7>, 7>& printed_osiris_table() {
  static const std::array<std::array<std::string, 7>, 7> t = {{
      {"",
       "2 (4,15) (5,14) 3 (6,13) (7,12)",
       "2 (4,14) (5,15) 3 (6,12) (7,13)",
       "1 (2,15) (3,14) 3 (6,11) (7,10)",
       "1 (2,14) (3,15) 3 (6,10) (7,11)",
       "1 (2,13) (3,12) 2 (4,11) (5,10)",
       "1 (2,12) (3,13) 2 (4,10) (5,11)"},
      {"4 (4,15) (6,13) 5 (5,14) (7,12)",
       "",
       "4 (4,13) (6,15) 5 (5,12) (7,14)",
       "1 (1,15) (3,13) 5 (5,11) (7,9)",
       "1 (4,11) (6,9) 4 (4,11) (6,9)",
       "1 (1,13) (3,15) 5 (5,9) (7,11)",
       "1 (1,12) (3,14) 4 (4,9) (6,11)"},
      {"6 (4,14) (7,13) 7 (6,12) (5,15)",
       "6 (4,13) (7,14) 7 (5,12) (6,15)",
       "",
       "1 (1,14) (2,13) 7 (5,10) (6,9)",
       "1 (1,15) (2,12) 6 (4,10) (7,9)",
       "1 (1,12) (2,15) 6 (4,9) (7,10)",
       "1 (1,13) (2,14) 7 (5,9) (6,10)"},
      {"4 (2,15) (6,11) 6 (3,14) (7,10)",
       "2 (1,15) (5,11) 6 (3,13) (7,9)",
       "2 (1,14) (5,10) 4 (2,13) (6,9)",
       "",
       "4 (2,11) (6,15) 6 (3,10) (7,14)",
       "2 (1,11) (5,15) 6 (3,9) (7,13)",
       "2 (1,10) (5,14) 4 (2,9) (6,13)"},
      {"5 (2,14) (7,11) 7 (3,15) (6,10)",
       "2 (1,14) (4,11) 7 (3,12) (6,9)",
       "2 (1,15) (4,10) 5 (2,12) (7,9)",
       "5 (2,11) (7,14) 7 (3,10) (6,15)",
       "",
       "2 (1,10) (4,15) 5 (2,9) (7,12)",
       "2 (1,11) (4,14) 7 (3,9) (6,12)"},
      {"4 (2,13) (4,11) 7 (3,12) (5,10)",
       "3 (1,13) (7,11) 7 (3,15) (5,9)",
       "3 (1,12) (7,10) 4 (2,15) (4,9)",
       "3 (1,11) (7,13) 7 (3,9) (5,15)",
       "3 (1,10) (7,12) 4 (2,9) (4,15)",
       "",
       "4 (2,11) (4,13) 7 (3,10) (5,12)"},
      {"5 (2,12) (5,11) 6 (3,13) (4,10)",
       "3 (1,12) (6,11) 6 (3,14) (4,9)",
       "3 (1,13) (6,10) 5 (2,14) (5,9)",
       "3 (1,10) (6,13) 5 (2,9) (5,14)",
       "3 (1,11) (6,12) 6 (3,9) (4,14)",
       "5 (2,11) (5,12) 6 (3,10) (4,13)",
       ""},
  }};
  return t;
}

const std::array<std::array<unsigned, 7>, 7>& printed_stripped_osiris() {
  static const std::array<std::array<unsigned, 7>, 7> t = {{
      {0, 3, 2, 5, 4, 7, 6},
      {3, 0, 1, 6, 7, 4, 5},
      {2, 1, 0, 7, 6, 5, 4},
      {5, 6, 7, 0, 1, 2, 3},
      {4, 7, 6, 1, 0, 3, 2},
      {7, 4, 5, 2, 3, 0, 1},
      {6, 5, 4, 3, 2, 1, 0},
  }};
  return t;
}

const OsirisException& osiris_exception() {
  static const OsirisException ex = {
      2, 13, "1 (4,11) (6,9) 4 (4,11) (6,9)",
      "1 (1,14) (3,12) 4 (4,11) (6,9)"};
  return ex;
}

}  // namespace zd::golden
