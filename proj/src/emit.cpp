#include "zd/emit.hpp"

#include <sstream>

namespace zd {

namespace {

std::string cell_label(int sign, unsigned index) {
  std::string s = sign < 0 ? "-" : "";
  return s + (index == 0 ? "U" : std::to_string(index));
}

Json diagonal_json(const Diagonal& d) {
  return Json{{"o", d.a.o}, {"S", d.a.S}, {"sign", d.sign}};
}

Json assessor_json(const Assessor& a) { return Json::array({a.o, a.S}); }

std::string sign_char(int s) { return s > 0 ? "+" : "-"; }

std::string dyad_pair(const std::array<Diagonal, 2>& dyads) {
  return "{" + to_string(dyads[0]) + "," + to_string(dyads[1]) + "}";
}

constexpr std::array<const char*, 6> kLetters = {"A", "B", "C", "D", "E", "F"};

}  // namespace

std::string table_pretty(const CDAlgebra& alg) {
  std::ostringstream os;
  for (unsigned j = 0; j < alg.dim(); ++j) os << "\t" << cell_label(1, j);
  os << "\n";
  for (unsigned i = 0; i < alg.dim(); ++i) {
    os << cell_label(1, i);
    for (unsigned j = 0; j < alg.dim(); ++j)
      os << "\t" << cell_label(alg.sign(i, j), i ^ j);
    os << "\n";
  }
  return os.str();
}

std::string table_csv(const CDAlgebra& alg) {
  std::ostringstream os;
  for (unsigned j = 0; j < alg.dim(); ++j) os << "," << j;
  os << "\n";
  for (unsigned i = 0; i < alg.dim(); ++i) {
    os << i;
    for (unsigned j = 0; j < alg.dim(); ++j) {
      os << ",";
      if (alg.sign(i, j) < 0) os << "-";
      os << (i ^ j);
    }
    os << "\n";
  }
  return os.str();
}

Json table_json(const CDAlgebra& alg) {
  Json rows = Json::array();
  for (unsigned i = 0; i < alg.dim(); ++i) {
    Json row = Json::array();
    for (unsigned j = 0; j < alg.dim(); ++j)
      row.push_back(Json{{"sign", alg.sign(i, j)}, {"index", i ^ j}});
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string triples_pretty(const CDAlgebra& alg) {
  std::ostringstream os;
  for (const Triple& t : triples(alg)) os << to_string(t) << "\n";
  return os.str();
}

Json assessors_json(const CDAlgebra& alg) {
  Json out = Json::array();
  for (const Assessor& a : enumerate_assessors(alg))
    out.push_back(Json{{"o", a.o},
                       {"S", a.S},
                       {"g", a.g()},
                       {"kite", roman_numeral(kite_signature_of(alg, a))}});
  return out;
}

Json trios_json(const CDAlgebra& alg) {
  Json out = Json::array();
  for (const Trio& t : enumerate_trios(alg)) {
    Json members = Json::array();
    for (const Assessor& a : t.members) members.push_back(assessor_json(a));
    out.push_back(
        Json{{"otrip", {t.otrip.a, t.otrip.b, t.otrip.c}},
             {"members", std::move(members)},
             {"edge_signs", t.edge_signs},
             {"kind", t.kind == TrioKind::zigzag ? "zigzag" : "trefoil"}});
  }
  return out;
}

Json couplings_json(const CDAlgebra& alg) {
  Json out = Json::array();
  for (const Coupling& c : enumerate_couplings(alg))
    out.push_back(Json{{"lhs", diagonal_json(c.lhs)},
                       {"rhs", diagonal_json(c.rhs)},
                       {"g", c.lhs.a.g()}});
  return out;
}

std::string goto_pretty(const GoToListing& listing) {
  std::ostringstream os;
  os << "GoTo #" << listing.id << ": O-trip (" << listing.home.otrip.a << ","
     << listing.home.otrip.b << "," << listing.home.otrip.c << "), sedenions {";
  for (std::size_t k = 0; k < listing.home.sedenions.size(); ++k)
    os << (k ? "," : "") << listing.home.sedenions[k];
  os << "}\n";
  for (const GoToColumn& col : listing.columns)
    os << "\t[g=" << col.g << " kite " << roman_numeral(col.signature) << " "
       << (col.trio.kind == TrioKind::zigzag ? "zigzag" : "trefoil") << "]";
  os << "\n";
  for (int row = 0; row < 6; ++row) {
    for (const GoToColumn& col : listing.columns)
      os << "\t" << to_string(col.rows[row].first)
         << to_string(col.rows[row].second);
    os << "\n";
  }
  return os.str();
}

namespace {

std::string osiris_cell_text(const OsirisCell& cell) {
  std::ostringstream os;
  for (int k = 0; k < 2; ++k) {
    if (k) os << " ";
    os << cell.goto_ids[k] << " " << to_string(cell.partners[k][0]) << " "
       << to_string(cell.partners[k][1]);
  }
  return os.str();
}

std::string osiris_grid(const OsirisPartition& p, bool stripped) {
  std::ostringstream os;
  os << "o\\S";
  for (unsigned S = 9; S <= 15; ++S) os << "\t" << S;
  os << "\n";
  for (unsigned o = 1; o <= 7; ++o) {
    os << o;
    for (unsigned S = 9; S <= 15; ++S) {
      os << "\t";
      const auto& cell = p.cell(o, S);
      if (!cell) continue;
      os << (stripped ? roman_numeral(cell->kite) : osiris_cell_text(*cell));
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace

std::string osiris_pretty(const OsirisPartition& p) {
  return osiris_grid(p, false);
}

std::string osiris_stripped_pretty(const OsirisPartition& p) {
  return osiris_grid(p, true);
}

Json osiris_json(const OsirisPartition& p) {
  Json out = Json::array();
  for (unsigned o = 1; o <= 7; ++o)
    for (unsigned S = 9; S <= 15; ++S) {
      const auto& cell = p.cell(o, S);
      if (!cell) continue;
      Json partners = Json::array();
      for (int k = 0; k < 2; ++k)
        partners.push_back(Json{{"goto", cell->goto_ids[k]},
                                {"pair", {assessor_json(cell->partners[k][0]),
                                          assessor_json(cell->partners[k][1])}}});
      out.push_back(Json{{"o", o},
                         {"S", S},
                         {"kite", roman_numeral(cell->kite)},
                         {"trios", std::move(partners)}});
    }
  return out;
}

std::string strut_table_pretty(const std::array<BoxKite, 7>& kites) {
  std::ostringstream os;
  os << "Kite\tGoTo";
  for (const char* l : kLetters) os << "\t" << l;
  os << "\n";
  for (const BoxKite& kite : kites) {
    os << roman_numeral(kite.signature) << "\t";
    for (std::size_t k = 0; k < kite.goto_ids.size(); ++k)
      os << (k ? "," : "") << kite.goto_ids[k];
    for (const Assessor& a : kite.vertices) os << "\t" << to_string(a);
    os << "\n";
  }
  return os.str();
}

namespace {

std::string face_line(const KiteFace& face) {
  std::ostringstream os;
  for (int l : face.letters) os << kLetters[l];
  os << " " << (face.kind == TrioKind::zigzag ? "zigzag" : "trefoil") << " [";
  for (std::size_t k = 0; k < face.edge_signs.size(); ++k)
    os << (k ? " " : "") << sign_char(face.edge_signs[k]);
  os << "]";
  return os.str();
}

}  // namespace

std::string boxkite_pretty(const BoxKite& kite) {
  std::ostringstream os;
  os << "Box-kite " << roman_numeral(kite.signature) << " (signature "
     << kite.signature << ")\n  vertices:";
  for (int l = 0; l < 6; ++l)
    os << " " << kLetters[l] << to_string(kite.vertices[l]);
  os << "\n  struts: A-F B-E C-D\n  GoTo listings: {";
  for (std::size_t k = 0; k < kite.goto_ids.size(); ++k)
    os << (k ? "," : "") << kite.goto_ids[k];
  os << "}\n";
  for (const KiteFace& face : kite.sails) os << "  sail " << face_line(face) << "\n";
  for (const KiteFace& face : kite.vents) os << "  vent " << face_line(face) << "\n";
  return os.str();
}

Json boxkite_json(const BoxKite& kite) {
  Json vertices = Json::array();
  for (int l = 0; l < 6; ++l)
    vertices.push_back(Json{{"letter", kLetters[l]},
                            {"o", kite.vertices[l].o},
                            {"S", kite.vertices[l].S}});
  auto faces = [](const std::array<KiteFace, 4>& fs) {
    Json out = Json::array();
    for (const KiteFace& f : fs) {
      std::string letters;
      for (int l : f.letters) letters += kLetters[l];
      out.push_back(
          Json{{"letters", letters},
               {"kind", f.kind == TrioKind::zigzag ? "zigzag" : "trefoil"},
               {"edge_signs", f.edge_signs}});
    }
    return out;
  };
  return Json{{"kite", roman_numeral(kite.signature)},
              {"signature", kite.signature},
              {"vertices", std::move(vertices)},
              {"goto_ids", kite.goto_ids},
              {"sails", faces(kite.sails)},
              {"vents", faces(kite.vents)}};
}

Json lanyard_census_json(const LanyardCensus& census) {
  auto lengths = [](const std::map<int, int>& m) {
    Json out = Json::object();
    for (const auto& [len, n] : m) out[std::to_string(len)] = n;
    return out;
  };
  return Json{{"max_len", census.max_len},
              {"cycles_by_length", lengths(census.cycles_by_length)},
              {"complete_by_length", lengths(census.complete_by_length)},
              {"tray_rack_4", census.tray_rack_4},
              {"butterfly_4", census.butterfly_4},
              {"sail_6", census.sail_6},
              {"vent_6", census.vent_6},
              {"hexagon_6", census.hexagon_6},
              {"cats_cradle_6", census.cats_cradle_6},
              {"waltz_6", census.waltz_6},
              {"complete_10", census.complete_10},
              {"complete_12", census.complete_12},
              {"twelve_cycle_sign_word", census.twelve_cycle_sign_word},
              {"missing_link_strand", census.missing_link_strand},
              {"double_zigzag_strand", census.double_zigzag_strand}};
}

Json seinfeld_json(const SeinfeldCensus& census) {
  return Json{{"case_counts", census.case_counts},
              {"hyperplanes", census.hyperplanes}};
}

std::string dna_pretty(const DnaResult& r) {
  std::ostringstream os;
  os << "position " << r.position << "\n";
  const std::array<std::pair<const char*, const DnaTwist*>, 2> twists = {
      {{"column", &r.column}, {"diagonal", &r.diagonal}}};
  for (const auto& [name, twist] : twists)
    os << "  " << name << " twist -> kite " << roman_numeral(twist->target)
       << ": " << dyad_pair(twist->struts[0]) << " | "
       << dyad_pair(twist->struts[1]) << "\n";
  return os.str();
}

namespace {

std::string assessor_run(const Assessor* data, std::size_t n) {
  std::ostringstream os;
  for (std::size_t k = 0; k < n; ++k) os << (k ? " " : "") << to_string(data[k]);
  return os.str();
}

}  // namespace

std::string donut_pretty(const DonutMap& m) {
  std::ostringstream os;
  os << "Donut #" << m.listing_id << ": O-trip (" << m.otrip.a << ","
     << m.otrip.b << "," << m.otrip.c << ")\n";
  os << "  center: " << assessor_run(m.center.data(), 4) << "\n";
  os << "  north: " << assessor_run(m.north.data(), 2)
     << "  south: " << assessor_run(m.south.data(), 2) << "\n";
  os << "  west: " << assessor_run(m.west.data(), 2)
     << "  east: " << assessor_run(m.east.data(), 2) << "\n";
  os << "  cartouches:";
  for (unsigned k : m.cartouches) os << " " << roman_numeral(k);
  os << "\n  pastings:\n";
  for (const DonutPasting& p : m.pastings)
    os << "    " << to_string(p.from) << " -> " << to_string(p.to) << "  ["
       << roman_numeral(p.from_kite) << " -> " << roman_numeral(p.to_kite)
       << ", " << (p.half_diagonal ? "half-diagonal" : "square-edge") << "]\n";
  return os.str();
}

Json donut_json(const DonutMap& m) {
  auto group = [](const Assessor* data, std::size_t n) {
    Json out = Json::array();
    for (std::size_t k = 0; k < n; ++k) out.push_back(assessor_json(data[k]));
    return out;
  };
  Json pastings = Json::array();
  for (const DonutPasting& p : m.pastings)
    pastings.push_back(Json{{"from", {diagonal_json(p.from.lhs), diagonal_json(p.from.rhs)}},
                            {"to", {diagonal_json(p.to.lhs), diagonal_json(p.to.rhs)}},
                            {"from_kite", roman_numeral(p.from_kite)},
                            {"to_kite", roman_numeral(p.to_kite)},
                            {"half_diagonal", p.half_diagonal}});
  Json cartouches = Json::array();
  for (unsigned k : m.cartouches) cartouches.push_back(roman_numeral(k));
  return Json{{"listing", m.listing_id},
              {"otrip", {m.otrip.a, m.otrip.b, m.otrip.c}},
              {"center", group(m.center.data(), 4)},
              {"north", group(m.north.data(), 2)},
              {"south", group(m.south.data(), 2)},
              {"west", group(m.west.data(), 2)},
              {"east", group(m.east.data(), 2)},
              {"cartouches", std::move(cartouches)},
              {"pastings", std::move(pastings)}};
}

std::string fano_pretty(const FanoLabeling& l) {
  std::ostringstream os;
  for (const FanoLine& line : l.lines)
    os << "(" << line[0] << "," << line[1] << "," << line[2] << ")\n";
  return os.str();
}

Json counting_order_json(const CountingOrderReport& r) {
  return Json{{"reversal_multiplicity", r.reversal_multiplicity},
              {"canonical_out_of_order", r.canonical_out_of_order},
              {"min_out_of_order", r.min_out_of_order},
              {"best_mask", r.best_mask},
              {"zero_attainable", r.zero_attainable}};
}

Json moreno_json(const CDAlgebra& alg, const MorenoCopy& copy) {
  Json slots = Json::array();
  for (unsigned label = 1; label <= 7; ++label) {
    const SignedUnit& u = copy.slot(label);
    slots.push_back(Json{{"label", label}, {"index", u.index}, {"sign", u.sign}});
  }
  Json missigned = Json::array();
  for (const FanoLine& line : missigned_triples(alg, copy))
    missigned.push_back(line);
  bool flowmorphic = false;
  try {
    flowmorphic = is_flowmorphic(induced_labeling(alg, copy));
  } catch (const std::domain_error&) {
    flowmorphic = false;
  }
  return Json{{"slots", std::move(slots)},
              {"missigned", std::move(missigned)},
              {"flowmorphic", flowmorphic}};
}

Json hyper_census_json(const HyperBoxKite& k, const HyperCensus& c) {
  Json vertices = Json::array();
  for (const auto& v : k.vertices) vertices.push_back(v);
  Json struts = Json::array();
  for (const auto& s : k.struts) struts.push_back(Json::array({s[0], s[1]}));
  return Json{{"dim_exp", k.dim_exp},
              {"signature", k.signature},
              {"vertices", std::move(vertices)},
              {"struts", std::move(struts)},
              {"census",
               Json{{"vertex_count", c.vertex_count},
                    {"strut_count", c.strut_count},
                    {"edges", c.edges},
                    {"trios", c.trios},
                    {"struts_insulated", c.struts_insulated},
                    {"all_pairs_couple", c.all_pairs_couple}}}};
}

std::string boxkite_dot(const CDAlgebra& alg, const BoxKite& kite) {
  std::ostringstream os;
  os << "graph boxkite_" << roman_numeral(kite.signature) << " {\n";
  os << "  label=\"box-kite " << roman_numeral(kite.signature) << "\";\n";
  for (int l = 0; l < 6; ++l)
    os << "  " << kLetters[l] << " [label=\"" << to_string(kite.vertices[l])
       << "\"];\n";
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      if (j == strut_opposite(i)) continue;
      os << "  " << kLetters[i] << " -- " << kLetters[j] << " [label=\""
         << sign_char(edge_sign(alg, kite.vertices[i], kite.vertices[j]))
         << "\"];\n";
    }
  for (int i = 0; i < 3; ++i)
    os << "  " << kLetters[i] << " -- " << kLetters[strut_opposite(i)]
       << " [style=dashed];\n";
  os << "}\n";
  return os.str();
}

namespace {

std::string donut_node(const Assessor& a) {
  return "a" + std::to_string(a.o) + "_" + std::to_string(a.S);
}

}  // namespace

std::string donut_dot(const CDAlgebra& alg, const DonutMap& m) {
  std::ostringstream os;
  os << "graph donut_" << m.listing_id << " {\n";
  os << "  label=\"GoTo #" << m.listing_id << " torus\";\n";
  os << "  node [shape=box];\n";
  const std::array<std::pair<const char*, std::pair<const Assessor*, int>>, 5>
      groups = {{{"center", {m.center.data(), 4}},
                 {"north", {m.north.data(), 2}},
                 {"south", {m.south.data(), 2}},
                 {"west", {m.west.data(), 2}},
                 {"east", {m.east.data(), 2}}}};
  for (const auto& [name, span] : groups) {
    os << "  /* " << name << " */\n";
    for (int k = 0; k < span.second; ++k)
      os << "  " << donut_node(span.first[k]) << " [label=\""
         << to_string(span.first[k]) << "\"];\n";
  }
  // Square-with-diagonals annotation: the listing's four column trios.
  const GoToListing listing = goto_listing(alg, m.otrip);
  for (std::size_t col = 0; col < listing.columns.size(); ++col) {
    const auto& members = listing.columns[col].trio.members;
    os << "  /* cartouche " << roman_numeral(m.cartouches[col]) << " */\n";
    for (int k = 0; k < 3; ++k)
      os << "  " << donut_node(members[k]) << " -- "
         << donut_node(members[(k + 1) % 3]) << " [label=\""
         << roman_numeral(m.cartouches[col]) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string fano_dot(const FanoLabeling& l) {
  std::ostringstream os;
  os << "digraph fano {\n";
  for (unsigned p = 1; p <= 7; ++p) os << "  " << p << ";\n";
  for (const FanoLine& line : l.lines) {
    os << "  /* line (" << line[0] << "," << line[1] << "," << line[2]
       << ") */\n";
    for (int k = 0; k < 3; ++k)
      os << "  " << line[k] << " -> " << line[(k + 1) % 3] << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string pathion_dot(const HyperBoxKite& k) {
  std::ostringstream os;
  os << "graph pathions_" << k.dim_exp << "_" << k.signature << " {\n";
  os << "  label=\"hyper-box-kite (" << k.dim_exp << ", " << k.signature
     << ")\";\n";
  for (const auto& v : k.vertices)
    os << "  v" << v[0] << " [label=\"(" << v[0] << "," << v[1] << ")\"];\n";
  for (const auto& s : k.struts)
    os << "  v" << s[0][0] << " -- v" << s[1][0] << " [style=dashed];\n";
  os << "}\n";
  return os.str();
}

}  // namespace zd
