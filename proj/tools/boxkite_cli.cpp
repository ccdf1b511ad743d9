// Command-line front end: table emission, enumeration dumps, graph
// exports, and the self-verification suite. Machine formats (csv, json,
// dot) are byte-identical across runs.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "zd/emit.hpp"
#include "zd/verify.hpp"

namespace {

using namespace zd;

unsigned parse_kite(const std::string& text) {
  if (const auto roman = roman_value(text)) return *roman;
  throw CLI::ValidationError("--kite", "expected a numeral I..VII");
}

Triple parse_otrip(const std::string& text) {
  std::istringstream is(text);
  unsigned a = 0, b = 0, c = 0;
  char comma1 = 0, comma2 = 0;
  if (!(is >> a >> comma1 >> b >> comma2 >> c) || comma1 != ',' ||
      comma2 != ',' || !is.eof())
    throw CLI::ValidationError("--otrip", "expected three indices a,b,c");
  return Triple{a, b, c};
}

std::array<unsigned, 3> parse_units(const std::string& text) {
  const Triple t = parse_otrip(text);
  return {t.a, t.b, t.c};
}

const BoxKite& kite_by_numeral(const std::array<BoxKite, 7>& kites,
                               unsigned signature) {
  return kites[signature - 1];
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
  if (!out.flush()) throw std::runtime_error("write to " + path + " failed");
}

int run(int argc, char** argv) {
  CLI::App app{"Cayley-Dickson zero-divisor toolkit"};
  app.require_subcommand(1);

  auto* table = app.add_subcommand("table", "emit a multiplication table");
  unsigned table_dim = 4;
  std::string table_format = "pretty";
  table->add_option("--dim", table_dim, "doubling exponent N")
      ->required()
      ->check(CLI::Range(1u, 8u));
  table->add_option("--format", table_format)
      ->check(CLI::IsMember({"csv", "json", "pretty"}));

  auto* trips = app.add_subcommand("trips", "list the canonical triples");
  unsigned trips_dim = 4;
  trips->add_option("--dim", trips_dim)->required()->check(CLI::Range(2u, 8u));

  app.add_subcommand("assessors", "list the 42 assessors");
  app.add_subcommand("trios", "list the 28 co-assessor trios");
  app.add_subcommand("couplings", "list the 168 signed couplings");

  auto* goto_cmd = app.add_subcommand("goto", "print one GoTo listing");
  std::string goto_otrip;
  goto_cmd->add_option("--otrip", goto_otrip, "octonion triple a,b,c")
      ->required();

  auto* osiris = app.add_subcommand("osiris", "print the Osiris partition");
  bool stripped = false;
  osiris->add_flag("--stripped", stripped, "numerals only");

  auto* boxkites = app.add_subcommand("boxkites", "strut table or one kite");
  std::string kite_arg;
  boxkites->add_option("--kite", kite_arg, "numeral I..VII");

  auto* lanyards = app.add_subcommand("lanyards", "cycle census of a kite");
  std::string lanyard_kite;
  int max_len = 12;
  lanyards->add_option("--kite", lanyard_kite)->required();
  lanyards->add_option("--max-len", max_len)->check(CLI::Range(3, 12));

  auto* dna = app.add_subcommand("dna", "recombinant strut twisting");
  std::string dna_kite;
  int dna_position = 0;
  dna->add_option("--kite", dna_kite)->required();
  dna->add_option("--position", dna_position)
      ->required()
      ->check(CLI::Range(1, 6));

  auto* seinfeld = app.add_subcommand("seinfeld", "composite divisor census");
  std::string seinfeld_kite;
  int samples = 100;
  unsigned seed = kDefaultSeed;
  seinfeld->add_option("--kite", seinfeld_kite)->required();
  seinfeld->add_option("--samples", samples)->check(CLI::PositiveNumber);
  seinfeld->add_option("--seed", seed, "scalar-sampling RNG seed");

  auto* donut = app.add_subcommand("donut", "torus dual of a GoTo listing");
  std::string donut_otrip;
  donut->add_option("--otrip", donut_otrip)->required();

  auto* fano = app.add_subcommand("fano", "triangle-diagram reports");
  bool sign_flips = false, counting_order = false;
  std::string moreno_arg;
  fano->add_flag("--sign-flips", sign_flips, "reversal histogram");
  fano->add_flag("--counting-order", counting_order, "ordering search");
  fano->add_option("--moreno", moreno_arg, "copy generators a,b,y");

  auto* pathions = app.add_subcommand("pathions", "hyper-box-kite census");
  unsigned pat_dim = 5, pat_signature = 0;
  pathions->add_option("--dim", pat_dim)->required()->check(CLI::Range(4u, 8u));
  pathions->add_option("--signature", pat_signature)->required();

  auto* export_cmd = app.add_subcommand("export", "write a DOT graph");
  std::string dot_target, out_path;
  export_cmd
      ->add_option("--dot", dot_target,
                   "boxkite:K | donut:a,b,c | fano | pathions:N,S")
      ->required();
  export_cmd->add_option("--out", out_path)->required();

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  std::string suite_arg = "all";
  bool verify_json = false;
  verify->add_option("--suite", suite_arg)
      ->check(CLI::IsMember({"all", "core", "boxkite", "flowmorph", "pathion"}));
  verify->add_flag("--json", verify_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*table) {
    const CDAlgebra alg = build_algebra(table_dim);
    if (table_format == "pretty")
      std::cout << table_pretty(alg);
    else if (table_format == "csv")
      std::cout << table_csv(alg);
    else
      std::cout << table_json(alg).dump(2) << "\n";
    return 0;
  }
  if (*trips) {
    std::cout << triples_pretty(build_algebra(trips_dim));
    return 0;
  }

  const CDAlgebra sed = build_algebra(4);
  if (app.got_subcommand("assessors")) {
    std::cout << assessors_json(sed).dump(2) << "\n";
    return 0;
  }
  if (app.got_subcommand("trios")) {
    std::cout << trios_json(sed).dump(2) << "\n";
    return 0;
  }
  if (app.got_subcommand("couplings")) {
    std::cout << couplings_json(sed).dump(2) << "\n";
    return 0;
  }
  if (*goto_cmd) {
    std::cout << goto_pretty(goto_listing(sed, parse_otrip(goto_otrip)));
    return 0;
  }
  if (*osiris) {
    const OsirisPartition p = osiris_partition(sed);
    std::cout << (stripped ? osiris_stripped_pretty(p) : osiris_pretty(p));
    return 0;
  }
  if (*boxkites) {
    const auto kites = assemble_box_kites(sed);
    if (kite_arg.empty())
      std::cout << strut_table_pretty(kites);
    else
      std::cout << boxkite_pretty(kite_by_numeral(kites, parse_kite(kite_arg)));
    return 0;
  }
  if (*lanyards) {
    const auto kites = assemble_box_kites(sed);
    const BoxKite& kite = kite_by_numeral(kites, parse_kite(lanyard_kite));
    std::cout << lanyard_census_json(lanyard_census(sed, kite, max_len)).dump(2)
              << "\n";
    return 0;
  }
  if (*dna) {
    const auto kites = assemble_box_kites(sed);
    const BoxKite& kite = kite_by_numeral(kites, parse_kite(dna_kite));
    std::cout << dna_pretty(recombinant_dna(sed, kite, dna_position));
    return 0;
  }
  if (*seinfeld) {
    const auto kites = assemble_box_kites(sed);
    const BoxKite& kite = kite_by_numeral(kites, parse_kite(seinfeld_kite));
    std::cout << seinfeld_json(seinfeld_census(sed, kite, samples, seed)).dump(2)
              << "\n";
    return 0;
  }
  if (*donut) {
    std::cout << donut_pretty(donut_map(sed, parse_otrip(donut_otrip)));
    return 0;
  }
  if (*fano) {
    const int modes = int(sign_flips) + int(counting_order) +
                      int(!moreno_arg.empty());
    if (modes != 1)
      throw CLI::ValidationError(
          "fano", "pick exactly one of --sign-flips, --counting-order, "
                  "--moreno");
    if (sign_flips) {
      const CountingOrderReport r = counting_order_search();
      std::cout << Json{{"reversal_multiplicity", r.reversal_multiplicity}}
                       .dump(2)
                << "\n";
    } else if (counting_order) {
      std::cout << counting_order_json(counting_order_search()).dump(2)
                << "\n";
    } else {
      const auto [a, b, y] = parse_units(moreno_arg);
      std::cout << moreno_json(sed, moreno_copy(sed, a, b, y)).dump(2) << "\n";
    }
    return 0;
  }
  if (*pathions) {
    const HyperBoxKite k = hyper_box_kite(pat_dim, pat_signature);
    const CDAlgebra alg =
        pat_dim == 4 ? sed : build_algebra(pat_dim);
    std::cout << hyper_census_json(k, verify_hyper_edges(alg, k)).dump(2)
              << "\n";
    return 0;
  }
  if (*export_cmd) {
    std::string dot;
    if (dot_target == "fano") {
      dot = fano_dot(canonical_fano());
    } else if (dot_target.starts_with("boxkite:")) {
      const auto kites = assemble_box_kites(sed);
      const unsigned sig = parse_kite(dot_target.substr(8));
      dot = boxkite_dot(sed, kite_by_numeral(kites, sig));
    } else if (dot_target.starts_with("donut:")) {
      dot = donut_dot(sed, donut_map(sed, parse_otrip(dot_target.substr(6))));
    } else if (dot_target.starts_with("pathions:")) {
      std::istringstream is(dot_target.substr(9));
      unsigned n = 0, s = 0;
      char comma = 0;
      if (!(is >> n >> comma >> s) || comma != ',' || !is.eof())
        throw CLI::ValidationError("--dot", "expected pathions:N,S");
      dot = pathion_dot(hyper_box_kite(n, s));
    } else {
      throw CLI::ValidationError("--dot", "unknown export target");
    }
    write_file(out_path, dot);
    return 0;
  }
  if (*verify) {
    const VerificationReport report =
        run_verification(*suite_from_name(suite_arg));
    if (verify_json)
      std::cout << verification_json(report).dump(2) << "\n";
    else
      std::cout << verification_text(report);
    return report.ok() ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
