#pragma once

// Command-line front end: machine-readable JSON on stdout, prose on stderr.
// Exit codes: 0 success, 1 verification failure, 2 parse/usage errors.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "signed_spectra/census.hpp"

namespace signed_spectra::cli {

using nlohmann::json;

inline double round6(double x) { return std::round(x * 1e6) / 1e6; }

/// SG1 input: a literal "SG1 ..." line, "-" for the first line of stdin, or
/// a file name (first non-empty line).
inline SignedGraph read_graph_arg(const std::string& arg, std::istream& in) {
  if (arg.rfind("SG1", 0) == 0) return parse_sg1(arg);
  std::string line;
  if (arg == "-") {
    while (std::getline(in, line))
      if (!line.empty()) return parse_sg1(line);
    throw std::invalid_argument("no SG1 line on stdin");
  }
  std::ifstream f(arg);
  if (!f) throw std::invalid_argument("cannot open file \"" + arg + "\"");
  while (std::getline(f, line))
    if (!line.empty()) return parse_sg1(line);
  throw std::invalid_argument("no SG1 line in \"" + arg + "\"");
}

inline json residual_json(const IntPolynomial& p) {
  json a = json::array();
  for (const BigInt& c : p.coefficients()) a.push_back(c.str());
  return a;
}

inline json spectrum_json(const SignedGraph& g, const ExactSpectrum& s) {
  json j;
  j["n"] = g.order();
  j["mult_plus1"] = s.mult_plus1;
  j["mult_minus1"] = s.mult_minus1;
  j["residual"] = residual_json(s.residual);
  j["member"] = s.residual.degree() <= 2;
  if (s.residual.degree() == 2) {
    SurdPair sp = surd_from_quadratic(s.residual);
    j["exceptional"] = {{"p", sp.p.str()},
                        {"d", sp.d.str()},
                        {"q", sp.q.str()},
                        {"display", sp.str()},
                        {"approx", {round6(sp.approx_plus()), round6(sp.approx_minus())}}};
  } else if (s.residual.degree() == 1) {
    SurdPair sp{-s.residual.coeff(0), 0, 1};
    j["exceptional"] = {{"p", sp.p.str()},
                        {"d", "0"},
                        {"q", "1"},
                        {"display", sp.str()},
                        {"approx", {round6(sp.approx_plus())}}};
  } else {
    j["exceptional"] = nullptr;
  }
  return j;
}

inline json witness_json(const ClassificationOutcome& o) {
  switch (o.verdict) {
    case Verdict::FAMILY:
    case Verdict::COMPLETE_TYPE: {
      json j;
      j["instance"] = to_string(*o.instance);
      j["negated"] = o.negated_instance;
      j["perm"] = o.witness->perm;
      j["switching"] = o.witness->switching;
      return j;
    }
    case Verdict::UNSIGNED_TYPE: {
      json j;
      j[o.balanced ? "balanced" : "antibalanced"] = true;
      j["switching"] = o.unsigned_switching;
      return j;
    }
    case Verdict::DISCONNECTED_TYPE:
      return json{{"components", o.parts}};
    case Verdict::BIPARTITE_TYPE:
      return json{{"sides", o.parts}};
    default:
      return nullptr;
  }
}

inline json record_json(const CensusRecord& r) {
  json j;
  j["code"] = r.code;
  j["sg1"] = to_sg1(r.representative);
  j["n"] = r.n;
  j["mult_plus1"] = r.spectrum.mult_plus1;
  j["mult_minus1"] = r.spectrum.mult_minus1;
  j["residual"] = residual_json(r.spectrum.residual);
  j["verdict"] = verdict_name(r.outcome.verdict);
  j["witness"] = witness_json(r.outcome);
  return j;
}

inline int cmd_gen(const std::string& inst_text, bool allow_a5_k1, std::ostream& out,
                   std::ostream& err) {
  FamilyInstance inst = parse_instance(inst_text);
  SignedGraph g = generate(inst, allow_a5_k1);
  out << to_sg1(g) << "\n";
  err << to_string(inst) << ": order " << g.order() << ", " << g.edge_count()
      << " edges\n";
  return 0;
}

inline int cmd_spectrum(const SignedGraph& g, std::ostream& out, std::ostream& err) {
  ExactSpectrum s = exact_spectrum(g);
  out << spectrum_json(g, s).dump() << "\n";
  err << "order " << g.order() << ": (+1)^" << s.mult_plus1 << " (-1)^" << s.mult_minus1
      << " residual " << s.residual.str() << "\n";
  return 0;
}

inline int cmd_check(const SignedGraph& g, std::ostream& out, std::ostream& err) {
  ExactSpectrum s = exact_spectrum(g);
  bool member = s.residual.degree() <= 2;
  json j = spectrum_json(g, s);
  j["sg1"] = to_sg1(g);

  json viols = json::array();
  auto dv = deg1_checks(g);
  for (const auto& v : dv) {
    if (v.kind == Deg1Violation::Kind::degree_one)
      viols.push_back({{"kind", "degree_one"}, {"u", v.u}});
    else
      viols.push_back({{"kind", "close_columns"}, {"u", v.u}, {"v", v.v}});
  }
  j["deg1_violations"] = viols;

  GramReport gr = square_psd_rank_check(g);
  j["square"] = {{"psd", gr.psd},
                 {"rank", gr.rank},
                 {"inertia", {gr.inertia.n_pos, gr.inertia.n_zero, gr.inertia.n_neg}}};

  auto hit = scan(g);
  j["forbidden"] = hit ? json{{"item", hit->item_name}, {"vertices", hit->vertices}}
                       : json(nullptr);

  // Membership must cohere with the structure theory: no reports, no
  // forbidden subgraph, and the rank-2 psd shape when both exceptional
  // eigenvalues lie outside [-1,1].
  bool two_outside = s.residual.degree() == 2 && s.residual(BigInt(1)) < 0 &&
                     s.residual(BigInt(-1)) < 0;
  bool consistent = !member || (dv.empty() && !hit && (!two_outside || (gr.psd && gr.rank == 2)));
  j["consistent"] = consistent;
  out << j.dump() << "\n";
  err << (member ? "member" : "not a member") << (consistent ? "" : " (INCONSISTENT)")
      << "\n";
  return consistent ? 0 : 1;
}

inline int cmd_iso(const SignedGraph& a, const SignedGraph& b, std::ostream& out,
                   std::ostream& err) {
  auto w = switching_isomorphic(a, b);
  json j;
  j["isomorphic"] = w.has_value();
  if (w) {
    j["perm"] = w->perm;
    j["switching"] = w->switching;
  }
  out << j.dump() << "\n";
  err << (w ? "switching isomorphic\n" : "not switching isomorphic\n");
  return w ? 0 : 1;
}

inline int cmd_families_verify(int nmax, std::ostream& out, std::ostream& err) {
  auto insts = enumerate_instances(nmax);
  json fails = json::array();
  for (const auto& inst : insts) {
    auto r = verify_instance(inst);
    if (!r) fails.push_back(r.diff);
  }
  json j;
  j["nmax"] = nmax;
  j["instances"] = insts.size();
  j["failures"] = fails;
  j["ok"] = fails.empty();
  out << j.dump() << "\n";
  err << insts.size() << " instances up to order " << nmax << ", " << fails.size()
      << " failures\n";
  return fails.empty() ? 0 : 1;
}

inline int cmd_census(int n, const std::string& out_path, int jobs, bool connected_only,
                      int min_degree, bool prune, std::ostream& out, std::ostream& err) {
  int cap = 7;
  if (const char* env = std::getenv("SIGNED_SPECTRA_MAXN")) cap = std::atoi(env);
  if (n > cap)
    throw std::invalid_argument("census: n = " + std::to_string(n) +
                                " exceeds the cap " + std::to_string(cap) +
                                " (set SIGNED_SPECTRA_MAXN to raise it)");
  CensusOptions opts;
  opts.connected_only = connected_only;
  opts.min_degree = min_degree;
  opts.forbidden_prune = prune;
  opts.max_n = cap;
  std::ofstream records;
  if (!out_path.empty()) {
    records.open(out_path);
    if (!records) throw std::invalid_argument("cannot open \"" + out_path + "\"");
  }
  auto report = run_census(n, jobs, opts, [&](const CensusRecord& r) {
    if (records.is_open()) records << record_json(r).dump() << "\n";
  });
  json j;
  j["nmax"] = report.nmax;
  j["ok"] = report.ok;
  j["orders"] = json::array();
  for (const auto& o : report.orders) {
    json stats;
    stats["n"] = o.n;
    stats["classes"] = o.classes;
    stats["members"] = o.members;
    stats["verdicts"] = o.by_verdict;
    j["orders"].push_back(stats);
  }
  j["unexplained"] = report.unexplained_sg1;
  out << j.dump() << "\n";
  for (const auto& o : report.orders)
    err << "n=" << o.n << ": " << o.classes << " classes, " << o.members << " members\n";
  err << (report.ok ? "census complete, zero unexplained\n"
                    : "census found UNEXPLAINED records\n");
  return report.ok ? 0 : 1;
}

inline int cmd_forbid_verify(const std::string& catalog_path, std::ostream& out,
                             std::ostream& err) {
  std::vector<ForbiddenItem> cat;
  if (catalog_path.empty()) {
    cat = catalog();
  } else {
    std::ifstream f(catalog_path);
    if (!f) throw std::invalid_argument("cannot open \"" + catalog_path + "\"");
    cat = parse_catalog(f);
  }
  json items = json::array();
  bool ok = true;
  for (const auto& item : cat) {
    bool good = verify_forbidden(item);
    ok = ok && good;
    const char* kind = item.kind == ForbiddenKind::signed_item ? "SIGNED"
                       : item.kind == ForbiddenKind::all_signings ? "ALLSIGN"
                       : item.kind == ForbiddenKind::path_rule ? "PATH_RULE"
                                                               : "CYCLE_RULE";
    items.push_back({{"name", item.name}, {"kind", kind}, {"ok", good}});
  }
  json j;
  j["items"] = items;
  j["ok"] = ok;
  out << j.dump() << "\n";
  err << cat.size() << " catalog items, " << (ok ? "all" : "NOT all")
      << " break interlacing\n";
  return ok ? 0 : 1;
}

inline int cmd_quotient(const SignedGraph& g, const std::string& partition_text,
                        std::ostream& out, std::ostream& err) {
  EquitablePartition p = parse_partition(partition_text);
  Matrix<BigInt> q;
  try {
    q = verify_equitable(g, p);
  } catch (const std::runtime_error& e) {
    err << e.what() << "\n";
    return 1;
  }
  Pm1Split s = quotient_spectrum(q);
  json j;
  j["partition"] = format_partition(p);
  json rows = json::array();
  for (int i = 0; i < q.rows(); ++i) {
    json row = json::array();
    for (int k = 0; k < q.cols(); ++k) row.push_back(q(i, k).str());
    rows.push_back(row);
  }
  j["quotient"] = rows;
  j["mult_plus1"] = s.mult_plus1;
  j["mult_minus1"] = s.mult_minus1;
  j["residual"] = residual_json(s.residual);
  j["roots_in_spectrum"] =
      roots_subset(char_poly(q), char_poly(adjacency_matrix<BigInt>(g)));
  out << j.dump() << "\n";
  err << "equitable, quotient order " << q.rows() << "\n";
  return 0;
}

/// Argument-vector entry point (argv without the program name).
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"exact spectral toolkit for signed graphs with at most two "
               "eigenvalues besides +-1"};
  app.require_subcommand(1);

  std::string gen_inst;
  bool gen_a5k1 = false;
  auto* gen = app.add_subcommand("gen", "emit a family instance as an SG1 line");
  gen->add_option("instance", gen_inst, "e.g. A12(6,3,3,6) or TJ(2,2)")->required();
  gen->add_flag("--allow-a5-k1", gen_a5k1, "accept the unsigned A5 case k = 1");

  std::string spec_src;
  auto* spec = app.add_subcommand("spectrum", "exact spectrum of an SG1 graph");
  spec->add_option("graph", spec_src, "SG1 line, file, or - for stdin")->required();

  std::string check_src;
  auto* check = app.add_subcommand(
      "check", "membership, degree-1/column checks, psd rank, forbidden scan");
  check->add_option("graph", check_src, "SG1 line, file, or - for stdin")->required();

  std::string iso_a, iso_b;
  auto* iso = app.add_subcommand("iso", "decide switching isomorphism");
  iso->add_option("a", iso_a, "first graph")->required();
  iso->add_option("b", iso_b, "second graph")->required();

  auto* families = app.add_subcommand("families", "family-level verification");
  int fam_nmax = 24;
  auto* fam_verify =
      families->add_subcommand("verify", "verify every claimed spectrum exactly");
  fam_verify->add_option("--nmax", fam_nmax, "largest instance order (default 24)");
  families->require_subcommand(1);

  int census_n = 7, census_jobs = 1, census_mindeg = 0;
  std::string census_out;
  bool census_conn = false, census_prune = false;
  auto* census = app.add_subcommand("census", "enumerate switching classes and classify");
  census->add_option("--n", census_n, "largest order (default 7)");
  census->add_option("--out", census_out, "write JSONL records here");
  census->add_option("--jobs", census_jobs, "worker threads (default 1)");
  census->add_flag("--connected", census_conn, "connected graphs only");
  census->add_option("--min-degree", census_mindeg, "skip underlying graphs below this");
  census->add_flag("--prune-forbidden", census_prune,
                   "drop classes hitting the forbidden scan");

  auto* forbid = app.add_subcommand("forbid", "forbidden-subgraph catalog");
  std::string forbid_catalog;
  auto* forbid_verify =
      forbid->add_subcommand("verify", "check every item breaks interlacing");
  forbid_verify->add_option("--catalog", forbid_catalog,
                            "SIGNED/ALLSIGN catalog file (default: built-in)");
  forbid->require_subcommand(1);

  std::string quot_src, quot_partition;
  auto* quot = app.add_subcommand("quotient", "equitable partition quotient");
  quot->add_option("graph", quot_src, "SG1 line, file, or - for stdin")->required();
  quot->add_option("--partition", quot_partition, "blocks, e.g. [0-3|4-7]")->required();

  std::vector<std::string> argv_vec = {"signed-spectra"};
  argv_vec.insert(argv_vec.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_vec) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*gen) return cmd_gen(gen_inst, gen_a5k1, out, err);
    if (*spec) return cmd_spectrum(read_graph_arg(spec_src, in), out, err);
    if (*check) return cmd_check(read_graph_arg(check_src, in), out, err);
    if (*iso)
      return cmd_iso(read_graph_arg(iso_a, in), read_graph_arg(iso_b, in), out, err);
    if (*fam_verify) return cmd_families_verify(fam_nmax, out, err);
    if (*census)
      return cmd_census(census_n, census_out, census_jobs, census_conn, census_mindeg,
                        census_prune, out, err);
    if (*forbid_verify) return cmd_forbid_verify(forbid_catalog, out, err);
    if (*quot) return cmd_quotient(read_graph_arg(quot_src, in), quot_partition, out, err);
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 2;
  }
  err << "no command\n";
  return 2;
}

}  // namespace signed_spectra::cli
