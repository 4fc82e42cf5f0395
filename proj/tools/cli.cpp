#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

#include "crystal/continuous.hpp"
#include "crystal/demazure.hpp"
#include "crystal/error.hpp"
#include "crystal/identity.hpp"
#include "crystal/json_io.hpp"
#include "crystal/ls_path.hpp"
#include "crystal/matrix.hpp"
#include "crystal/verify.hpp"

namespace crystal_cli {

namespace {

using namespace crystal;
using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kUsage = 2;

struct Common {
  std::string format = "table";
  std::string out_file;
};

// Output goes to --out when given, otherwise to the stream the caller
// provided; assembled in one buffer so a run is all-or-nothing.
int emit(const Common& common, std::ostream& out, const std::string& text) {
  if (!common.out_file.empty()) {
    std::ofstream f(common.out_file);
    if (!f) {
      fail(ErrorKind::parse_error, "cannot open --out file '" + common.out_file + "'");
    }
    f << text;
    return kOk;
  }
  out << text;
  return kOk;
}

NNMatrix parse_matrix_flag(const std::string& s) {
  if (!s.empty() && s.front() == '[') return nn_matrix_from_json(s);
  return NNMatrix::parse(s);
}

RatMatrix parse_rat_matrix_flag(const std::string& s) {
  if (!s.empty() && s.front() == '[') return rat_matrix_from_json(s);
  return RatMatrix::parse(s);
}

DemKind parse_kind(const std::string& s) {
  if (s == "demazure") return DemKind::demazure;
  if (s == "atom") return DemKind::atom;
  if (s == "opposite") return DemKind::opposite;
  if (s == "opposite_atom") return DemKind::opposite_atom;
  fail(ErrorKind::parse_error, "unknown --kind '" + s + "'");
}

DemazureSet build_set(const Partition& lambda, int n, const Permutation& w, DemKind kind) {
  switch (kind) {
    case DemKind::demazure: return demazure_crystal(lambda, n, w);
    case DemKind::opposite: return opposite_demazure_crystal(lambda, n, w);
    default: return atom(lambda, n, w, kind);
  }
}

std::string suites_table(const std::vector<SuiteResult>& suites) {
  std::ostringstream os;
  size_t failures = 0;
  for (const auto& s : suites) {
    os << (s.passed ? "PASS" : "FAIL") << "  " << s.name << "  (" << s.checks << " checks)";
    if (!s.passed) os << "  " << s.detail;
    os << "\n";
    if (!s.passed) ++failures;
  }
  os << (failures ? "FAILED" : "ok") << " (" << suites.size() << " suites)\n";
  return os.str();
}

Json suites_json(const std::vector<SuiteResult>& suites) {
  Json arr = Json::array();
  for (const auto& s : suites)
    arr.push_back(Json{{"suite", s.name},
                       {"passed", s.passed},
                       {"checks", s.checks},
                       {"detail", s.detail}});
  return arr;
}

bool all_passed(const std::vector<SuiteResult>& suites) {
  for (const auto& s : suites)
    if (!s.passed) return false;
  return true;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact crystal combinatorics and non-symmetric Cauchy identity checks"};
  app.require_subcommand(1);

  Common common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  app.add_option("--out", common.out_file, "Write output to a file instead of stdout");

  int n = 2;
  std::string lambda_str, w_str = "e", kind_str = "demazure", matrix_str;
  std::string variant_str = "lower";
  int degree = 4;
  std::uint64_t seed = 1;
  int trials = 200, max_den = 4, max_n = 2;
  std::string vars_str = "x";

  auto* cmd_enumerate = app.add_subcommand("enumerate", "List B(lambda) or a Demazure subset");
  cmd_enumerate->add_option("--n", n, "Rank")->required();
  cmd_enumerate->add_option("--lambda", lambda_str, "Partition, e.g. 2,1,0")->required();
  cmd_enumerate->add_option("--w", w_str, "Permutation (one-line or s-word)");
  cmd_enumerate->add_option("--kind", kind_str, "demazure|atom|opposite|opposite_atom");

  auto* cmd_character = app.add_subcommand("character", "Demazure character or atom character");
  cmd_character->add_option("--n", n)->required();
  cmd_character->add_option("--lambda", lambda_str)->required();
  cmd_character->add_option("--w", w_str);
  cmd_character->add_option("--kind", kind_str);
  cmd_character->add_option("--vars", vars_str, "x|y variable block");

  auto* cmd_rsk = app.add_subcommand("rsk", "RSK pair of a nonnegative integer matrix");
  cmd_rsk->add_option("--n", n);
  cmd_rsk->add_option("--matrix", matrix_str, "r1c1,r1c2;r2c1,r2c2 or JSON")->required();

  auto* cmd_classify = app.add_subcommand("classify", "Classify a lower-triangular matrix");
  cmd_classify->add_option("--n", n);
  cmd_classify->add_option("--matrix", matrix_str)->required();

  auto* cmd_path = app.add_subcommand("path", "List LS paths of class lambda");
  cmd_path->add_option("--n", n)->required();
  cmd_path->add_option("--lambda", lambda_str)->required();
  cmd_path->add_option("--w", w_str);
  cmd_path->add_option("--kind", kind_str);
  bool cell_filter = false;
  cmd_path->add_flag("--cell", cell_filter, "Filter by the (opposite) Demazure cell of --w");

  auto* cmd_cauchy = app.add_subcommand("verify-cauchy", "Kernel minus character expansion");
  cmd_cauchy->add_option("--n", n)->required();
  cmd_cauchy->add_option("--degree", degree, "Total degree bound")->required();
  cmd_cauchy->add_option("--variant", variant_str,
                         "lower|lower-khat-k|lower-k-khat|staircase");

  auto* cmd_littlewood = app.add_subcommand("verify-littlewood", "y:=x specialization vs sum of s_{2 lambda}");
  cmd_littlewood->add_option("--n", n)->required();
  cmd_littlewood->add_option("--degree", degree)->required();

  auto* cmd_cont = app.add_subcommand("continuous-check", "Randomized continuous-crystal suites");
  cmd_cont->add_option("--n", max_n, "Max rank");
  cmd_cont->add_option("--seed", seed);
  cmd_cont->add_option("--trials", trials);
  cmd_cont->add_option("--max-denominator", max_den);
  cmd_cont->add_option("--matrix", matrix_str,
                       "Classify one rational lower-triangular matrix instead");

  auto* cmd_all = app.add_subcommand("verify-all", "Every suite below the given bounds");
  cmd_all->add_option("--max-n", max_n)->required();
  cmd_all->add_option("--max-degree", degree)->required();
  cmd_all->add_option("--seed", seed);

  for (CLI::App* sc : app.get_subcommands([](CLI::App*) { return true; }))
    sc->fallthrough();  // let --format/--out appear after the subcommand

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (cmd_enumerate->parsed() || cmd_character->parsed() || cmd_path->parsed()) {
      const Partition lambda = Partition::parse(lambda_str, n);
      const Permutation w = Permutation::parse(w_str, n);
      const DemKind kind = parse_kind(kind_str);

      if (cmd_enumerate->parsed()) {
        // Without --w list all of B(lambda); with it, the requested subset.
        DemazureSet set = cmd_enumerate->count("--w") || cmd_enumerate->count("--kind")
                              ? build_set(lambda, n, w, kind)
                              : DemazureSet{lambda, n, Permutation::longest(n),
                                            DemKind::demazure, enumerate_crystal(lambda, n)};
        if (common.format == "json") {
          Json arr = Json::array();
          for (const auto& t : set.elements) arr.push_back(Json::parse(tableau_to_json(t)));
          return emit(common, out,
                      Json{{"lambda", Json(lambda.parts())},
                           {"n", n},
                           {"w", w.to_string()},
                           {"kind", kind_str},
                           {"count", set.elements.size()},
                           {"elements", arr}}
                              .dump() +
                          "\n");
        }
        std::ostringstream os;
        for (const auto& t : set.elements) os << t.to_string() << "\n";
        os << set.elements.size() << " elements\n";
        return emit(common, out, os.str());
      }

      if (cmd_character->parsed()) {
        const auto set = build_set(lambda, n, w, kind);
        const SparsePoly ch = character(set, vars_str == "y" ? VarBlock::y : VarBlock::x);
        if (common.format == "json")
          return emit(common, out,
                      Json{{"lambda", Json(lambda.parts())},
                           {"w", w.to_string()},
                           {"kind", kind_str},
                           {"character", Json::parse(poly_to_json(ch))}}
                              .dump() +
                          "\n");
        return emit(common, out, ch.to_string() + "\n");
      }

      // path
      std::vector<LSPath> paths = enumerate_ls_paths(lambda, n);
      if (cell_filter) {
        const Weight wl = act(w, lambda.weight());
        std::vector<LSPath> kept;
        for (const auto& p : paths) {
          const bool in_cell =
              kind == DemKind::demazure    ? order_geq(wl, p.iota(), lambda)
              : kind == DemKind::atom      ? p.iota() == wl
              : kind == DemKind::opposite  ? order_geq(p.tau(), wl, lambda)
                                           : p.tau() == wl;
          if (in_cell) kept.push_back(p);
        }
        paths = std::move(kept);
      }
      if (common.format == "json") {
        Json arr = Json::array();
        for (const auto& p : paths) {
          Json j = Json::parse(ls_path_to_json(p));
          j["iota"] = Json(p.iota().coords());
          j["tau"] = Json(p.tau().coords());
          arr.push_back(std::move(j));
        }
        return emit(common, out, arr.dump() + "\n");
      }
      std::ostringstream os;
      for (const auto& p : paths) os << p.to_string() << "\n";
      os << paths.size() << " paths\n";
      return emit(common, out, os.str());
    }

    if (cmd_rsk->parsed() || cmd_classify->parsed()) {
      // Machine-oriented commands default to JSON.
      if (!app.count("--format")) common.format = "json";
      const NNMatrix m = parse_matrix_flag(matrix_str);
      if (cmd_rsk->parsed()) {
        const auto [p, q] = rsk(m);
        if (common.format == "json")
          return emit(common, out,
                      Json{{"lambda", Json(p.shape().parts())},
                           {"P", Json::parse(tableau_to_json(p))},
                           {"Q", Json::parse(tableau_to_json(q))}}
                              .dump() +
                          "\n");
        return emit(common, out,
                    "P = " + p.to_string() + "\nQ = " + q.to_string() + "\n");
      }
      const auto cls = classify_low(m);
      if (common.format == "json")
        return emit(common, out, classification_to_json(cls) + "\n");
      return emit(common, out, "lambda = " + cls.lambda.to_string() + "\nw = " +
                                   cls.w.to_string() + "\nP = " + cls.p.to_string() +
                                   "\nQ = " + cls.q.to_string() + "\n");
    }

    if (cmd_cauchy->parsed()) {
      std::vector<Variant> variants;
      if (variant_str == "lower") {
        variants = {Variant::lower_khat_k, Variant::lower_k_khat};
      } else {
        variants = {parse_variant(variant_str)};
      }
      std::vector<IdentityReport> reports;
      for (Variant v : variants) reports.push_back(verify_identity(n, degree, v));
      bool ok = true;
      for (const auto& r : reports) ok = ok && r.ok;
      std::string text;
      if (common.format == "json") {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(Json::parse(identity_report_to_json(r)));
        text = arr.dump() + "\n";
      } else {
        std::ostringstream os;
        for (const auto& r : reports) {
          os << variant_name(r.variant) << " n=" << r.n << " D=" << r.degree_bound << ": "
             << (r.ok ? "ok" : "difference has " + std::to_string(r.difference.term_count()) +
                                   " terms")
             << "\n";
          os << "  degree  lhs  rhs  diff\n";
          for (const auto& dc : r.per_degree)
            os << "  " << dc.degree << "  " << dc.lhs_terms << "  " << dc.rhs_terms << "  "
               << dc.diff_terms << "\n";
        }
        text = os.str();
      }
      const int rc = emit(common, out, text);
      return rc != kOk ? rc : (ok ? kOk : kVerifyFail);
    }

    if (cmd_littlewood->parsed()) {
      const auto r = verify_identity(n, degree, Variant::littlewood);
      std::string text = common.format == "json"
                             ? identity_report_to_json(r) + "\n"
                             : std::string(r.ok ? "ok" : "difference has " +
                                                             std::to_string(
                                                                 r.difference.term_count()) +
                                                             " terms") +
                                   "\n";
      const int rc = emit(common, out, text);
      return rc != kOk ? rc : (r.ok ? kOk : kVerifyFail);
    }

    if (cmd_cont->parsed()) {
      if (!matrix_str.empty()) {
        const auto report = verify_main2(parse_rat_matrix_flag(matrix_str));
        const int rc = emit(common, out, main2_report_to_json(report) + "\n");
        return rc != kOk ? rc : (report.tau_geq_iota ? kOk : kVerifyFail);
      }
      const auto suite = suite_continuous(max_n, seed, trials, trials, trials, max_den);
      const std::vector<SuiteResult> suites{suite};
      const std::string text = common.format == "json" ? suites_json(suites).dump() + "\n"
                                                       : suites_table(suites);
      const int rc = emit(common, out, text);
      return rc != kOk ? rc : (all_passed(suites) ? kOk : kVerifyFail);
    }

    if (cmd_all->parsed()) {
      const auto suites = verify_all(max_n, degree, seed);
      const std::string text = common.format == "json" ? suites_json(suites).dump() + "\n"
                                                       : suites_table(suites);
      const int rc = emit(common, out, text);
      return rc != kOk ? rc : (all_passed(suites) ? kOk : kVerifyFail);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kVerifyFail;
  }
  err << "error: no subcommand\n";
  return kUsage;
}

}  // namespace crystal_cli
