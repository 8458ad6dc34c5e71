#include "ihcalc/cli_app.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <unistd.h>

#include "CLI11.hpp"

#include "ihcalc/catalog.hpp"
#include "ihcalc/delpezzo.hpp"
#include "ihcalc/kirwan.hpp"
#include "ihcalc/record.hpp"
#include "ihcalc/strat.hpp"
#include "ihcalc/verify.hpp"

namespace ihcalc {

namespace {

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw CLI::ValidationError("--format", "expected text, json or csv");
}

void emit(const std::vector<OutputRecord>& records, Format format, std::ostream& out) {
  switch (format) {
    case Format::Text:
      for (const auto& r : records) out << r.to_text() << "\n";
      break;
    case Format::Json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : records) arr.push_back(r.to_json());
      out << arr.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      out << OutputRecord::csv_header() << "\n";
      for (const auto& r : records) out << r.to_csv_row() << "\n";
      break;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CalcError("InvalidArgument", "cannot open file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool color_enabled() {
  return std::getenv("NO_COLOR") == nullptr && isatty(fileno(stdout)) == 1;
}

std::string status_tag(verify::Status s, bool color) {
  const char* name = s == verify::Status::Pass ? "PASS"
                     : s == verify::Status::Warn ? "WARN"
                                                 : "FAIL";
  if (!color) return std::string("[") + name + "]";
  const char* code = s == verify::Status::Pass ? "\033[32m"
                     : s == verify::Status::Warn ? "\033[33m"
                                                 : "\033[31m";
  return std::string("[") + code + name + "\033[0m]";
}

struct CommandState {
  Format format = Format::Text;
  std::vector<OutputRecord> records;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact calculator for intersection Poincare polynomials of "
               "one-dimensional sheaf moduli"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  app.add_option("--format", format_name, "output format: text, json or csv")
      ->capture_default_str();

  // space
  auto* space_cmd = app.add_subcommand("space", "evaluate a catalog space expression");
  std::string expr_text;
  space_cmd->add_option("--expr", expr_text, "expression, e.g. sym2(P(1))")->required();
  std::string kind = "p";
  space_cmd->add_option("--kind", kind, "polynomial kind: p, e or ie")
      ->check(CLI::IsMember({"p", "e", "ie"}))
      ->capture_default_str();

  // mn / kn / sym2sl2
  auto* mn_cmd = app.add_subcommand("mn", "intersection polynomial of the sheaf space M_n");
  long long mn_n = 2;
  std::string mn_method = "both";
  mn_cmd->add_option("--n", mn_n, "ambient projective dimension")->required();
  mn_cmd->add_option("--method", mn_method, "closed, pipeline or both")
      ->check(CLI::IsMember({"closed", "pipeline", "both"}))
      ->capture_default_str();

  auto* kn_cmd = app.add_subcommand("kn", "Poincare polynomial of the stable-maps space K_n");
  long long kn_n = 3;
  kn_cmd->add_option("--n", kn_n, "ambient projective dimension")->required();

  auto* sym_cmd =
      app.add_subcommand("sym2sl2", "intersection polynomial of the SL2 quotient space");
  long long sym_n = 2;
  sym_cmd->add_option("--n", sym_n, "ambient projective dimension")->required();

  // cones
  auto* cones_cmd =
      app.add_subcommand("cones", "solve cone polynomials over a stratification");
  std::string cones_file;
  bool relation = false;
  long long relation_n = 3;
  cones_cmd->add_option("--file", cones_file, "stratification JSON document");
  cones_cmd->add_flag("--relation", relation, "print both sides of the open-cone relation");
  cones_cmd->add_option("--n", relation_n, "parameter for --relation");

  // delpezzo
  auto* dp_cmd = app.add_subcommand("delpezzo", "sheaf moduli polynomials on the surfaces");
  std::string surface;
  std::string walls_file;
  bool euler_table_flag = false;
  dp_cmd->add_option("--surface", surface, "f0, f1 or p2")
      ->check(CLI::IsMember({"f0", "f1", "p2"}));
  dp_cmd->add_option("--walls", walls_file, "wall data JSON override");
  dp_cmd->add_flag("--table", euler_table_flag, "print the Euler-number table");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the full cross-check suite");
  long long max_n = 12;
  bool strict = false;
  verify_cmd->add_option("--max-n", max_n, "upper bound for the n sweeps")
      ->capture_default_str();
  verify_cmd->add_flag("--strict", strict, "documented discrepancies become failures");

  std::vector<std::string> argv_copy = args;
  std::vector<char*> argv;
  argv.reserve(argv_copy.size() + 1);
  static std::string prog = "ihcalc";
  argv.push_back(prog.data());
  for (auto& a : argv_copy) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help() << "\n";
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  Format format;
  try {
    format = parse_format(format_name);
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    std::vector<OutputRecord> records;

    if (*space_cmd) {
      catalog::SpaceExpr e;
      try {
        e = catalog::parse(expr_text);
      } catch (const CalcError& parse_err) {
        if (parse_err.kind() == "ParseError") {
          err << "usage error: " << parse_err.what() << "\n";
          return 2;
        }
        throw;
      }
      if (kind == "p") {
        records.push_back(OutputRecord::from_tpoly("p(" + expr_text + ")", catalog::p_of(e)));
      } else if (kind == "e") {
        records.push_back(OutputRecord::from_bipoly("e(" + expr_text + ")", catalog::e_of(e)));
      } else {
        records.push_back(OutputRecord::from_bipoly("ie(" + expr_text + ")", catalog::ie_of(e)));
      }
    } else if (*mn_cmd) {
      if (mn_method == "closed") {
        records.push_back(OutputRecord::from_tpoly("mn.closed(n=" + std::to_string(mn_n) + ")",
                                                   kirwan::ip_mn_closed(mn_n)));
      } else if (mn_method == "pipeline") {
        auto report = kirwan::ip_mn_pipeline(mn_n);
        auto rec = OutputRecord::from_tpoly("mn.pipeline(n=" + std::to_string(mn_n) + ")",
                                            report.ip_pipeline);
        rec.extras["agree"] = report.agree;
        records.push_back(std::move(rec));
      } else {
        auto report = kirwan::ip_mn_pipeline(mn_n);
        auto rec = OutputRecord::from_tpoly("mn(n=" + std::to_string(mn_n) + ")",
                                            report.ip_closed);
        rec.extras["agree"] = report.agree;
        if (!report.agree)
          rec.extras["pipeline_coefficients"] =
              OutputRecord::from_tpoly("", report.ip_pipeline).coefficients;
        records.push_back(std::move(rec));
      }
    } else if (*kn_cmd) {
      auto rec = OutputRecord::from_tpoly("kn(n=" + std::to_string(kn_n) + ")",
                                          kirwan::p_kn_closed(kn_n));
      if (kn_n >= 3) rec.extras["agree"] = kirwan::p_kn_pipeline(kn_n) == kirwan::p_kn_closed(kn_n);
      records.push_back(std::move(rec));
    } else if (*sym_cmd) {
      auto rec = OutputRecord::from_tpoly("sym2sl2(n=" + std::to_string(sym_n) + ")",
                                          kirwan::ip_sym2sl2_closed(sym_n));
      rec.extras["agree"] =
          kirwan::ip_sym2sl2_pipeline(sym_n) == kirwan::ip_sym2sl2_closed(sym_n);
      records.push_back(std::move(rec));
    } else if (*cones_cmd) {
      if (relation) {
        auto delta = strat::ConeValue::unknown("delta");
        auto s = strat::ConeValue::unknown("s");
        strat::LinPoly lhs = kirwan::univrelation_lhs(relation_n, delta, s);
        records.push_back(OutputRecord::from_tpoly("relation.lhs_coeff_delta",
                                                   lhs.unknown_coeffs().at("delta")));
        records.push_back(
            OutputRecord::from_tpoly("relation.lhs_coeff_s", lhs.unknown_coeffs().at("s")));
        records.push_back(OutputRecord::from_tpoly("relation.rhs",
                                                   kirwan::univrelation_rhs(relation_n)));
      } else if (!cones_file.empty()) {
        strat::StratDocument doc = strat::parse_stratification_json(read_file(cones_file));
        if (!doc.e_total)
          throw CalcError("InvalidArgument", "stratification document needs e_total to solve");
        const TPoly& ie_total = doc.stratification.top().ie_closure;
        strat::LinPoly equation = strat::e_from_ie(doc.stratification, ie_total);
        auto solution = strat::solve_cones({{equation, *doc.e_total}});
        for (const auto& [id, poly] : solution)
          records.push_back(OutputRecord::from_tpoly("cone." + id, poly));
        if (solution.empty()) {
          records.push_back(OutputRecord::from_tpoly("e_from_ie", equation.constant_part()));
        }
      } else {
        err << "usage error: cones needs --file or --relation\n";
        return 2;
      }
    } else if (*dp_cmd) {
      if (euler_table_flag) {
        if (format == Format::Text) {
          for (const auto& entry : delpezzo::euler_table()) {
            out << entry.surface << ": computed " << entry.computed.to_string()
                << ", table " << entry.printed << (entry.match ? "" : "  <- MISMATCH") << "\n";
          }
          return 0;
        }
        for (const auto& entry : delpezzo::euler_table()) {
          OutputRecord rec;
          rec.name = "euler." + entry.surface;
          rec.variable = "t";
          rec.degree = -1;
          rec.euler = entry.computed.to_int64();
          rec.extras["printed"] = entry.printed;
          rec.extras["match"] = entry.match;
          records.push_back(std::move(rec));
        }
      } else if (surface.empty()) {
        err << "usage error: delpezzo needs --surface or --table\n";
        return 2;
      } else if (surface == "f0") {
        records.push_back(OutputRecord::from_tpoly("delpezzo.f0.ip", delpezzo::ip_m_f0()));
      } else if (surface == "f1") {
        auto walls =
            walls_file.empty() ? delpezzo::f1_wall_table()
                               : delpezzo::parse_walls_json(read_file(walls_file));
        records.push_back(
            OutputRecord::from_tpoly("delpezzo.f1.pairs_plus", delpezzo::p_m_plus_f1(walls)));
        records.push_back(OutputRecord::from_tpoly("delpezzo.f1.p", delpezzo::p_m_f1(walls)));
        records.push_back(OutputRecord::from_tpoly("delpezzo.f1.ip", delpezzo::ip_m_f1(walls)));
      } else {
        auto walls =
            walls_file.empty() ? delpezzo::p2_wall_table()
                               : delpezzo::parse_walls_json(read_file(walls_file));
        records.push_back(OutputRecord::from_tpoly("delpezzo.p2.ip", delpezzo::ip_m_p2(walls)));
      }
    } else if (*verify_cmd) {
      verify::Options options;
      options.max_n = max_n;
      options.strict = strict;
      auto checks = verify::run_all(options);
      if (format == Format::Json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : checks) {
          nlohmann::json j;
          j["id"] = c.id;
          j["description"] = c.description;
          j["status"] = c.status == verify::Status::Pass   ? "pass"
                        : c.status == verify::Status::Warn ? "warn"
                                                           : "fail";
          if (!c.detail.empty()) j["detail"] = c.detail;
          arr.push_back(j);
        }
        out << arr.dump(2) << "\n";
      } else {
        bool color = color_enabled();
        std::size_t passes = 0, warns = 0, fails = 0;
        for (const auto& c : checks) {
          out << status_tag(c.status, color) << " " << c.id << " — " << c.description;
          if (c.status != verify::Status::Pass && !c.detail.empty())
            out << "\n       " << c.detail;
          out << "\n";
          if (c.status == verify::Status::Pass) ++passes;
          if (c.status == verify::Status::Warn) ++warns;
          if (c.status == verify::Status::Fail) ++fails;
        }
        out << passes << " passed, " << warns << " warned, " << fails << " failed\n";
      }
      return verify::exit_code(checks);
    }

    emit(records, format, out);
    return 0;
  } catch (const CalcError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace ihcalc
