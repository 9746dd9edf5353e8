// Command-line front end: run named verification suites, expand expressions
// to canonical normal form, and emit the pairwise commutation tables.
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "theta/catalog.hpp"
#include "theta/check.hpp"
#include "theta/expr.hpp"
#include "theta/report.hpp"

namespace {

using namespace theta;

const Presentation* algebra_by_name(const std::string& name) {
  const Catalog& cat = catalog();
  if (name == "c4") return &cat.c4;
  if (name == "forms") return &cat.forms;
  if (name == "s4") return &cat.s4;
  if (name == "sl2h") return &cat.sl2h;
  return nullptr;
}

// Table spelling: conjugate letters carry a trailing '*' instead of the
// engine-internal prime.
std::string table_letter(const std::string& name) {
  std::string s = name;
  for (char& c : s)
    if (c == '\'') c = '*';
  return s;
}

std::string format_complex(const std::complex<double>& z) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}

int write_output(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::fputs(text.c_str(), stdout);
    return 0;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) {
    std::fprintf(stderr, "cannot open output file: %s\n", out.c_str());
    return 2;
  }
  f << text;
  return f.good() ? 0 : 2;
}

int cmd_verify(const std::string& suite, const std::string& format,
               const std::string& out, int parallelism, bool stretch) {
  if (!Registry::known_suite(suite)) {
    std::fprintf(stderr, "unknown suite: %s\n", suite.c_str());
    std::string names;
    for (const std::string& n : Registry::suite_names()) names += " " + n;
    std::fprintf(stderr, "known suites:%s\n", names.c_str());
    return 2;
  }
  const auto results = registry().run(suite, parallelism, stretch);
  const std::string text = format == "json" ? report_json(suite, results)
                                            : report_text(suite, results);
  const int io = write_output(out, text);
  if (io != 0) return io;
  return report_exit_code(results);
}

int cmd_expand(const std::string& algebra, const std::string& expr,
               bool have_theta, double theta) {
  const Presentation* P = algebra_by_name(algebra);
  if (P == nullptr) {
    std::fprintf(stderr, "unknown algebra: %s (known: c4, forms, s4, sl2h)\n",
                 algebra.c_str());
    return 2;
  }
  Poly f = Poly::zero(*P);
  try {
    f = parse_poly(*P, expr);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return 2;
  }
  std::printf("%s\n", poly_str(f).c_str());
  if (have_theta) {
    for (const auto& [m, c] : f.terms())
      std::printf("  %s : %s\n", monomial_str(*P, m).c_str(),
                  format_complex(c.eval(theta)).c_str());
  }
  return 0;
}

int cmd_table(const std::string& algebra, const std::string& format,
              const std::string& out) {
  const Presentation* P = algebra_by_name(algebra);
  if (P == nullptr) {
    std::fprintf(stderr, "unknown algebra: %s (known: c4, forms, s4, sl2h)\n",
                 algebra.c_str());
    return 2;
  }
  const char sep = format == "tsv" ? '\t' : ' ';
  std::ostringstream os;
  for (int i = 0; i < P->size(); ++i)
    for (int j = i + 1; j < P->size(); ++j) {
      PhaseCoefficient swap = PhaseCoefficient::mu(P->lam[i][j]);
      if (P->letters[i].parity == 1 && P->letters[j].parity == 1) swap = -swap;
      os << table_letter(P->letters[i].name) << sep
         << table_letter(P->letters[j].name) << sep << swap.str() << "\n";
    }
  return write_output(out, os.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "theta-verify: exact symbolic verification of the deformed quaternionic "
      "algebras, their quantum-group structure, and the instanton family"};
  app.require_subcommand(1);

  std::string fixtures_dir;
  app.add_option("--fixtures-dir", fixtures_dir,
                 "directory holding the transcription fixtures");
  int completion = 0;
  app.add_option("--completion-limit", completion,
                 "cap on new rules a rewrite completion may add");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  std::string vformat = "text";
  std::string vout;
  int parallelism = 4;
  bool stretch = false;
  verify->add_option("--suite", suite, "suite name (default: all)");
  verify->add_option("--format", vformat, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", vout, "write the report to a file");
  verify->add_option("--parallelism", parallelism, "worker threads")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--stretch", stretch, "include long-running checks");

  auto* expand = app.add_subcommand(
      "expand", "print the canonical normal form of an expression");
  std::string ealgebra;
  std::string eexpr;
  double theta = 0.0;
  expand->add_option("--algebra", ealgebra, "c4, forms, s4, or sl2h")
      ->required();
  expand->add_option("expr", eexpr, "expression to expand")->required();
  auto* theta_opt = expand->add_option(
      "--theta", theta,
      "also print numeric coefficients at mu = exp(i pi theta)");

  auto* table = app.add_subcommand(
      "table", "emit the pairwise commutation-phase table of an algebra");
  std::string talgebra;
  std::string tformat = "text";
  std::string tout;
  table->add_option("--algebra", talgebra, "c4, forms, s4, or sl2h")
      ->required();
  table->add_option("--format", tformat, "text or tsv")
      ->check(CLI::IsMember({"text", "tsv"}));
  table->add_option("--out", tout, "write the table to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (!fixtures_dir.empty()) set_fixture_dir(fixtures_dir);
  if (completion > 0) set_completion_limit(completion);

  try {
    if (verify->parsed())
      return cmd_verify(suite, vformat, vout, parallelism, stretch);
    if (expand->parsed())
      return cmd_expand(ealgebra, eexpr, theta_opt->count() > 0, theta);
    if (table->parsed()) return cmd_table(talgebra, tformat, tout);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
