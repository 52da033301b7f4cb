// Command-line driver; talks to the library only through jorcon.h.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "jorcon/jorcon.h"

using json = nlohmann::ordered_json;

namespace {

struct Global {
  std::string format = "text";
  bool no_timing = false;
  bool expect_pole = false;
};

Global global;

int exit_for_status(int status) {
  switch (status) {
    case JORCON_OK: return 0;
    case JORCON_ERR_POLE_AT_Q1:
    case JORCON_ERR_INTERNAL_MISMATCH:
    case JORCON_ERR_MISSING_REWRITE_RULE:
    case JORCON_ERR_INTERNAL: return 1;
    default: return 2;
  }
}

void emit(const std::string& command, const json& result) {
  json out = json::object();
  out["tool"] = "jorcon";
  out["command"] = command;
  out["result"] = result;
  std::cout << out.dump(2) << "\n";
}

// Reports a failed library call; returns the process exit code.
int report_failure(const std::string& command, int status) {
  int row = 0, col = 0;
  const bool pole = jorcon_last_pole(&row, &col) == 1;
  const bool expected = pole && global.expect_pole;
  if (global.format == "json") {
    json err = json::object();
    err["code"] = jorcon_status_name(status);
    err["message"] = jorcon_last_error();
    if (pole) {
      err["pole"] = {{"context", jorcon_last_pole_context()},
                     {"row", row},
                     {"col", col},
                     {"coefficient", jorcon_last_pole_coefficient()}};
      err["expected"] = expected;
    }
    json out = json::object();
    out["tool"] = "jorcon";
    out["command"] = command;
    out["error"] = std::move(err);
    std::cout << out.dump(2) << "\n";
  } else {
    std::ostream& os = expected ? std::cout : std::cerr;
    if (pole) {
      os << (expected ? "expected pole: " : "error: ") << jorcon_last_error() << "\n";
      os << "  context: " << jorcon_last_pole_context() << "\n";
      os << "  entry: (" << row << "," << col << ")\n";
      os << "  coefficient: " << jorcon_last_pole_coefficient() << "\n";
    } else {
      os << "error: " << jorcon_status_name(status) << ": " << jorcon_last_error() << "\n";
    }
  }
  return expected ? 0 : exit_for_status(status);
}

// A successful call under --expect-pole is itself a failure.
int unexpected_success() {
  if (!global.expect_pole) return 0;
  std::cerr << "error: a pole at q = 1 was expected but the limit exists\n";
  return 1;
}

int parse_sigma(const std::string& s) {
  if (s == "+1" || s == "1" || s == "boson") return 1;
  if (s == "-1" || s == "fermion") return -1;
  throw CLI::ValidationError("--sigma", "must be +1 or -1");
}

int parse_basis(const std::string& s, bool allow_both) {
  if (s == "plain") return JORCON_BASIS_PLAIN;
  if (s == "tilde") return JORCON_BASIS_TILDE;
  if (allow_both && s == "both") return JORCON_BASIS_BOTH;
  throw CLI::ValidationError("--basis", "must be plain or tilde" + std::string(allow_both ? " or both" : ""));
}

int cmd_rmat(const std::string& name, int N) {
  jorcon_matrix* m = nullptr;
  const int st = jorcon_matrix_named(name.c_str(), N, &m);
  if (st != JORCON_OK) return report_failure("rmat", st);
  if (global.format == "json") {
    json r = json::parse(jorcon_matrix_json(m));
    r = json{{"name", name}, {"N", N}, {"matrix", r}};
    emit("rmat", r);
  } else {
    std::cout << name << " (N = " << N << ")\n" << jorcon_matrix_text(m);
  }
  jorcon_matrix_free(m);
  return unexpected_success();
}

int cmd_relations(jorcon_relations_spec spec) {
  jorcon_relset* r = nullptr;
  const int st = jorcon_relations_build(&spec, &r);
  if (st != JORCON_OK) return report_failure("relations", st);
  if (global.format == "json") {
    emit("relations", json::parse(jorcon_relset_json(r)));
  } else {
    std::cout << jorcon_relset_text(r);
  }
  jorcon_relset_free(r);
  return unexpected_success();
}

int print_result(const std::string& command, jorcon_result* r) {
  if (global.format == "json") emit(command, json::parse(jorcon_result_json(r)));
  else std::cout << jorcon_result_text(r);
  const int code = jorcon_result_passed(r) ? 0 : 1;
  jorcon_result_free(r);
  return code;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of contracted R-matrices and deformed oscillator algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", global.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--no-timing", global.no_timing, "Omit the timing footer");
  app.add_flag("--expect-pole", global.expect_pole, "Treat a pole at q = 1 as the expected outcome");

  std::string mat_name;
  int mat_N = 2;
  auto* rmat = app.add_subcommand("rmat", "Print a named matrix");
  rmat->add_option("name", mat_name, "Rq, Rh, Rh-closed, Cq, Ch, Rtilde-q, Rtilde-h or g")->required();
  rmat->add_option("--N,-N", mat_N, "Dimension")->capture_default_str();

  std::string family = "hh", form = "compact", sigma = "+1", basis = "plain";
  int rel_n = 2, rel_m = 1, variant = 1;
  auto* rel = app.add_subcommand("relations", "Print a relation set");
  rel->add_option("--family", family, "q, hh, classical or contracted")->capture_default_str();
  rel->add_option("--form", form, "compact, componentwise, m1 or explicit")->capture_default_str();
  rel->add_option("--n", rel_n)->capture_default_str();
  rel->add_option("--m", rel_m)->capture_default_str();
  rel->add_option("--sigma", sigma, "+1 or -1")->capture_default_str();
  rel->add_option("--variant", variant, "1 or 2")->capture_default_str();
  rel->add_option("--basis", basis, "plain or tilde")->capture_default_str();

  auto* cgc = app.add_subcommand("cgc", "Print the spin-1/2 coupling coefficients");

  std::string stats = "boson", fock_basis = "both";
  int cutoff = 6;
  auto* fock = app.add_subcommand("fock", "Check the two-mode realizations on a truncated Fock space");
  fock->add_option("--stats", stats)->check(CLI::IsMember({"boson", "fermion"}))->capture_default_str();
  fock->add_option("--cutoff", cutoff)->capture_default_str();
  fock->add_option("--basis", fock_basis, "plain, tilde or both")->capture_default_str();

  std::string suite = "all", v_sigma, v_basis = "both";
  std::optional<int> v_n, v_m, v_variant;
  int v_cutoff = 6, threads = 0;
  auto* ver = app.add_subcommand("verify", "Run verification suites");
  ver->add_option("--suite", suite, "rmatrix, relation-equivalence, contraction, coupled, fock or all")->capture_default_str();
  ver->add_option("--n", v_n);
  ver->add_option("--m", v_m);
  ver->add_option("--sigma", v_sigma, "+1 or -1 (default both)");
  ver->add_option("--variant", v_variant, "1 or 2 (default both)");
  ver->add_option("--basis", v_basis, "plain, tilde or both")->capture_default_str();
  ver->add_option("--cutoff", v_cutoff)->capture_default_str();
  ver->add_option("--threads", threads, "Worker count (capped by JORCON_THREADS)");

  try {
    app.parse(argc, argv);
    if (rmat->parsed()) return cmd_rmat(mat_name, mat_N);
    if (rel->parsed()) {
      jorcon_relations_spec spec{};
      spec.n = rel_n;
      spec.m = rel_m;
      spec.sigma = parse_sigma(sigma);
      spec.family = family.c_str();
      spec.form = form.c_str();
      spec.variant = variant;
      spec.basis = parse_basis(basis, false);
      return cmd_relations(spec);
    }
    if (cgc->parsed()) {
      jorcon_result* r = nullptr;
      const int st = jorcon_cgc_table(&r);
      if (st != JORCON_OK) return report_failure("cgc", st);
      return print_result("cgc", r);
    }
    if (fock->parsed()) {
      jorcon_result* r = nullptr;
      const int st = jorcon_fock_report(stats == "boson" ? 1 : -1, cutoff, parse_basis(fock_basis, true), &r);
      if (st != JORCON_OK) return report_failure("fock", st);
      return print_result("fock", r);
    }
    if (ver->parsed()) {
      jorcon_verify_spec spec;
      jorcon_verify_spec_init(&spec);
      spec.suite = suite.c_str();
      spec.n = v_n.value_or(0);
      spec.m = v_m.value_or(0);
      spec.sigma = v_sigma.empty() ? 0 : parse_sigma(v_sigma);
      spec.variant = v_variant.value_or(0);
      spec.basis = parse_basis(v_basis, true);
      spec.cutoff = v_cutoff;
      spec.threads = threads;
      spec.timing = global.no_timing ? 0 : 1;
      jorcon_result* r = nullptr;
      const int st = jorcon_verify(&spec, &r);
      if (st != JORCON_OK) return report_failure("verify", st);
      return print_result("verify", r);
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return 2;
}
