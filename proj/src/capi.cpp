#include "jorcon/jorcon.h"

#include <memory>
#include <sstream>
#include <string>

#include "jorcon/cgc.hpp"
#include "jorcon/fock.hpp"
#include "jorcon/relations.hpp"
#include "jorcon/rmatrix.hpp"
#include "jorcon/serialize.hpp"
#include "jorcon/suite.hpp"

using namespace jorcon;

struct jorcon_matrix {
  LabeledMatrix m;
  std::string note;  // extra text line, e.g. the value of eta
  mutable std::string entry, json_text, text;
};

struct jorcon_relset {
  RelationSet r;
  mutable std::string json_text, text;
};

struct jorcon_result {
  bool passed = true;
  std::string text;
  std::string json_text;
};

namespace {

struct LastError {
  std::string message;
  bool has_pole = false;
  PoleInfo pole;
};

thread_local LastError last;

int status_of(ErrorCode c) { return static_cast<int>(c) + 1; }

template <class F>
int guarded(F&& f) {
  last = LastError{};
  try {
    f();
    return JORCON_OK;
  } catch (const PoleAtQ1& e) {
    last.message = e.what();
    last.has_pole = true;
    last.pole = e.info();
    return JORCON_ERR_POLE_AT_Q1;
  } catch (const Error& e) {
    last.message = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    last.message = e.what();
    return JORCON_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

Sigma sigma_of(int s) {
  if (s == 1) return Sigma::Boson;
  if (s == -1) return Sigma::Fermion;
  throw Error(ErrorCode::InvalidArgument, "sigma must be +1 or -1");
}

Basis basis_of(int b) {
  if (b == JORCON_BASIS_PLAIN) return Basis::Plain;
  if (b == JORCON_BASIS_TILDE) return Basis::Tilde;
  throw Error(ErrorCode::InvalidArgument, "basis must be plain or tilde");
}

LabeledMatrix named_matrix(const std::string& name, int N, std::string& note) {
  if (N < 1 || N > 12) throw Error(ErrorCode::InvalidArgument, "N must be between 1 and 12");
  if (name == "Rq") return build_Rq(N, 1);
  if (name == "Rh") return contract_R(N);
  if (name == "Rh-closed") return build_Rh_closed(N);
  if (name == "Cq") return build_Cq(N, 1);
  if (name == "Ch") {
    auto r = contract_C(N);
    if (r.pole) throw PoleAtQ1(*r.pole);
    return *r.matrix;
  }
  if (name == "Rtilde-q") return build_Rtilde_q(N, 1);
  if (name == "Rtilde-h") return contract_Rtilde(DeformSpec{N, 1, Var::H});
  if (name == "g") {
    const Scalar eta = eta_for(1, Var::H);
    note = "eta = " + eta.to_string();
    return build_g(N, eta);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown matrix name " + name);
}

RelationSet build_relations(const jorcon_relations_spec& s) {
  const std::string family = s.family ? s.family : "hh";
  const std::string form = s.form && *s.form ? s.form : "compact";
  require(s.n >= 1 && s.m >= 1 && s.n <= 8 && s.m <= 8, "n and m must be between 1 and 8");
  const Sigma sigma = sigma_of(s.sigma);
  const Basis basis = basis_of(s.basis);
  if (family == "q") {
    require(s.variant == 1 || s.variant == 2, "variant must be 1 or 2");
    if (form == "compact") return compact_relations_q(s.n, s.m, sigma, s.variant, basis);
    if (form == "componentwise") return componentwise_relations_q(s.n, s.m, sigma, s.variant, basis);
  } else if (family == "hh") {
    if (form == "compact") return compact_relations_h(s.n, s.m, sigma, basis);
    if (form == "componentwise") return componentwise_relations_h(s.n, s.m, sigma, basis);
    if (form == "m1") {
      require(s.m == 1, "the m1 form needs m = 1");
      return componentwise_relations_h_m1(s.n, sigma, basis);
    }
    if (form == "explicit") {
      require(s.n == 2 && s.m == 1, "explicit lists exist for n = 2, m = 1");
      return explicit_relations_21(sigma, basis);
    }
  } else if (family == "classical") {
    return classical_relations(s.n, s.m, sigma, basis);
  } else if (family == "contracted") {
    require(s.variant == 1 || s.variant == 2, "variant must be 1 or 2");
    return contracted_relations(s.n, s.m, sigma, s.variant, basis);
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown family " + family);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown form " + form + " for family " + family);
}

std::string half(int two_m) { return two_m > 0 ? "1/2" : "-1/2"; }

} // namespace

extern "C" {

const char* jorcon_version(void) { return "1.0.0"; }

const char* jorcon_status_name(int status) {
  static const char* names[] = {"Ok",
                                "InvalidArgument",
                                "DivisionByZero",
                                "PoleAtQ1",
                                "DimensionMismatch",
                                "SingularMatrix",
                                "UnsupportedDimension",
                                "InternalMismatch",
                                "MissingRewriteRule",
                                "InvalidLabel",
                                "InvalidCutoff",
                                "TruncationTooSmall",
                                "Parse",
                                "Internal"};
  if (status < 0 || status > JORCON_ERR_INTERNAL) return "Unknown";
  return names[status];
}

const char* jorcon_last_error(void) { return last.message.c_str(); }

int jorcon_last_pole(int* row, int* col) {
  if (!last.has_pole) return 0;
  if (row) *row = last.pole.row;
  if (col) *col = last.pole.col;
  return 1;
}

const char* jorcon_last_pole_context(void) { return last.pole.context.c_str(); }
const char* jorcon_last_pole_coefficient(void) { return last.pole.coefficient.c_str(); }

int jorcon_matrix_named(const char* name, int N, jorcon_matrix** out) {
  return guarded([&] {
    require(name && out, "null argument");
    auto h = std::make_unique<jorcon_matrix>();
    h->m = named_matrix(name, N, h->note);
    *out = h.release();
  });
}

int jorcon_matrix_from_json(const char* text, jorcon_matrix** out) {
  return guarded([&] {
    require(text && out, "null argument");
    auto h = std::make_unique<jorcon_matrix>();
    h->m = matrix_from_json(parse_json(text));
    *out = h.release();
  });
}

int jorcon_matrix_size(const jorcon_matrix* m) { return m ? m->m.size() : 0; }

const char* jorcon_matrix_entry(const jorcon_matrix* m, int row, int col) {
  if (!m || row < 1 || col < 1 || row > m->m.size() || col > m->m.size()) return nullptr;
  m->entry = m->m.at(row - 1, col - 1).to_string();
  return m->entry.c_str();
}

const char* jorcon_matrix_json(const jorcon_matrix* m) {
  if (!m) return nullptr;
  m->json_text = to_json(m->m).dump();
  return m->json_text.c_str();
}

const char* jorcon_matrix_text(const jorcon_matrix* m) {
  if (!m) return nullptr;
  m->text = render_text(m->m);
  if (!m->note.empty()) m->text += m->note + "\n";
  return m->text.c_str();
}

int jorcon_matrix_equal(const jorcon_matrix* a, const jorcon_matrix* b) {
  return a && b && a->m == b->m ? 1 : 0;
}

void jorcon_matrix_free(jorcon_matrix* m) { delete m; }

int jorcon_relations_build(const jorcon_relations_spec* spec, jorcon_relset** out) {
  return guarded([&] {
    require(spec && out, "null argument");
    auto h = std::make_unique<jorcon_relset>();
    h->r = build_relations(*spec);
    *out = h.release();
  });
}

int jorcon_relset_count(const jorcon_relset* r) { return r ? static_cast<int>(r->r.relations().size()) : 0; }

const char* jorcon_relset_text(const jorcon_relset* r) {
  if (!r) return nullptr;
  r->text = render_text(r->r);
  return r->text.c_str();
}

const char* jorcon_relset_json(const jorcon_relset* r) {
  if (!r) return nullptr;
  r->json_text = to_json(r->r).dump();
  return r->json_text.c_str();
}

int jorcon_relset_span_equal(const jorcon_relset* a, const jorcon_relset* b, int* equal) {
  return guarded([&] {
    require(a && b && equal, "null argument");
    *equal = relation_span_equal(a->r, b->r) ? 1 : 0;
  });
}

void jorcon_relset_free(jorcon_relset* r) { delete r; }

int jorcon_cgc_table(jorcon_result** out) {
  return guarded([&] {
    require(out, "null argument");
    auto res = std::make_unique<jorcon_result>();
    const std::pair<int, int> cols[] = {{1, 1}, {1, 0}, {1, -1}, {0, 0}};
    json rows = json::array();
    std::ostringstream os;
    os << "<1/2 m1, 1/2 m2 | J M>_h\n";
    auto pad = [](std::string x) { return x + std::string(x.size() < 12 ? 12 - x.size() : 1, ' '); };
    os << "m1    m2    " << pad("J=1,M=1") << pad("J=1,M=0") << pad("J=1,M=-1") << "J=0,M=0\n";
    for (int a : {1, -1})
      for (int b : {1, -1}) {
        json row = json::object();
        row["m1"] = half(a);
        row["m2"] = half(b);
        json cells = json::object();
        std::string line = half(a) + std::string(6 - half(a).size(), ' ') + half(b) + std::string(6 - half(b).size(), ' ');
        for (auto [J, M] : cols) {
          const Scalar c = cgc(a, b, J, M);
          cells["J=" + std::to_string(J) + ",M=" + std::to_string(M)] = to_json(c);
          line += pad(c.to_string());
        }
        row["cells"] = std::move(cells);
        rows.push_back(std::move(row));
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << "\n";
      }
    json j = json::object();
    j["param"] = "h";
    j["rows"] = std::move(rows);
    res->text = os.str();
    res->json_text = j.dump();
    *out = res.release();
  });
}

int jorcon_fock_report(int sigma, int cutoff, int basis, jorcon_result** out) {
  return guarded([&] {
    require(out, "null argument");
    const Sigma s = sigma_of(sigma);
    std::vector<Basis> bases;
    if (basis == JORCON_BASIS_BOTH) bases = {Basis::Tilde, Basis::Plain};
    else bases = {basis_of(basis)};
    if (s == Sigma::Boson && cutoff < 2) throw Error(ErrorCode::InvalidCutoff, "bosonic cutoff must be at least 2");
    if (s == Sigma::Boson && cutoff - 2 < 2)
      throw Error(ErrorCode::TruncationTooSmall, "cutoff " + std::to_string(cutoff) + " leaves fewer than two checked sectors");
    const FockOps ops = build_aizawa(s, cutoff);
    auto res = std::make_unique<jorcon_result>();
    std::ostringstream os;
    json reports = json::array();
    for (Basis b : bases) {
      const FockReport rep = verify_on_fock(compact_relations_h(2, 1, s, b), ops);
      res->passed = res->passed && rep.ok();
      os << (s == Sigma::Boson ? "bosons" : "fermions") << ", " << basis_name(b) << " basis"
         << (b == Basis::Plain ? " (extrapolated: A1 = h At1 - At2, A2 = At1)" : "") << ", " << rep.dim
         << " states, columns with total <= " << rep.max_total << "\n";
      json rels = json::array();
      for (const auto& r : rep.residuals) {
        os << "  " << (r.ok() ? "zero     " : "NONZERO  ") << r.relation;
        if (!r.ok()) os << "  (" << r.nonzero << " entries)";
        os << "\n";
        rels.push_back({{"relation", r.relation}, {"nonzero", r.nonzero}});
      }
      json j = json::object();
      j["basis"] = basis_name(b);
      j["extrapolated"] = b == Basis::Plain;
      j["dim"] = rep.dim;
      j["max_total"] = rep.max_total;
      j["ok"] = rep.ok();
      j["residuals"] = std::move(rels);
      reports.push_back(std::move(j));
    }
    json j = json::object();
    j["stats"] = s == Sigma::Boson ? "boson" : "fermion";
    j["cutoff"] = s == Sigma::Boson ? cutoff : 2;
    j["passed"] = res->passed;
    j["reports"] = std::move(reports);
    res->text = os.str();
    res->json_text = j.dump();
    *out = res.release();
  });
}

void jorcon_verify_spec_init(jorcon_verify_spec* spec) {
  if (!spec) return;
  *spec = jorcon_verify_spec{};
  spec->suite = "all";
  spec->basis = JORCON_BASIS_BOTH;
  spec->cutoff = 6;
  spec->timing = 1;
}

int jorcon_verify(const jorcon_verify_spec* spec, jorcon_result** out) {
  return guarded([&] {
    require(spec && out, "null argument");
    SuiteConfig c;
    c.suite = spec->suite ? spec->suite : "all";
    if (spec->n) c.n = spec->n;
    if (spec->m) c.m = spec->m;
    if (spec->sigma) c.sigmas = {sigma_of(spec->sigma)};
    if (spec->variant) {
      require(spec->variant == 1 || spec->variant == 2, "variant must be 1 or 2");
      c.variants = {spec->variant};
    }
    if (spec->basis != JORCON_BASIS_BOTH) c.bases = {basis_of(spec->basis)};
    if (spec->cutoff) c.cutoff = spec->cutoff;
    c.threads = spec->threads;
    const SuiteReport rep = run_suite(c);
    auto res = std::make_unique<jorcon_result>();
    res->passed = rep.ok();
    res->text = report_text(rep, spec->timing != 0);
    res->json_text = report_json(rep, spec->timing != 0).dump();
    *out = res.release();
  });
}

int jorcon_result_passed(const jorcon_result* r) { return r && r->passed ? 1 : 0; }
const char* jorcon_result_text(const jorcon_result* r) { return r ? r->text.c_str() : nullptr; }
const char* jorcon_result_json(const jorcon_result* r) { return r ? r->json_text.c_str() : nullptr; }
void jorcon_result_free(jorcon_result* r) { delete r; }

} // extern "C"
