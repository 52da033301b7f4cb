#include "jorcon/suite.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>

#include "jorcon/cgc.hpp"
#include "jorcon/fock.hpp"
#include "jorcon/relations.hpp"
#include "jorcon/rmatrix.hpp"

namespace jorcon {

namespace {

struct Outcome {
  CheckStatus status;
  std::string detail;
};

struct Check {
  std::string id;
  std::string anchor;
  bool expect_pole = false;
  std::function<Outcome()> run;
};

using Grid = std::vector<std::pair<int, int>>;

const std::string kClosedForm = "closed form of the contracted R-matrix";
const std::string kTriangular = "triangularity of R_h";
const std::string kYbe = "Yang-Baxter equation for R_h";
const std::string kMetric = "contracted metric C_h";
const std::string kTildeR = "tilde R_h from R_h and C_h";
const std::string kCompactQ = "compact and componentwise q-relations agree";
const std::string kCompactH = "compact and componentwise (hh')-relations agree";
const std::string kM1 = "m = 1 specializations";
const std::string kPW = "Pusz-Woronowicz algebras at m = 1";
const std::string kExplicit = "explicit (2,1) relations";
const std::string kClassical = "classical limit h = h' = 0";
const std::string kContraction = "contraction limit of both variants";
const std::string kEven = "tilde basis contracts only for even dimension";
const std::string kCoupled = "coupled (anti)commutators";
const std::string kFock = "Fock realizations of the (2,1) algebras";

Outcome verdict(bool ok, std::string detail = {}) {
  return {ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
}

std::string sigma_tag(Sigma s) { return s == Sigma::Boson ? "+1" : "-1"; }

std::string cell(int n, int m, Sigma s) {
  return "(" + std::to_string(n) + "," + std::to_string(m) + "," + sigma_tag(s) + ")";
}

bool tilde_ok(int N) { return N == 1 || N % 2 == 0; }

Grid default_grid() { return {{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}, {2, 3}}; }

Grid grid_for(const SuiteConfig& c, const Grid& fallback) {
  if (!c.n && !c.m) return fallback;
  return {{c.n.value_or(1), c.m.value_or(1)}};
}

bool wants(const SuiteConfig& c, Basis b) {
  for (Basis x : c.bases)
    if (x == b) return true;
  return false;
}

// Pusz-Woronowicz relations for A'(n,1); mu = q for bosons, q^-1 for fermions.
std::vector<AlgElement> pusz_woronowicz(int n, Sigma sigma, int variant) {
  const bool boson = sigma == Sigma::Boson;
  const Scalar mu = boson ? Scalar::q() : Scalar::q_power(-1);
  const Scalar mq = variant == 1 ? mu : mu.inverse();
  const Scalar sg(sign(sigma));
  auto a = [](int i) { return AlgElement::gen({GenKind::Annihilation, i, 0, Side::Q}); };
  auto ad = [](int i) { return AlgElement::gen({GenKind::Creation, i, 0, Side::Q}); };
  std::vector<AlgElement> out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (i != j) out.push_back(a(i) * ad(j) - sg * mq * (ad(j) * a(i)));
    if (!boson) {
      out.push_back(ad(i) * ad(i));
      out.push_back(a(i) * a(i));
    }
    AlgElement e = a(i) * ad(i) - sg * (boson ? mq * mq : Scalar(1)) * (ad(i) * a(i)) - AlgElement::identity();
    for (int k = 0; k < n; ++k)
      if (variant == 1 ? k < i : k > i) e -= (mq * mq - Scalar(1)) * (ad(k) * a(k));
    out.push_back(e);
    for (int j = i + 1; j < n; ++j) {
      out.push_back(ad(i) * ad(j) - sg * mu.inverse() * (ad(j) * ad(i)));
      out.push_back(a(j) * a(i) - sg * mu.inverse() * (a(i) * a(j)));
    }
  }
  return out;
}

void rmatrix_checks(std::vector<Check>& out, const SuiteConfig& c) {
  std::vector<int> Ns{1, 2, 3, 4, 5};
  if (c.n) Ns = {*c.n};
  for (int N : Ns) {
    out.push_back({"rmatrix/closed-form/N=" + std::to_string(N), kClosedForm, false,
                   [N] { return verdict(contract_R(N) == build_Rh_closed(N)); }});
    if (N >= 2) {
      out.push_back({"rmatrix/triangular/N=" + std::to_string(N), kTriangular, false,
                     [N] { return verdict(check_triangular(build_Rh_closed(N))); }});
    }
    if (N >= 2 && N <= 3)
      out.push_back({"rmatrix/ybe/N=" + std::to_string(N), kYbe, false,
                     [N] { return verdict(check_ybe(build_Rh_closed(N))); }});
    const bool even = N % 2 == 0 || N == 1;
    out.push_back({"rmatrix/metric/N=" + std::to_string(N), kMetric, !even, [N] {
                     auto r = contract_C(N);
                     if (r.pole)
                       return Outcome{CheckStatus::ExpectedPole, "pole at (" + std::to_string(r.pole->row) + "," +
                                                                     std::to_string(r.pole->col) + ")"};
                     return verdict(*r.matrix == build_Ch_closed(N));
                   }});
    if (even)
      out.push_back({"rmatrix/tilde/N=" + std::to_string(N), kTildeR, false,
                     [N] { return verdict(contract_Rtilde(DeformSpec{N, 1, Var::H}) == build_Rhtilde_closed(N)); }});
  }
}

void equivalence_checks(std::vector<Check>& out, const SuiteConfig& c) {
  const Grid grid = grid_for(c, default_grid());
  for (auto [n, m] : grid)
    for (Sigma s : c.sigmas) {
      for (int v : c.variants)
        for (Basis b : c.bases)
          out.push_back({"equivalence/q" + cell(n, m, s) + "/v" + std::to_string(v) + "/" + basis_name(b), kCompactQ, false,
                         [=] {
                           return verdict(relation_span_equal(compact_relations_q(n, m, s, v, b),
                                                              componentwise_relations_q(n, m, s, v, b)));
                         }});
      for (Basis b : c.bases) {
        if (b == Basis::Tilde && !(tilde_ok(n) && tilde_ok(m))) continue;
        out.push_back({"equivalence/hh" + cell(n, m, s) + "/" + basis_name(b), kCompactH, false, [=] {
                         return verdict(relation_span_equal(compact_relations_h(n, m, s, b),
                                                            componentwise_relations_h(n, m, s, b)));
                       }});
        out.push_back({"equivalence/classical" + cell(n, m, s) + "/" + basis_name(b), kClassical, false, [=] {
                         return verdict(relation_span_equal(specialize_classical(compact_relations_h(n, m, s, b)),
                                                            classical_relations(n, m, s, b)));
                       }});
      }
      if (m == 1) {
        for (Basis b : c.bases) {
          if (b == Basis::Tilde && !tilde_ok(n)) continue;
          out.push_back({"equivalence/m1" + cell(n, m, s) + "/" + basis_name(b), kM1, false, [=] {
                           return verdict(relation_span_equal(componentwise_relations_h_m1(n, s, b),
                                                              componentwise_relations_h(n, 1, s, b)));
                         }});
        }
        for (int v : c.variants)
          out.push_back({"equivalence/pusz-woronowicz" + cell(n, m, s) + "/v" + std::to_string(v), kPW, false, [=] {
                           return verdict(relation_span_equal(compact_relations_q(n, 1, s, v, Basis::Plain).relations(),
                                                              pusz_woronowicz(n, s, v)));
                         }});
      }
    }
  if (!c.n && !c.m)
    for (Sigma s : c.sigmas)
      for (Basis b : c.bases)
        out.push_back({"equivalence/explicit" + cell(2, 1, s) + "/" + basis_name(b), kExplicit, false, [=] {
                         return verdict(relation_span_equal(explicit_relations_21(s, b), compact_relations_h(2, 1, s, b)));
                       }});
}

Outcome contraction_outcome(int n, int m, Sigma s, int v, Basis b) {
  try {
    const RelationSet lim = contracted_relations(n, m, s, v, b);
    return verdict(relation_span_equal(lim, compact_relations_h(n, m, s, b)));
  } catch (const PoleAtQ1& e) {
    const auto& p = e.info();
    const int i = (p.row - 1) / m + 1, si = (p.row - 1) % m + 1;
    const int j = (p.col - 1) / m + 1, t = (p.col - 1) % m + 1;
    const bool at_nn = (!tilde_ok(n) && i == n && j == n) || (!tilde_ok(m) && si == m && t == m);
    std::string detail = std::string(e.what());
    if (!at_nn) return {CheckStatus::Fail, "pole away from the odd corner: " + detail};
    // the obstruction comes from the metric of the odd factor
    const int N = tilde_ok(n) ? m : n;
    const auto metric = contract_C(DeformSpec{N, 1, Var::H});
    if (!metric.pole || metric.pole->row != N || metric.pole->col != N)
      return {CheckStatus::Fail, "C'' of dimension " + std::to_string(N) + " has no pole at its corner; " + detail};
    detail += "; C''(" + std::to_string(N) + "," + std::to_string(N) + ") = " + metric.pole->coefficient;
    return {CheckStatus::ExpectedPole, detail};
  }
}

void contraction_checks(std::vector<Check>& out, const SuiteConfig& c) {
  const Grid plain = grid_for(c, default_grid());
  const Grid tilde = grid_for(c, {{1, 1}, {2, 1}, {2, 2}, {4, 1}, {3, 1}, {1, 3}, {2, 3}});
  for (Sigma s : c.sigmas)
    for (int v : c.variants) {
      if (wants(c, Basis::Plain))
        for (auto [n, m] : plain)
          out.push_back({"contraction" + cell(n, m, s) + "/v" + std::to_string(v) + "/plain", kContraction, false,
                         [=] { return contraction_outcome(n, m, s, v, Basis::Plain); }});
      if (wants(c, Basis::Tilde))
        for (auto [n, m] : tilde) {
          const bool pole = !(tilde_ok(n) && tilde_ok(m));
          out.push_back({"contraction" + cell(n, m, s) + "/v" + std::to_string(v) + "/tilde", pole ? kEven : kContraction,
                         pole, [=] { return contraction_outcome(n, m, s, v, Basis::Tilde); }});
        }
    }
}

void coupled_checks(std::vector<Check>& out, const SuiteConfig& c) {
  for (auto [n, m] : Grid{{2, 1}, {2, 2}})
    for (Sigma s : c.sigmas)
      for (bool classical : {false, true})
        out.push_back({"coupled" + cell(n, m, s) + (classical ? "/classical" : "/deformed"), kCoupled, false, [=] {
                         const auto checks = verify_coupled_identities(n, m, s, classical);
                         std::string bad;
                         for (const auto& k : checks)
                           if (!k.ok) bad += (bad.empty() ? "" : "; ") + k.name + " = " + k.value.to_string();
                         return verdict(bad.empty(), std::to_string(checks.size()) + " identities" +
                                                         (bad.empty() ? "" : ", failing: " + bad));
                       }});
}

void fock_checks(std::vector<Check>& out, const SuiteConfig& c) {
  if (c.cutoff - 2 < 2)
    throw Error(ErrorCode::TruncationTooSmall, "cutoff " + std::to_string(c.cutoff) + " leaves no sector with total number >= 2");
  for (Sigma s : c.sigmas)
    for (Basis b : c.bases) {
      const int K = c.cutoff;
      out.push_back({"fock" + cell(2, 1, s) + "/" + basis_name(b) + (b == Basis::Plain ? "/extrapolated" : ""), kFock,
                     false, [=] {
                       const auto rep = verify_on_fock(compact_relations_h(2, 1, s, b), build_aizawa(s, K));
                       int bad = 0;
                       for (const auto& r : rep.residuals) bad += r.ok() ? 0 : 1;
                       return verdict(rep.ok(), std::to_string(rep.residuals.size()) + " relations on " +
                                                    std::to_string(rep.dim) + " states, total <= " +
                                                    std::to_string(rep.max_total) +
                                                    (bad ? ", " + std::to_string(bad) + " nonzero residuals" : ""));
                     }});
    }
}

} // namespace

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::ExpectedPole: return "expected-pole";
  }
  return "";
}

int SuiteReport::count(CheckStatus s) const {
  int k = 0;
  for (const auto& r : records) k += r.status == s ? 1 : 0;
  return k;
}

int SuiteReport::unexpected() const {
  int k = 0;
  for (const auto& r : records) k += r.expected ? 0 : 1;
  return k;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"rmatrix", "relation-equivalence", "contraction", "coupled", "fock", "all"};
  return names;
}

int worker_count(int requested) {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  int n = requested > 0 ? requested : hw;
  if (const char* env = std::getenv("JORCON_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) n = std::min(n, cap);
  }
  return std::max(1, n);
}

SuiteReport run_suite(const SuiteConfig& config) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), config.suite) == names.end())
    throw Error(ErrorCode::InvalidArgument, "unknown suite " + config.suite);
  if (config.n && *config.n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  if (config.m && *config.m < 1) throw Error(ErrorCode::InvalidArgument, "m must be positive");
  const bool all = config.suite == "all";
  std::vector<Check> checks;
  if (all || config.suite == "rmatrix") rmatrix_checks(checks, config);
  if (all || config.suite == "relation-equivalence") equivalence_checks(checks, config);
  if (all || config.suite == "contraction") contraction_checks(checks, config);
  if (all || config.suite == "coupled") coupled_checks(checks, config);
  if (all || config.suite == "fock") fock_checks(checks, config);

  SuiteReport rep;
  rep.suite = config.suite;
  rep.records.resize(checks.size());
  const auto t0 = std::chrono::steady_clock::now();
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < checks.size(); k = next++) {
      const Check& c = checks[k];
      CheckRecord& r = rep.records[k];
      r.id = c.id;
      r.anchor = c.anchor;
      const auto s = std::chrono::steady_clock::now();
      try {
        Outcome o = c.run();
        r.status = o.status;
        r.detail = std::move(o.detail);
      } catch (const std::exception& e) {
        r.status = CheckStatus::Fail;
        r.detail = e.what();
      }
      r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - s).count();
      r.expected = c.expect_pole ? r.status == CheckStatus::ExpectedPole : r.status == CheckStatus::Pass;
      if (c.expect_pole && r.status == CheckStatus::Pass) r.detail = "expected a pole, found a limit";
    }
  };
  const int n = std::min<int>(worker_count(config.threads), std::max<std::size_t>(1, checks.size()));
  std::vector<std::thread> pool;
  for (int k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  rep.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

json report_json(const SuiteReport& r, bool timing) {
  json recs = json::array();
  for (const auto& c : r.records) {
    json j = json::object();
    j["id"] = c.id;
    j["anchor"] = c.anchor;
    j["status"] = status_name(c.status);
    j["expected"] = c.expected;
    if (!c.detail.empty()) j["detail"] = c.detail;
    recs.push_back(std::move(j));
  }
  json out = json::object();
  out["suite"] = r.suite;
  out["passed"] = r.ok();
  out["records"] = std::move(recs);
  out["summary"] = {{"checks", r.records.size()},
                    {"pass", r.count(CheckStatus::Pass)},
                    {"expected_pole", r.count(CheckStatus::ExpectedPole)},
                    {"fail", r.count(CheckStatus::Fail)},
                    {"unexpected", r.unexpected()}};
  if (timing) {
    json t = json::object();
    t["total_seconds"] = r.elapsed;
    json per = json::object();
    for (const auto& c : r.records) per[c.id] = c.elapsed;
    t["checks"] = std::move(per);
    out["timing"] = std::move(t);
  }
  return out;
}

std::string report_text(const SuiteReport& r, bool timing) {
  std::ostringstream os;
  for (const auto& c : r.records) {
    os << (c.expected ? "ok   " : "FAIL ") << status_name(c.status) << "  " << c.id << "  [" << c.anchor << "]";
    if (!c.detail.empty()) os << "  " << c.detail;
    os << "\n";
  }
  os << "suite " << r.suite << ": " << r.records.size() << " checks, " << r.count(CheckStatus::Pass) << " pass, "
     << r.count(CheckStatus::ExpectedPole) << " expected-pole, " << r.unexpected() << " unexpected\n";
  if (timing) {
    os << "-- timing --\n";
    for (const auto& c : r.records) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%9.3f s  ", c.elapsed);
      os << buf << c.id << "\n";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%9.3f s  total\n", r.elapsed);
    os << buf;
  }
  return os.str();
}

} // namespace jorcon
