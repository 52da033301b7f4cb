#include "jorcon/fock.hpp"

namespace jorcon {

int FockSpace::index(int n1, int n2) const {
  for (int k = 0; k < dim(); ++k)
    if (states[k].first == n1 && states[k].second == n2) return k;
  return -1;
}

FockSpace make_fock_space(Sigma stats, int cutoff) {
  FockSpace s;
  s.stats = stats;
  if (stats == Sigma::Boson) {
    if (cutoff < 2) throw Error(ErrorCode::InvalidCutoff, "bosonic cutoff must be at least 2");
    s.cutoff = cutoff;
    for (int n1 = 0; n1 <= cutoff; ++n1)
      for (int n2 = 0; n1 + n2 <= cutoff; ++n2) s.states.emplace_back(n1, n2);
  } else {
    s.cutoff = 2;
    for (int n1 = 0; n1 <= 1; ++n1)
      for (int n2 = 0; n2 <= 1; ++n2) s.states.emplace_back(n1, n2);
  }
  return s;
}

namespace {

// a+ (raise) or a (lower) on one mode.
LabeledMatrix ladder(const FockSpace& sp, int mode, bool raise) {
  const int D = sp.dim();
  LabeledMatrix M({D});
  const bool boson = sp.stats == Sigma::Boson;
  for (int k = 0; k < D; ++k) {
    auto [n1, n2] = sp.states[k];
    int& occ = mode == 1 ? n1 : n2;
    const int before = occ;
    occ += raise ? 1 : -1;
    if (occ < 0 || (!boson && occ > 1)) continue;
    const int target = sp.index(n1, n2);
    if (target < 0) continue;  // leaves the truncation
    long c = 1;
    if (boson && !raise) c = before;
    if (!boson && mode == 2 && n1 % 2 == 1) c = -c;
    M.at(target, k) = Scalar(c);
  }
  return M;
}

LabeledMatrix power_series_inverse(const LabeledMatrix& X) {
  // (1 - X)^-1 for nilpotent X
  LabeledMatrix out = LabeledMatrix::identity(X.dims());
  LabeledMatrix term = X;
  while (!term.is_zero()) {
    out = out + term;
    term = term * X;
  }
  return out;
}

} // namespace

FockOps build_classical_ops(Sigma stats, int cutoff) {
  FockOps f;
  f.space = make_fock_space(stats, cutoff);
  auto& o = f.ops;
  o.emplace("a+1", ladder(f.space, 1, true));
  o.emplace("a+2", ladder(f.space, 2, true));
  o.emplace("a1", ladder(f.space, 1, false));
  o.emplace("a2", ladder(f.space, 2, false));
  o.emplace("J+", o.at("a+1") * o.at("a2"));
  o.emplace("J-", o.at("a+2") * o.at("a1"));
  o.emplace("J0", scalar_mul(Scalar::rational(1, 2), o.at("a+1") * o.at("a1") - o.at("a+2") * o.at("a2")));
  return f;
}

FockOps build_aizawa(Sigma stats, int cutoff, const Scalar& h) {
  FockOps f = build_classical_ops(stats, cutoff);
  f.h = h;
  auto& o = f.ops;
  const LabeledMatrix& ap1 = o.at("a+1");
  const LabeledMatrix& ap2 = o.at("a+2");
  const LabeledMatrix& a1 = o.at("a1");
  const LabeledMatrix& a2 = o.at("a2");
  const LabeledMatrix& J0 = o.at("J0");
  if (stats == Sigma::Boson) {
    const LabeledMatrix X = scalar_mul(h / Scalar(2), o.at("J+"));
    const LabeledMatrix S = power_series_inverse(X);
    const LabeledMatrix L = LabeledMatrix::identity({f.space.dim()}) - X;
    const Scalar h2 = h / Scalar(2);
    LabeledMatrix A1 = S * ap1;
    LabeledMatrix A2 = L * ap2 + scalar_mul(h2, A1 - scalar_mul(Scalar(2), ap1 * J0));
    LabeledMatrix T1 = S * a2;
    LabeledMatrix T2 = scalar_mul(Scalar(-1), L * a1) + scalar_mul(h2, T1 - scalar_mul(Scalar(2), a2 * J0));
    o.emplace("A+1", std::move(A1));
    o.emplace("A+2", std::move(A2));
    o.emplace("At1", std::move(T1));
    o.emplace("At2", std::move(T2));
  } else {
    const Scalar h2 = Scalar(2) * h;
    o.emplace("A+1", ap1);
    o.emplace("A+2", ap2 - scalar_mul(h2, ap1 * J0));
    o.emplace("At1", a2);
    o.emplace("At2", scalar_mul(Scalar(-1), a1) - scalar_mul(h2, a2 * J0));
  }
  return f;
}

bool FockReport::ok() const {
  for (const auto& r : residuals)
    if (!r.ok()) return false;
  return !residuals.empty();
}

namespace {

// Every entry of M maps a state of total t to one of total t + shift.
bool shifts_total_by(const LabeledMatrix& M, const FockSpace& sp, int shift) {
  for (int r = 0; r < sp.dim(); ++r)
    for (int c = 0; c < sp.dim(); ++c)
      if (!M.at(r, c).is_zero() && sp.total(r) != sp.total(c) + shift) return false;
  return true;
}

} // namespace

FockReport verify_on_fock(const RelationSet& rel, const FockOps& ops, int safe_margin) {
  const FockSpace& sp = ops.space;
  const bool boson = sp.stats == Sigma::Boson;
  if (rel.meta().n != 2 || rel.meta().m != 1)
    throw Error(ErrorCode::InvalidArgument, "Fock realizations exist for (n, m) = (2, 1) only");
  if (rel.meta().sigma != sp.stats) throw Error(ErrorCode::InvalidArgument, "statistics of relations and operators differ");
  if (boson && sp.cutoff - safe_margin < 2)
    throw Error(ErrorCode::TruncationTooSmall, "cutoff " + std::to_string(sp.cutoff) + " leaves fewer than two checked sectors");

  FockReport rep;
  rep.stats = sp.stats;
  rep.basis = rel.meta().basis;
  rep.cutoff = sp.cutoff;
  rep.dim = sp.dim();
  rep.max_total = boson ? sp.cutoff - safe_margin : 2;

  const LabeledMatrix& A1 = ops["A+1"];
  const LabeledMatrix& A2 = ops["A+2"];
  const LabeledMatrix& T1 = ops["At1"];
  const LabeledMatrix& T2 = ops["At2"];
  for (const auto* M : {&A1, &A2})
    if (!shifts_total_by(*M, sp, 1)) throw Error(ErrorCode::InternalMismatch, "creation operator leaves its sector");
  for (const auto* M : {&T1, &T2})
    if (!shifts_total_by(*M, sp, -1)) throw Error(ErrorCode::InternalMismatch, "annihilation operator leaves its sector");

  const Scalar& h = ops.h;
  const LabeledMatrix Q1 = scalar_mul(h, T1) - T2;
  const LabeledMatrix& Q2 = T1;
  auto op = [&](const Generator& g) -> const LabeledMatrix& {
    switch (g.kind) {
      case GenKind::Creation: return g.i == 0 ? A1 : A2;
      case GenKind::Tilde: return g.i == 0 ? T1 : T2;
      case GenKind::Annihilation: return g.i == 0 ? Q1 : Q2;
    }
    return A1;
  };

  const int D = sp.dim();
  for (const auto& e : rel.relations()) {
    LabeledMatrix R({D});
    for (const auto& [w, c] : e.terms()) {
      LabeledMatrix t = LabeledMatrix::identity({D});
      for (const auto& g : w) t = t * op(g);
      R = R + scalar_mul(c, t);
    }
    FockResidual res;
    res.relation = e.to_string() + " = 0";
    for (int col = 0; col < D; ++col) {
      if (sp.total(col) > rep.max_total) continue;
      for (int row = 0; row < D; ++row)
        if (!R.at(row, col).is_zero()) ++res.nonzero;
    }
    rep.residuals.push_back(std::move(res));
  }
  return rep;
}

} // namespace jorcon
