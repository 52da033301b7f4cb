#include "jorcon/scalar.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace jorcon {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::PoleAtQ1: return "PoleAtQ1";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::InternalMismatch: return "InternalMismatch";
    case ErrorCode::MissingRewriteRule: return "MissingRewriteRule";
    case ErrorCode::InvalidLabel: return "InvalidLabel";
    case ErrorCode::InvalidCutoff: return "InvalidCutoff";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

namespace {

std::string pole_message(const PoleInfo& info) {
  std::ostringstream os;
  os << "pole at q = 1";
  if (!info.context.empty()) os << " in " << info.context;
  if (info.row > 0) os << " at entry (" << info.row << "," << info.col << ")";
  if (!info.coefficient.empty()) os << ": " << info.coefficient;
  return os.str();
}

} // namespace

PoleAtQ1::PoleAtQ1(PoleInfo info)
  : Error(ErrorCode::PoleAtQ1, pole_message(info)), info_(std::move(info)) {}

// ---------------------------------------------------------------- QSqrt2

QSqrt2& QSqrt2::operator+=(const QSqrt2& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QSqrt2& QSqrt2::operator-=(const QSqrt2& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) {
  if (sgn(b_) == 0 && sgn(o.b_) == 0) {
    a_ *= o.a_;
    return *this;
  }
  mpq_class a = a_ * o.a_ + 2 * b_ * o.b_;
  mpq_class b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QSqrt2 QSqrt2::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero in Q(sqrt2)");
  if (sgn(b_) == 0) return QSqrt2(1 / a_);
  mpq_class norm = a_ * a_ - 2 * b_ * b_;
  return QSqrt2(a_ / norm, -b_ / norm);
}

std::string QSqrt2::to_string() const {
  if (sgn(b_) == 0) return a_.get_str();
  std::string rad = (b_ == 1 ? std::string() : b_ == -1 ? std::string("-") : b_.get_str() + "*") + "r2";
  if (sgn(a_) == 0) return rad;
  if (rad.front() == '-') return a_.get_str() + rad;
  return a_.get_str() + "+" + rad;
}

// ---------------------------------------------------------------- univariate helpers

namespace {

using Dense = std::vector<QSqrt2>;

void trim(Dense& d) {
  while (!d.empty() && d.back().is_zero()) d.pop_back();
}

// Quotient and remainder over the field Q(sqrt 2).
std::pair<Dense, Dense> divmod(Dense a, const Dense& b) {
  trim(a);
  Dense q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, QSqrt2());
  const QSqrt2 lead_inv = b.back().inverse();
  for (std::size_t k = a.size(); k-- >= b.size();) {
    if (a[k].is_zero()) continue;
    QSqrt2 c = a[k] * lead_inv;
    std::size_t shift = k - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    if (k == 0) break;
  }
  trim(a);
  trim(q);
  return {q, a};
}

Dense monic(Dense a) {
  trim(a);
  if (a.empty()) return a;
  QSqrt2 inv = a.back().inverse();
  for (auto& c : a) c *= inv;
  return a;
}

Dense gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

Exponents without(const Exponents& e, Var v) {
  Exponents r = e;
  r[static_cast<int>(v)] = 0;
  return r;
}

// Splits a polynomial into univariate coefficients in v keyed by the
// remaining exponents.
std::map<Exponents, Dense> groups(const Poly& a, Var v) {
  std::map<Exponents, Dense> out;
  const int vi = static_cast<int>(v);
  for (const auto& [e, c] : a.terms()) {
    Dense& d = out[without(e, v)];
    if (d.size() <= static_cast<std::size_t>(e[vi])) d.resize(e[vi] + 1);
    d[e[vi]] = c;
  }
  return out;
}

Dense as_dense(const Poly& a, Var v) {
  auto g = groups(a, v);
  return g.empty() ? Dense{} : g.begin()->second;
}

Poly from_groups(const std::map<Exponents, Dense>& g, Var v) {
  std::vector<Poly::Term> terms;
  const int vi = static_cast<int>(v);
  for (const auto& [e, d] : g) {
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (d[k].is_zero()) continue;
      Exponents t = e;
      t[vi] = static_cast<int>(k);
      terms.emplace_back(t, d[k]);
    }
  }
  return Poly::from_terms(std::move(terms));
}

// gcd of a univariate polynomial `u` (in v) with all coefficients of `a`.
Dense content_gcd(const Dense& u, const Poly& a, Var v) {
  Dense g = monic(u);
  for (const auto& [e, d] : groups(a, v)) {
    if (g.size() <= 1) break;
    g = gcd(g, d);
  }
  return g;
}

Poly exact_quotient(const Poly& a, const Dense& divisor, Var v) {
  auto g = groups(a, v);
  for (auto& [e, d] : g) {
    auto [q, r] = divmod(d, divisor);
    if (!r.empty()) throw Error(ErrorCode::InternalMismatch, "inexact polynomial quotient");
    d = std::move(q);
  }
  return from_groups(g, v);
}

bool term_order(const Poly::Term& x, const Poly::Term& y) {
  return x.first > y.first;
}

QSqrt2 power(const QSqrt2& x, int k) {
  QSqrt2 r(1);
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

} // namespace

// ---------------------------------------------------------------- Poly

Poly::Poly(const QSqrt2& c) {
  if (!c.is_zero()) terms_.emplace_back(Exponents{0, 0, 0}, c);
}

Poly Poly::monomial(const Exponents& e, const QSqrt2& c) {
  Poly r;
  if (!c.is_zero()) r.terms_.emplace_back(e, c);
  return r;
}

Poly Poly::variable(Var v, int power) {
  Exponents e{0, 0, 0};
  e[static_cast<int>(v)] = power;
  return monomial(e);
}

Poly Poly::from_terms(std::vector<Term> terms) {
  Poly r;
  r.terms_ = std::move(terms);
  r.normalize();
  return r;
}

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(), term_order);
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first) {
      merged.back().second += t.second;
    } else {
      if (!merged.empty() && merged.back().second.is_zero()) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().second.is_zero()) merged.pop_back();
  terms_ = std::move(merged);
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Exponents{0, 0, 0});
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == Exponents{0, 0, 0} && terms_[0].second.is_one();
}

bool Poly::only_in(Var v) const {
  const int vi = static_cast<int>(v);
  for (const auto& [e, c] : terms_)
    for (int k = 0; k < kVarCount; ++k)
      if (k != vi && e[k] != 0) return false;
  return true;
}

bool Poly::contains(Var v) const {
  const int vi = static_cast<int>(v);
  return std::any_of(terms_.begin(), terms_.end(), [vi](const Term& t) { return t.first[vi] != 0; });
}

int Poly::degree(Var v) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first[static_cast<int>(v)]);
  return d;
}

int Poly::min_degree(Var v) const {
  if (terms_.empty()) return 0;
  int d = terms_.front().first[static_cast<int>(v)];
  for (const auto& t : terms_) d = std::min(d, t.first[static_cast<int>(v)]);
  return d;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->first > j->first)) {
      merged.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->first > i->first) {
      merged.push_back(*j++);
    } else {
      QSqrt2 c = i->second + j->second;
      if (!c.is_zero()) merged.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& x, const Poly& y) {
  if (x.is_zero() || y.is_zero()) return Poly();
  std::vector<Poly::Term> out;
  out.reserve(x.terms_.size() * y.terms_.size());
  for (const auto& [ex, cx] : x.terms_) {
    for (const auto& [ey, cy] : y.terms_) {
      Exponents e{ex[0] + ey[0], ex[1] + ey[1], ex[2] + ey[2]};
      out.emplace_back(e, cx * cy);
    }
  }
  return Poly::from_terms(std::move(out));
}

Poly Poly::scaled(const QSqrt2& c) const {
  if (c.is_zero()) return Poly();
  Poly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

Poly Poly::shifted(const Exponents& e) const {
  Poly r = *this;
  for (auto& t : r.terms_)
    for (int k = 0; k < kVarCount; ++k) t.first[k] += e[k];
  return r;
}

Poly Poly::specialized(Var v, const QSqrt2& value) const {
  const int vi = static_cast<int>(v);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) {
    Exponents t = e;
    t[vi] = 0;
    out.emplace_back(t, c * power(value, e[vi]));
  }
  return from_terms(std::move(out));
}

QSqrt2 Poly::evaluate(const QSqrt2& p, const QSqrt2& h, const QSqrt2& hp) const {
  QSqrt2 sum;
  for (const auto& [e, c] : terms_) sum += c * power(p, e[0]) * power(h, e[1]) * power(hp, e[2]);
  return sum;
}

Poly Poly::divided_by_p_minus_1() const {
  auto g = groups(*this, Var::P);
  for (auto& [e, d] : g) {
    // synthetic division by (p - 1)
    Dense q(d.size() > 0 ? d.size() - 1 : 0);
    QSqrt2 carry;
    for (std::size_t k = d.size(); k-- > 1;) {
      carry += d[k];
      q[k - 1] = carry;
    }
    if (!(carry + (d.empty() ? QSqrt2() : d[0])).is_zero())
      throw Error(ErrorCode::InternalMismatch, "polynomial not divisible by (p-1)");
    d = std::move(q);
  }
  return from_groups(g, Var::P);
}

namespace {

std::string monomial_string(const Exponents& e) {
  static const char* names[kVarCount] = {"p", "h", "h'"};
  std::string s;
  for (int k = 0; k < kVarCount; ++k) {
    if (e[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[k];
    if (e[k] != 1) s += "^" + std::to_string(e[k]);
  }
  return s;
}

} // namespace

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono = monomial_string(e);
    QSqrt2 coef = c;
    bool negative = false;
    if (sgn(coef.radical()) == 0 ? sgn(coef.rational()) < 0
                                 : (sgn(coef.rational()) <= 0 && sgn(coef.radical()) < 0)) {
      negative = true;
      coef = -coef;
    }
    std::string cs = coef.to_string();
    bool compound = sgn(coef.rational()) != 0 && sgn(coef.radical()) != 0;
    std::string term;
    if (mono.empty()) {
      term = cs;
    } else if (coef.is_one()) {
      term = mono;
    } else {
      term = (compound ? "(" + cs + ")" : cs) + "*" + mono;
    }
    if (first) {
      out = negative ? "-" + term : term;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void Scalar::normalize() {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Exponents shift{0, 0, 0};
  bool any = false;
  for (int k = 0; k < kVarCount; ++k) {
    Var v = static_cast<Var>(k);
    shift[k] = -std::min(num_.min_degree(v), den_.min_degree(v));
    any = any || shift[k] != 0;
  }
  if (any) {
    num_ = num_.shifted(shift);
    den_ = den_.shifted(shift);
  }
  // Cancel common factors whenever one side is univariate. This keeps every
  // quantity with a p-only denominator in lowest terms.
  for (int k = 0; k < kVarCount; ++k) {
    Var v = static_cast<Var>(k);
    if (!den_.is_constant() && den_.only_in(v)) {
      Dense g = content_gcd(as_dense(den_, v), num_, v);
      if (g.size() > 1) {
        num_ = exact_quotient(num_, g, v);
        den_ = exact_quotient(den_, g, v);
      }
    } else if (!num_.is_constant() && num_.only_in(v)) {
      Dense g = content_gcd(as_dense(num_, v), den_, v);
      if (g.size() > 1) {
        num_ = exact_quotient(num_, g, v);
        den_ = exact_quotient(den_, g, v);
      }
    }
  }
  const QSqrt2& lead = den_.leading_coefficient();
  if (!lead.is_one()) {
    QSqrt2 inv = lead.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

Scalar Scalar::p_power(int k) {
  if (k >= 0) return Scalar(Poly::variable(Var::P, k), Poly(1));
  return Scalar(Poly(1), Poly::variable(Var::P, -k));
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    *this = Scalar(num_ + o.num_, den_);
  } else {
    *this = Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar();
  *this = Scalar(num_ * o.num_, den_ * o.den_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero scalar");
  *this = Scalar(num_ * o.den_, den_ * o.num_);
  return *this;
}

bool operator==(const Scalar& x, const Scalar& y) {
  if (x.den_ == y.den_) return x.num_ == y.num_;
  return x.num_ * y.den_ == y.num_ * x.den_;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero scalar");
  return Scalar(den_, num_);
}

Scalar Scalar::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar r(1);
  for (int i = 0; i < k; ++i) r *= *this;
  return r;
}

Scalar Scalar::specialized(Var v, const QSqrt2& value) const {
  Poly d = den_.specialized(v, value);
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "denominator vanishes under substitution");
  return Scalar(num_.specialized(v, value), d);
}

std::string Scalar::to_string() const {
  if (den_.is_one()) return num_.to_string();
  auto wrap = [](const Poly& x) {
    std::string s = x.to_string();
    return x.terms().size() > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

Scalar q_number(int x) {
  return (Scalar::q_power(x) - Scalar::q_power(-x)) / (Scalar::q() - Scalar::q_power(-1));
}

Scalar limit_q1(const Scalar& a) {
  Poly n = a.num();
  Poly d = a.den();
  const QSqrt2 one(1);
  for (;;) {
    Poly n1 = n.specialized(Var::P, one);
    Poly d1 = d.specialized(Var::P, one);
    if (!d1.is_zero()) return Scalar(n1, d1);
    if (!n1.is_zero()) {
      PoleInfo info;
      info.coefficient = a.to_string();
      throw PoleAtQ1(info);
    }
    n = n.divided_by_p_minus_1();
    d = d.divided_by_p_minus_1();
  }
}

bool has_limit_q1(const Scalar& a) {
  try {
    (void)limit_q1(a);
    return true;
  } catch (const PoleAtQ1&) {
    return false;
  }
}

QSqrt2 eval_numeric(const Scalar& a, const mpq_class& p0, const mpq_class& h0, const mpq_class& hp0) {
  const QSqrt2 p(p0), h(h0), hp(hp0);
  QSqrt2 d = a.den().evaluate(p, h, hp);
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "denominator vanishes at evaluation point");
  return a.num().evaluate(p, h, hp) / d;
}

} // namespace jorcon
