#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "jorcon/errors.hpp"

namespace jorcon {

// Element a + b*sqrt(2) of Q(sqrt 2).
class QSqrt2 {
public:
  QSqrt2() = default;
  QSqrt2(long v) : a_(v) {}
  QSqrt2(mpq_class a, mpq_class b = 0) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
  }

  static QSqrt2 sqrt2() { return QSqrt2(0, 1); }

  const mpq_class& rational() const { return a_; }
  const mpq_class& radical() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_one() const { return a_ == 1 && sgn(b_) == 0; }

  QSqrt2 operator-() const { return QSqrt2(-a_, -b_); }
  QSqrt2& operator+=(const QSqrt2& o);
  QSqrt2& operator-=(const QSqrt2& o);
  QSqrt2& operator*=(const QSqrt2& o);
  QSqrt2 inverse() const;

  friend QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
  friend QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
  friend QSqrt2 operator*(QSqrt2 x, const QSqrt2& y) { return x *= y; }
  friend QSqrt2 operator/(const QSqrt2& x, const QSqrt2& y) { return x * y.inverse(); }
  friend bool operator==(const QSqrt2& x, const QSqrt2& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  // "x" or "x+y*r2" with x, y printed as integers or n/d.
  std::string to_string() const;

private:
  mpq_class a_{0};
  mpq_class b_{0};
};

enum class Var : int { P = 0, H = 1, Hp = 2 };
constexpr int kVarCount = 3;

using Exponents = std::array<int, kVarCount>;

// Multivariate polynomial over Q(sqrt 2) in p, h, h'. Terms are kept sorted in
// descending lexicographic order of (deg_p, deg_h, deg_h') with no zero
// coefficients.
class Poly {
public:
  using Term = std::pair<Exponents, QSqrt2>;

  Poly() = default;
  Poly(const QSqrt2& c);
  Poly(long c) : Poly(QSqrt2(c)) {}
  static Poly monomial(const Exponents& e, const QSqrt2& c = QSqrt2(1));
  static Poly variable(Var v, int power = 1);
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  // Constant multiple of a single monomial.
  bool is_monomial() const { return terms_.size() == 1; }
  // True when no variable other than v occurs.
  bool only_in(Var v) const;
  bool contains(Var v) const;
  int degree(Var v) const;
  int min_degree(Var v) const;
  const QSqrt2& leading_coefficient() const { return terms_.front().second; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly x, const Poly& y) { return x += y; }
  friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
  friend Poly operator*(const Poly& x, const Poly& y);
  Poly scaled(const QSqrt2& c) const;
  friend bool operator==(const Poly& x, const Poly& y) { return x.terms_ == y.terms_; }

  // Multiply by the monomial with the given (possibly negative) exponents; the
  // caller guarantees the result has nonnegative exponents.
  Poly shifted(const Exponents& e) const;

  // Substitute v := value.
  Poly specialized(Var v, const QSqrt2& value) const;
  QSqrt2 evaluate(const QSqrt2& p, const QSqrt2& h, const QSqrt2& hp) const;

  // Exact quotient by (p - 1); requires specialized(P, 1) == 0.
  Poly divided_by_p_minus_1() const;

  std::string to_string() const;

private:
  void normalize();
  std::vector<Term> terms_;
};

// Element of the fraction field Q(sqrt 2)(p, h, h') with q = p^2, stored as
// numerator / denominator. Negative powers live in the denominator. Equality
// is tested by cross-multiplication.
class Scalar {
public:
  Scalar() : num_(), den_(1) {}
  Scalar(long v) : num_(v), den_(1) {}
  Scalar(const QSqrt2& c) : num_(c), den_(1) {}
  Scalar(const mpq_class& c) : num_(QSqrt2(c)), den_(1) {}
  Scalar(Poly num, Poly den);

  static Scalar p() { return Scalar(Poly::variable(Var::P), Poly(1)); }
  static Scalar h() { return Scalar(Poly::variable(Var::H), Poly(1)); }
  static Scalar hp() { return Scalar(Poly::variable(Var::Hp), Poly(1)); }
  static Scalar sqrt2() { return Scalar(QSqrt2::sqrt2()); }
  static Scalar rational(long num, long den) { return Scalar(mpq_class(num, den)); }
  // p^k for any integer k.
  static Scalar p_power(int k);
  // q^k = p^(2k).
  static Scalar q_power(int k) { return p_power(2 * k); }
  static Scalar q() { return q_power(1); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }
  // Nonzero constant times a monomial in the numerator and denominator.
  bool is_unit_monomial() const { return num_.is_monomial() && den_.is_monomial(); }
  bool contains(Var v) const { return num_.contains(v) || den_.contains(v); }
  // Rough size used to pick simple pivots.
  std::size_t complexity() const { return num_.terms().size() + den_.terms().size(); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  friend bool operator==(const Scalar& x, const Scalar& y);
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  Scalar inverse() const;
  Scalar pow(int k) const;
  Scalar specialized(Var v, const QSqrt2& value) const;

  std::string to_string() const;

private:
  void normalize();
  Poly num_;
  Poly den_;
};

// [x]_q = (q^x - q^-x) / (q - q^-1).
Scalar q_number(int x);

// Value at q = 1 (p = 1): common (p - 1) factors are cancelled first. Throws
// PoleAtQ1 when the denominator still vanishes at p = 1.
Scalar limit_q1(const Scalar& a);
// Returns false instead of throwing.
bool has_limit_q1(const Scalar& a);

// Exact value at a rational point. Throws DivisionByZero when the denominator
// vanishes there.
QSqrt2 eval_numeric(const Scalar& a, const mpq_class& p0, const mpq_class& h0,
                    const mpq_class& hp0);

enum class Sigma : int { Boson = 1, Fermion = -1 };

constexpr int sign(Sigma s) { return static_cast<int>(s); }

} // namespace jorcon
