#include <doctest.h>

#include "jorcon/rmatrix.hpp"

using namespace jorcon;

namespace {

Scalar h() { return Scalar::h(); }

// e_{ij} (x) e_{kl} coefficient, 1-based labels.
const Scalar& coeff(const LabeledMatrix& R, int i, int j, int k, int l) {
  const int N = R.dims()[0];
  return R.at((i - 1) * N + (k - 1), (j - 1) * N + (l - 1));
}

LabeledMatrix at_h0(const LabeledMatrix& a) {
  return a.map([](const Scalar& x) { return x.specialized(Var::H, QSqrt2(0)); });
}

} // namespace

TEST_CASE("standard R-matrix") {
  auto R1 = build_Rq(1);
  CHECK(R1.at(0, 0) == Scalar::q());
  auto R = build_Rq(2);
  const Scalar q = Scalar::q();
  for (int k = 0; k < 4; ++k) CHECK(R.at(k, k) == ((k == 0 || k == 3) ? q : Scalar(1)));
  CHECK(R.at(1, 2) == q - Scalar::q_power(-1));
  int nonzero = 0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) nonzero += !R.at(r, c).is_zero();
  CHECK(nonzero == 5);
  auto Rm = build_Rq(2, -1);
  CHECK(Rm.at(0, 0) == Scalar::q_power(-1));
  CHECK(Rm.at(1, 2) == Scalar::q_power(-1) - q);
}

TEST_CASE("g matrix") {
  Scalar eta = eta_for(1, Var::H);
  auto g = build_g(2, eta);
  CHECK(g.at(0, 0).is_one());
  CHECK(g.at(0, 1) == eta);
  CHECK(g.at(1, 0).is_zero());
  CHECK(build_g(3, Scalar(0)).is_identity());
  for (int N = 2; N <= 4; ++N) {
    auto gN = build_g(N, eta);
    CHECK(gN * gN == LabeledMatrix::identity({N}) + scalar_mul(Scalar(2) * eta, LabeledMatrix::unit(N, 0, N - 1)));
  }
}

TEST_CASE("similarity transform before the limit") {
  CHECK(similarity_RTT(LabeledMatrix::identity({2, 2}), build_g(2, eta_for(1, Var::H))).is_identity());
  CHECK(similarity_RTT(build_Rq(3), build_g(3, Scalar(0))) == build_Rq(3));
  auto R2 = similarity_RTT(build_Rq(2), build_g(2, eta_for(1, Var::H)));
  // entry ((1,1),(1,2)) expanded by hand: q*eta - eta = h
  CHECK(coeff(R2, 1, 1, 1, 2) == h());
  CHECK(limit_q1(coeff(R2, 1, 1, 1, 2)) == h());
}

TEST_CASE("contraction reproduces the closed form") {
  auto R2 = contract_R(2);
  const Scalar expect[4][4] = {{1, h(), -h(), h() * h()}, {0, 1, 0, h()}, {0, 0, 1, -h()}, {0, 0, 0, 1}};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) CHECK(R2.at(r, c) == expect[r][c]);
  CHECK(contract_R(1).is_identity());
  for (int N = 1; N <= 5; ++N) CHECK(contract_R(N) == build_Rh_closed(N));
  CHECK(at_h0(build_Rh_closed(2)).is_identity());
  CHECK(coeff(build_Rh_closed(4), 1, 2, 2, 4) == Scalar(2) * h());
  CHECK(coeff(build_Rh_closed(4), 2, 4, 1, 2) == Scalar(-2) * h());
  // the m-side factor contracts to the same form in h'
  CHECK(contract_R(DeformSpec{3, -1, Var::Hp}) == build_Rh_closed(3, Var::Hp));
}

TEST_CASE("C matrices") {
  CHECK(build_Cq(1).is_identity());
  auto C2 = build_Cq(2);
  CHECK(C2.at(0, 1) == -Scalar::p_power(-1));
  CHECK(C2.at(1, 0) == Scalar::p());
  auto C2at1 = C2.map([](const Scalar& x) { return limit_q1(x); });
  CHECK(C2at1 == build_Ch_closed(2).map([](const Scalar& x) { return x.specialized(Var::H, QSqrt2(0)); }));
  CHECK(transform_C(C2, build_g(2, Scalar(0))) == C2);
  for (int n = 2; n <= 5; ++n) {
    Scalar eta = eta_for(1, Var::H);
    auto expected = build_Cq(n);
    Scalar extra = Scalar::p_power(n - 1) + Scalar(n % 2 == 0 ? -1 : 1) * Scalar::p_power(1 - n);
    expected.at(n - 1, n - 1) += eta * extra;
    CHECK(transform_C(build_Cq(n), build_g(n, eta)) == expected);
  }
}

TEST_CASE("contracted C exists only for even dimension") {
  auto c2 = contract_C(2);
  REQUIRE(c2.ok());
  CHECK(c2.matrix->at(0, 1) == Scalar(-1));
  CHECK(c2.matrix->at(1, 0) == Scalar(1));
  CHECK(c2.matrix->at(1, 1) == h());
  CHECK(contract_C(1).matrix->is_identity());
  for (int N : {2, 4, 6}) {
    auto c = contract_C(N);
    REQUIRE(c.ok());
    CHECK(*c.matrix == build_Ch_closed(N));
  }
  for (int N : {3, 5}) {
    auto c = contract_C(N);
    REQUIRE_FALSE(c.ok());
    CHECK(c.pole->row == N);
    CHECK(c.pole->col == N);
  }
  auto cm = contract_C(DeformSpec{2, -1, Var::Hp});
  REQUIRE(cm.ok());
  CHECK(*cm.matrix == build_Ch_closed(2, Var::Hp));
}

TEST_CASE("tilde R matrices") {
  CHECK(build_Rtilde_q(1).at(0, 0) == Scalar::q_power(-1));
  CHECK(build_Rtilde_q(1, -1).at(0, 0) == Scalar::q());
  for (int N = 2; N <= 3; ++N) CHECK_NOTHROW(build_Rtilde_q(N));
  CHECK_NOTHROW(build_Rtilde_q(2, -1));
  auto T2 = build_Rhtilde_closed(2);
  CHECK(at_h0(T2).is_identity());
  // (2n-3) h^2 at n = 2; the d_i terms do not reach e12 (x) e12
  CHECK(coeff(T2, 1, 2, 1, 2) == h() * h());
  CHECK(coeff(T2, 1, 1, 1, 2) == h());
  CHECK(coeff(T2, 2, 2, 1, 2) == -h());
  CHECK(T2 == tilde_of(build_Rh_closed(2), build_Ch_closed(2)));
  CHECK(build_Rhtilde_closed(4) == tilde_of(build_Rh_closed(4), build_Ch_closed(4)));
  CHECK_THROWS_AS(build_Rhtilde_closed(3), Error);
  for (int N : {2, 4}) CHECK(contract_Rtilde(DeformSpec{N, 1, Var::H}) == build_Rhtilde_closed(N));
}

TEST_CASE("triangularity") {
  for (int N = 2; N <= 4; ++N) CHECK(check_triangular(contract_R(N)));
  CHECK_FALSE(check_triangular(build_Rq(2)));
  CHECK(check_triangular(LabeledMatrix::identity({2, 2})));
  CHECK(twist(contract_R(3)) == inverse(contract_R(3)));
}

TEST_CASE("Yang-Baxter equation") {
  CHECK(check_ybe(build_Rq(2)));
  CHECK(check_ybe(contract_R(2)));
  CHECK(check_ybe(contract_R(3)));
  auto bad = LabeledMatrix::identity({2, 2}) + tensor_product(LabeledMatrix::unit(2, 0, 0), LabeledMatrix::unit(2, 0, 1));
  CHECK_FALSE(check_ybe(bad));
}
