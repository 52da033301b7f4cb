#include <doctest.h>

#include "jorcon/fock.hpp"
#include "jorcon/relations.hpp"

using namespace jorcon;

TEST_CASE("Fock space layout") {
  const auto b = make_fock_space(Sigma::Boson, 6);
  CHECK(b.dim() == 28);
  CHECK(b.states.front() == std::pair{0, 0});
  CHECK(b.states[1] == std::pair{0, 1});
  CHECK(make_fock_space(Sigma::Fermion, 6).dim() == 4);
  CHECK_THROWS_AS(make_fock_space(Sigma::Boson, 1), Error);
}

TEST_CASE("classical ladder operators") {
  const auto f = build_classical_ops(Sigma::Fermion, 2);
  CHECK((f["a+1"] * f["a+1"]).is_zero());
  CHECK((f["a1"] * f["a+2"] + f["a+2"] * f["a1"]).is_zero());
  CHECK((f["a2"] * f["a+2"] + f["a+2"] * f["a2"]).is_identity());
  CHECK((f["J+"] * f["J-"] - f["J-"] * f["J+"]) == scalar_mul(Scalar(2), f["J0"]));

  const auto b = build_classical_ops(Sigma::Boson, 3);
  const auto& sp = b.space;
  // J+|0,2> = 2|1,1> in the rescaled basis
  CHECK(b["J+"].at(sp.index(1, 1), sp.index(0, 2)) == Scalar(2));
  CHECK((b["J+"] * b["J-"] - b["J-"] * b["J+"]) == scalar_mul(Scalar(2), b["J0"]));
}

TEST_CASE("realizations at h = 0") {
  const auto f = build_aizawa(Sigma::Boson, 4, Scalar(0));
  CHECK(f["A+1"] == f["a+1"]);
  CHECK(f["A+2"] == f["a+2"]);
  CHECK(f["At1"] == f["a2"]);
  CHECK(f["At2"] == scalar_mul(Scalar(-1), f["a1"]));
}

TEST_CASE("fermionic realization is linear in h") {
  const auto f = build_aizawa(Sigma::Fermion, 2);
  const LabeledMatrix expect = scalar_mul(Scalar(-1), f["a1"]) - scalar_mul(Scalar(2) * Scalar::h(), f["a2"] * f["J0"]);
  CHECK(f["At2"] == expect);
}

TEST_CASE("bosonic series truncates on the one-quantum sector") {
  const auto f = build_aizawa(Sigma::Boson, 3);
  const auto& sp = f.space;
  // A+1 |0,0> = |1,0>: (1 - h/2 J+)^-1 acts on the one-quantum sector
  CHECK(f["A+1"].at(sp.index(1, 0), sp.index(0, 0)) == Scalar(1));
  CHECK(f["A+1"].at(sp.index(2, 0), sp.index(0, 1)) == Scalar::h() / Scalar(2));
}

TEST_CASE("realizations satisfy the (2,1) relations") {
  for (Sigma s : {Sigma::Boson, Sigma::Fermion})
    for (Basis b : {Basis::Tilde, Basis::Plain}) {
      const auto rep = verify_on_fock(compact_relations_h(2, 1, s, b), build_aizawa(s, 6));
      CHECK(rep.ok());
      for (const auto& r : rep.residuals) {
        CAPTURE(r.relation);
        CHECK(r.nonzero == 0);
      }
      if (s == Sigma::Boson) CHECK(rep.max_total == 4);
    }
}

TEST_CASE("classical limit on Fock space") {
  for (Sigma s : {Sigma::Boson, Sigma::Fermion}) {
    const auto rel = specialize_classical(compact_relations_h(2, 1, s, Basis::Tilde));
    CHECK(verify_on_fock(rel, build_aizawa(s, 5, Scalar(0))).ok());
  }
}

TEST_CASE("wrong statistics fail") {
  const auto rep = verify_on_fock(compact_relations_h(2, 1, Sigma::Boson, Basis::Tilde), build_aizawa(Sigma::Boson, 5, Scalar(0)));
  CHECK_FALSE(rep.ok());
}

TEST_CASE("truncation guard") {
  try {
    verify_on_fock(compact_relations_h(2, 1, Sigma::Boson, Basis::Tilde), build_aizawa(Sigma::Boson, 3));
    FAIL("expected TruncationTooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TruncationTooSmall);
  }
}
