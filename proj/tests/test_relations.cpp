#include <doctest.h>

#include "jorcon/relations.hpp"

using namespace jorcon;

namespace {

using Dims = std::vector<std::pair<int, int>>;

AlgElement g(GenKind k, int i, int s, Side side) { return AlgElement::gen({k, i - 1, s - 1, side}); }

// Pusz-Woronowicz twisted canonical relations for m = 1, written with
// mu = q (bosons) or mu = q^-1 (fermions); variant 2 reverses the index order.
std::vector<AlgElement> pusz_woronowicz(int n, Sigma sigma, int variant) {
  const bool boson = sigma == Sigma::Boson;
  const Scalar mu = boson ? Scalar::q() : Scalar::q_power(-1);
  const Scalar mu_qp = variant == 1 ? mu : mu.inverse();
  const Scalar sg(sign(sigma));
  auto a = [&](int i) { return g(GenKind::Annihilation, i, 1, Side::Q); };
  auto ad = [&](int i) { return g(GenKind::Creation, i, 1, Side::Q); };
  std::vector<AlgElement> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      out.push_back(a(i) * ad(j) - sg * mu_qp * (ad(j) * a(i)));
    }
    if (!boson) {
      out.push_back(ad(i) * ad(i));
      out.push_back(a(i) * a(i));
    }
    const Scalar diag = boson ? mu_qp * mu_qp : Scalar(1);
    AlgElement e = a(i) * ad(i) - sg * diag * (ad(i) * a(i)) - AlgElement::identity();
    for (int k = 1; k <= n; ++k) {
      if (variant == 1 ? k >= i : k <= i) continue;
      e -= (mu_qp * mu_qp - Scalar(1)) * (ad(k) * a(k));
    }
    out.push_back(e);
  }
  // creation-creation and its conjugate are independent of the variant
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      out.push_back(ad(i) * ad(j) - sg * mu.inverse() * (ad(j) * ad(i)));
      out.push_back(a(j) * a(i) - sg * mu.inverse() * (a(i) * a(j)));
    }
  return out;
}

} // namespace

TEST_CASE("q-side compact and componentwise relations agree") {
  for (Sigma s : {Sigma::Boson, Sigma::Fermion})
    for (auto [n, m] : Dims{{2, 1}, {1, 2}, {2, 2}, {3, 2}})
      for (int v : {1, 2})
        for (Basis b : {Basis::Plain, Basis::Tilde}) {
          CAPTURE(n);
          CAPTURE(m);
          CAPTURE(v);
          CHECK(relation_span_equal(compact_relations_q(n, m, s, v, b), componentwise_relations_q(n, m, s, v, b)));
        }
}

TEST_CASE("variant 2 by substitution matches the displayed third relation") {
  for (Sigma s : {Sigma::Boson, Sigma::Fermion})
    for (auto [n, m] : Dims{{2, 1}, {2, 2}, {3, 2}})
      CHECK(relation_span_equal(compact_relations_q(n, m, s, 2, Basis::Plain), compact_relations_q_v2_direct(n, m, s)));
}

TEST_CASE("variants 1 and 2 differ") {
  CHECK_FALSE(relation_span_equal(compact_relations_q(2, 2, Sigma::Boson, 1, Basis::Plain),
                                  compact_relations_q(2, 2, Sigma::Boson, 2, Basis::Plain)));
}

TEST_CASE("m = 1 reproduces the twisted canonical relations") {
  for (Sigma s : {Sigma::Boson, Sigma::Fermion})
    for (int n : {2, 3, 4})
      for (int v : {1, 2}) {
        CAPTURE(n);
        CAPTURE(v);
        CHECK(relation_span_equal(compact_relations_q(n, 1, s, v, Basis::Plain).relations(), pusz_woronowicz(n, s, v)));
      }
}

TEST_CASE("h-side compact and componentwise relations agree") {
  for (Sigma s : {Sigma::Boson, Sigma::Fermion}) {
    for (auto [n, m] : Dims{{2, 1}, {1, 2}, {2, 2}, {3, 2}, {4, 2}, {3, 3}}) {
      CAPTURE(n);
      CAPTURE(m);
      CHECK(relation_span_equal(compact_relations_h(n, m, s, Basis::Plain), componentwise_relations_h(n, m, s, Basis::Plain)));
    }
    for (auto [n, m] : Dims{{2, 1}, {1, 2}, {2, 2}, {4, 2}}) {
      CAPTURE(n);
      CAPTURE(m);
      CHECK(relation_span_equal(compact_relations_h(n, m, s, Basis::Tilde), componentwise_relations_h(n, m, s, Basis::Tilde)));
    }
  }
}

TEST_CASE("dimension-1 factors carry no deformation") {
  CHECK_FALSE(relation_span_equal(compact_relations_h(2, 1, Sigma::Boson, Basis::Plain),
                                  componentwise_relations_h(2, 1, Sigma::Boson, Basis::Plain, true)));
}

TEST_CASE("m = 1 lists and the explicit (2,1) lists") {
  for (Sigma s : {Sigma::Boson, Sigma::Fermion}) {
    for (Basis b : {Basis::Plain, Basis::Tilde}) {
      CHECK(relation_span_equal(explicit_relations_21(s, b), compact_relations_h(2, 1, s, b)));
      CHECK(relation_span_equal(componentwise_relations_h_m1(4, s, b), compact_relations_h(4, 1, s, b)));
    }
    CHECK(relation_span_equal(componentwise_relations_h_m1(3, s, Basis::Plain), compact_relations_h(3, 1, s, Basis::Plain)));
  }
}

TEST_CASE("contraction of the q relations gives the h relations") {
  for (Sigma s : {Sigma::Boson, Sigma::Fermion}) {
    for (auto [n, m] : Dims{{2, 1}, {1, 2}, {2, 2}, {3, 2}})
      for (int v : {1, 2}) {
        CAPTURE(n);
        CAPTURE(m);
        CHECK(relation_span_equal(contracted_relations(n, m, s, v, Basis::Plain), compact_relations_h(n, m, s, Basis::Plain)));
      }
    for (auto [n, m] : Dims{{2, 1}, {2, 2}})
      for (int v : {1, 2})
        CHECK(relation_span_equal(contracted_relations(n, m, s, v, Basis::Tilde), compact_relations_h(n, m, s, Basis::Tilde)));
  }
}

TEST_CASE("the tilde basis has a pole for odd n") {
  try {
    contracted_relations(3, 1, Sigma::Boson, 1, Basis::Tilde);
    FAIL("expected a pole");
  } catch (const PoleAtQ1& e) {
    CHECK(e.info().context.find("At2 A+1") != std::string::npos);
    CHECK(e.info().row == 3);
    CHECK(e.info().col == 3);
  }
  CHECK_THROWS_AS(compact_relations_h(3, 1, Sigma::Boson, Basis::Tilde), Error);
  try {
    compact_relations_h(3, 2, Sigma::Fermion, Basis::Tilde);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedDimension);
  }
}

TEST_CASE("classical limit") {
  for (Sigma s : {Sigma::Boson, Sigma::Fermion})
    for (Basis b : {Basis::Plain, Basis::Tilde}) {
      CHECK(relation_span_equal(specialize_classical(compact_relations_h(2, 2, s, b)), classical_relations(2, 2, s, b)));
      CHECK_FALSE(relation_span_equal(compact_relations_h(2, 2, s, b), classical_relations(2, 2, s, b)));
    }
}

TEST_CASE("normal ordering") {
  const Generator P1{GenKind::Creation, 0, 0, Side::H};
  const Generator P2{GenKind::Creation, 1, 0, Side::H};
  const Generator T1{GenKind::Tilde, 0, 0, Side::H};
  const Generator T2{GenKind::Tilde, 1, 0, Side::H};
  const Scalar h = Scalar::h();

  const auto tilde = compact_relations_h(2, 1, Sigma::Boson, Basis::Tilde);
  const AlgElement expect = AlgElement::word(P2, T2) +
                            h * (AlgElement::identity() - AlgElement::word(P1, T2) + AlgElement::word(P2, T1) +
                                 h * AlgElement::word(P1, T1));
  CHECK(normal_order(AlgElement::word(T2, P2), tilde) == expect);

  const auto plain = compact_relations_h(2, 1, Sigma::Boson, Basis::Plain);
  CHECK(normal_order(AlgElement::word(P2, P1), plain) == AlgElement::word(P1, P2) - h * AlgElement::word(P1, P1));
}

TEST_CASE("structure coefficients") {
  const auto c = structure_coeffs(4, 1);
  CHECK(c.d == std::vector<int>{1, 2, 2, 1});
  CHECK(c.dm == std::vector<int>{0});
}
