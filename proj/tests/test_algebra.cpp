#include <doctest.h>

#include "jorcon/algebra.hpp"

using namespace jorcon;

namespace {

Generator P(int i, int s = 1) { return {GenKind::Creation, i - 1, s - 1, Side::H}; }
Generator Q(int i, int s = 1) { return {GenKind::Annihilation, i - 1, s - 1, Side::H}; }
Generator T(int i, int s = 1) { return {GenKind::Tilde, i - 1, s - 1, Side::H}; }

} // namespace

TEST_CASE("generator order puts creations first") {
  CHECK(P(2) < Q(1));
  CHECK(Q(2) < T(1));
  CHECK(P(1, 2) < P(2, 1));
  CHECK(is_out_of_order({Q(1), P(1)}));
  CHECK_FALSE(is_out_of_order({P(1), Q(1)}));
  CHECK_FALSE(is_out_of_order({P(1), P(1)}));
}

TEST_CASE("generator names") {
  CHECK(P(1, 1).to_string() == "A+_{11}");
  CHECK(Generator{GenKind::Annihilation, 0, 1, Side::Q}.to_string() == "A'_{12}");
  CHECK(Generator{GenKind::Tilde, 1, 0, Side::Transformed}.to_string() == "At''_{21}");
}

TEST_CASE("products and brackets") {
  const auto p1 = AlgElement::gen(P(1));
  const auto p2 = AlgElement::gen(P(2));
  const auto e = bracket(p1, p2, Sigma::Fermion, Scalar::q());
  CHECK(e.coefficient({P(1), P(2)}) == Scalar(1));
  CHECK(e.coefficient({P(2), P(1)}) == Scalar::q());
  CHECK_THROWS_AS((p1 * p2) * p1 * p1, Error);
  CHECK((e - e).is_zero());
  CHECK(e.degree() == 2);
}

TEST_CASE("to_string lists out-of-order words first") {
  AlgElement e = AlgElement::word(P(1), Q(1)) + AlgElement::word(Q(1), P(1)) - AlgElement::identity();
  CHECK(e.to_string() == "A_{11} A+_{11} + A+_{11} A_{11} - I");
  AlgElement f = Scalar::h() * AlgElement::gen(P(1)) - Scalar(2) * AlgElement::gen(P(2));
  CHECK(f.to_string() == "h*A+_{11} - 2*A+_{21}");
}

TEST_CASE("reducer spans") {
  const auto rel1 = AlgElement::word(Q(1), P(1)) - AlgElement::word(P(1), Q(1)) - AlgElement::identity();
  const auto rel2 = AlgElement::word(Q(2), P(1)) - Scalar::h() * AlgElement::word(P(1), Q(2));
  Reducer r({rel1, rel2, rel1 + rel2});
  CHECK(r.rank() == 2);
  CHECK(r.contains(Scalar(3) * rel1 - Scalar::h() * rel2));
  CHECK_FALSE(r.contains(AlgElement::identity()));
  CHECK(normal_order(AlgElement::word(Q(1), P(1)), r) == AlgElement::word(P(1), Q(1)) + AlgElement::identity());
  CHECK_THROWS_AS(normal_order(AlgElement::word(Q(2), P(2)), r), Error);
  try {
    normal_order(AlgElement::word(Q(2), P(2)), r);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingRewriteRule);
  }
  CHECK(relation_span_equal({rel1, rel2}, {rel1 + rel2, rel1 - rel2}));
  CHECK_FALSE(relation_span_equal({rel1, rel2}, {rel1}));
}

TEST_CASE("substitution is linear") {
  auto sub = [](const Generator& g) {
    if (g.kind != GenKind::Annihilation) return AlgElement::gen(g);
    return AlgElement::gen(T(g.i + 1)) + Scalar::h() * AlgElement::gen(T(1));
  };
  const auto e = AlgElement::word(Q(2), P(1)).substitute(sub);
  CHECK(e == AlgElement::word(T(2), P(1)) + Scalar::h() * AlgElement::word(T(1), P(1)));
}
