#include <doctest.h>

#include "jorcon/rmatrix.hpp"

using namespace jorcon;

TEST_CASE("matrix units and products") {
  auto e12 = LabeledMatrix::unit(2, 0, 1);
  auto e21 = LabeledMatrix::unit(2, 1, 0);
  CHECK(e12 * e21 == LabeledMatrix::unit(2, 0, 0));
  auto a = matadd(e12, scalar_mul(Scalar::h(), e21));
  CHECK(LabeledMatrix::identity({2}) * a == a);
  CHECK_THROWS_AS(matmul(e12, LabeledMatrix::identity({3})), Error);
}

TEST_CASE("tensor product") {
  CHECK(tensor_product(LabeledMatrix::identity({2}), LabeledMatrix::identity({2})) ==
        LabeledMatrix::identity({2, 2}));
  auto t = tensor_product(LabeledMatrix::unit(2, 0, 0), LabeledMatrix::unit(2, 1, 1));
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) CHECK(t.at(r, c) == Scalar(r == 1 && c == 1 ? 1 : 0));
  Scalar eta = eta_for(1, Var::H);
  auto g = build_g(2, eta);
  auto gg = tensor_product(g, g);
  auto e12 = LabeledMatrix::unit(2, 0, 1);
  auto I = LabeledMatrix::identity({2});
  auto expected = LabeledMatrix::identity({2, 2}) +
                  scalar_mul(eta, tensor_product(e12, I) + tensor_product(I, e12)) +
                  scalar_mul(eta * eta, tensor_product(e12, e12));
  CHECK(gg == expected);
}

TEST_CASE("twist and slot transposition") {
  auto e12 = LabeledMatrix::unit(2, 0, 1);
  auto e21 = LabeledMatrix::unit(2, 1, 0);
  CHECK(twist(LabeledMatrix::identity({2, 2})).is_identity());
  CHECK(twist(tensor_product(e12, e21)) == tensor_product(e21, e12));
  CHECK(transpose_slot(tensor_product(e12, e21), 1) == tensor_product(e21, e21));
  auto R = build_Rq(3);
  CHECK(transpose_slot(transpose_slot(R, 1), 1) == R);
  CHECK(transpose_slot(transpose_slot(R, 1), 2) == transpose(R));
  CHECK(transpose(R) == twist(R));
  CHECK(transpose_slot(transpose_slot(R, 2), 1) == transpose_slot(transpose_slot(R, 1), 2));
}

TEST_CASE("exact inverse") {
  Scalar eta = eta_for(1, Var::H);
  auto g3 = build_g(3, eta);
  CHECK(inverse(g3) == LabeledMatrix::identity({3}) - scalar_mul(eta, LabeledMatrix::unit(3, 0, 2)));
  auto g2 = build_g(2, eta);
  CHECK((g2 * inverse(g2)).is_identity());
  auto R = build_Rq(2);
  auto Ri = inverse(R);
  CHECK((R * Ri).is_identity());
  CHECK((Ri * R).is_identity());
  Scalar qi = Scalar::q_power(-1);
  CHECK(Ri.at(0, 0) == qi);
  CHECK(Ri.at(1, 1) == Scalar(1));
  CHECK(Ri.at(2, 2) == Scalar(1));
  CHECK(Ri.at(3, 3) == qi);
  CHECK(Ri.at(1, 2) == -(Scalar::q() - qi));
  auto Ch = build_Ch_closed(2);
  auto Chi = inverse(Ch);
  CHECK(Chi.at(0, 0) == Scalar::h());
  CHECK(Chi.at(0, 1) == Scalar(1));
  CHECK(Chi.at(1, 0) == Scalar(-1));
  CHECK(Chi.at(1, 1).is_zero());
  CHECK_THROWS_AS(inverse(LabeledMatrix::unit(2, 0, 1)), Error);
}

TEST_CASE("coupling of slot matrices") {
  auto R = build_Rh_closed(2);
  auto S = build_Rh_closed(2, Var::Hp);
  auto RS = couple(R, S);
  CHECK(transpose_slot(RS, 1) == couple(transpose_slot(R, 1), transpose_slot(S, 1)));
  CHECK(twist(RS) == couple(twist(R), twist(S)));
  CHECK(RS * couple(inverse(R), inverse(S)) == LabeledMatrix::identity({2, 2, 2, 2}));
}
