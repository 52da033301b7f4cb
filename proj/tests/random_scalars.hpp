#pragma once

#include <random>

#include "jorcon/scalar.hpp"

namespace jorcon::testing {

inline QSqrt2 random_coefficient(std::mt19937& rng, bool with_radical = true) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  mpq_class a(num(rng), den(rng));
  mpq_class b = with_radical && rng() % 3 == 0 ? mpq_class(num(rng), den(rng)) : mpq_class(0);
  return QSqrt2(a, b);
}

inline Poly random_poly(std::mt19937& rng, int terms, int max_deg, bool p_only = false) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::vector<Poly::Term> out;
  for (int k = 0; k < terms; ++k) {
    Exponents e{deg(rng), p_only ? 0 : deg(rng) / 2, p_only ? 0 : deg(rng) / 3};
    out.emplace_back(e, random_coefficient(rng));
  }
  return Poly::from_terms(std::move(out));
}

inline Scalar random_scalar(std::mt19937& rng) {
  Poly num = random_poly(rng, 1 + rng() % 3, 3);
  Poly den;
  while (den.is_zero()) den = random_poly(rng, 1 + rng() % 2, 2, rng() % 2 == 0);
  return Scalar(num, den);
}

} // namespace jorcon::testing
