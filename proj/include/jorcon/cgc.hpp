#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "jorcon/algebra.hpp"

namespace jorcon {

// Spin projections are passed doubled: two_m = +1 for m = 1/2, -1 for m = -1/2.
// Component m = 1/2 is generator index 1 (0-based 0).
Scalar cgc(int two_m1, int two_m2, int J, int M, Var param = Var::H);

struct CgcTable {
  Var param = Var::H;
  // (2 m1, 2 m2, J, M) -> coefficient, all sixteen cells
  std::map<std::tuple<int, int, int, int>, Scalar> entries;
};
CgcTable cgc_table(Var param = Var::H);

enum class Spinor { Creation, Tilde };
std::string spinor_name(Spinor s);

// [T, U}^J_M for the (2,1) spinors.
AlgElement coupled_bracket(Spinor T, Spinor U, int J, int M, Sigma sigma, bool classical = false);
// [T, U}^{JJ'}_{MM'} for the (2,2) double spinors.
AlgElement coupled_bracket(Spinor T, Spinor U, int J, int Jp, int M, int Mp, Sigma sigma, bool classical = false);

struct CoupledCheck {
  std::string name;
  AlgElement value;     // normal-ordered bracket
  AlgElement expected;
  bool ok = false;
};

// Runs every displayed coupled identity for (n, m) = (2,1) or (2,2). With
// `classical` both the coefficients and the relations are taken at h = h' = 0.
std::vector<CoupledCheck> verify_coupled_identities(int n, int m, Sigma sigma, bool classical = false);

} // namespace jorcon
