#pragma once

#include <optional>

#include "jorcon/matrix.hpp"

namespace jorcon {

// One GL factor: dimension, the power of q it is deformed at (q^power) and
// the deformation parameter that replaces it after contraction.
struct DeformSpec {
  int N = 1;
  int power = 1;
  Var param = Var::H;
};

// eta = param / (q^power - 1).
Scalar eta_for(int power, Var param);

LabeledMatrix build_Rq(int N, int power = 1);
LabeledMatrix build_g(int N, const Scalar& eta);
// (g^-1 (x) g^-1) R (g (x) g).
LabeledMatrix similarity_RTT(const LabeledMatrix& R, const LabeledMatrix& g);
LabeledMatrix contract_R(const DeformSpec& d);
inline LabeledMatrix contract_R(int N) { return contract_R(DeformSpec{N, 1, Var::H}); }
LabeledMatrix build_Rh_closed(int N, Var param = Var::H);

LabeledMatrix build_Cq(int N, int power = 1);
// g^t C g.
LabeledMatrix transform_C(const LabeledMatrix& C, const LabeledMatrix& g);
// Transformed C'' before the limit; N = 1 gives [1].
LabeledMatrix transformed_C(const DeformSpec& d);

struct ContractCResult {
  std::optional<LabeledMatrix> matrix;
  std::optional<PoleInfo> pole;
  bool ok() const { return matrix.has_value(); }
};
ContractCResult contract_C(const DeformSpec& d);
inline ContractCResult contract_C(int N) { return contract_C(DeformSpec{N, 1, Var::H}); }
LabeledMatrix build_Ch_closed(int N, Var param = Var::H);

// C_1^-1 (R^-1)^{t1} C_1, checked against C_2^-1 (R^{t2})^-1 C_2.
LabeledMatrix tilde_of(const LabeledMatrix& R, const LabeledMatrix& C);
LabeledMatrix build_Rtilde_q(int N, int power = 1);
LabeledMatrix build_Rhtilde_closed(int N, Var param = Var::H);
// Limit of (g^-1 (x) g^-1) tilde-R'_q (g (x) g).
LabeledMatrix contract_Rtilde(const DeformSpec& d);

bool check_triangular(const LabeledMatrix& R);
bool check_ybe(const LabeledMatrix& R);

// Matrix on the n-slot of W (x) W, W = V_n (x) V_m, identity on the m-slot,
// and the converse.
LabeledMatrix on_first_factor(const LabeledMatrix& R, int m);
LabeledMatrix on_second_factor(int n, const LabeledMatrix& S);

} // namespace jorcon
