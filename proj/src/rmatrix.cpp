#include "jorcon/rmatrix.hpp"

namespace jorcon {

namespace {

Scalar param_scalar(Var v) {
  return Scalar(Poly::variable(v), Poly(1));
}

void require_dim(int N) {
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
}

void add_unit_pair(LabeledMatrix& out, int N, int i, int j, int k, int l, const Scalar& c) {
  // c * e_{ij} (x) e_{kl}, 0-based
  out.at(i * N + k, j * N + l) += c;
}

} // namespace

Scalar eta_for(int power, Var param) {
  return param_scalar(param) / (Scalar::q_power(power) - Scalar(1));
}

LabeledMatrix build_Rq(int N, int power) {
  require_dim(N);
  const Scalar qp = Scalar::q_power(power);
  const Scalar diff = qp - Scalar::q_power(-power);
  LabeledMatrix R({N, N});
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (i == j) add_unit_pair(R, N, i, i, i, i, qp);
      else add_unit_pair(R, N, i, i, j, j, Scalar(1));
      if (i < j) add_unit_pair(R, N, i, j, j, i, diff);
    }
  return R;
}

LabeledMatrix build_g(int N, const Scalar& eta) {
  require_dim(N);
  LabeledMatrix g = LabeledMatrix::identity({N});
  g.at(0, N - 1) += eta;
  return g;
}

LabeledMatrix similarity_RTT(const LabeledMatrix& R, const LabeledMatrix& g) {
  const LabeledMatrix gi = inverse(g);
  return tensor_product(gi, gi) * R * tensor_product(g, g);
}

LabeledMatrix contract_R(const DeformSpec& d) {
  require_dim(d.N);
  if (d.N == 1) return LabeledMatrix::identity({1, 1});
  const LabeledMatrix g = build_g(d.N, eta_for(d.power, d.param));
  return limit_q1(similarity_RTT(build_Rq(d.N, d.power), g), "R''");
}

LabeledMatrix build_Rh_closed(int N, Var param) {
  require_dim(N);
  LabeledMatrix R = LabeledMatrix::identity({N, N});
  if (N == 1) return R;
  const Scalar h = param_scalar(param);
  const int n = N - 1;
  add_unit_pair(R, N, 0, 0, 0, n, h);
  add_unit_pair(R, N, 0, n, 0, 0, -h);
  add_unit_pair(R, N, 0, n, n, n, h);
  add_unit_pair(R, N, n, n, 0, n, -h);
  for (int i = 1; i < n; ++i) {
    add_unit_pair(R, N, 0, i, i, n, Scalar(2) * h);
    add_unit_pair(R, N, i, n, 0, i, Scalar(-2) * h);
  }
  add_unit_pair(R, N, 0, n, 0, n, h * h);
  return R;
}

LabeledMatrix build_Cq(int N, int power) {
  require_dim(N);
  LabeledMatrix C({N});
  for (int i = 1; i <= N; ++i) {
    const int sign = (N - i) % 2 == 0 ? 1 : -1;
    C.at(i - 1, N - i) = Scalar(sign) * Scalar::p_power(-power * (N - 2 * i + 1));
  }
  return C;
}

LabeledMatrix transform_C(const LabeledMatrix& C, const LabeledMatrix& g) {
  return transpose(g) * C * g;
}

LabeledMatrix transformed_C(const DeformSpec& d) {
  require_dim(d.N);
  if (d.N == 1) return LabeledMatrix::identity({1});
  return transform_C(build_Cq(d.N, d.power), build_g(d.N, eta_for(d.power, d.param)));
}

ContractCResult contract_C(const DeformSpec& d) {
  ContractCResult out;
  try {
    out.matrix = limit_q1(transformed_C(d), "C''");
  } catch (const PoleAtQ1& e) {
    out.pole = e.info();
  }
  return out;
}

LabeledMatrix build_Ch_closed(int N, Var param) {
  require_dim(N);
  LabeledMatrix C({N});
  if (N == 1) {
    C.at(0, 0) = Scalar(1);
    return C;
  }
  for (int i = 1; i <= N; ++i) C.at(i - 1, N - i) = Scalar(i % 2 == 0 ? 1 : -1);
  C.at(N - 1, N - 1) += Scalar(N - 1) * param_scalar(param);
  return C;
}

LabeledMatrix tilde_of(const LabeledMatrix& R, const LabeledMatrix& C) {
  const int N = C.size();
  const LabeledMatrix I = LabeledMatrix::identity({N});
  const LabeledMatrix C1 = tensor_product(C, I);
  const LabeledMatrix C2 = tensor_product(I, C);
  LabeledMatrix first = inverse(C1) * transpose_slot(inverse(R), 1) * C1;
  LabeledMatrix second = inverse(C2) * inverse(transpose_slot(R, 2)) * C2;
  if (first != second)
    throw Error(ErrorCode::InternalMismatch, "the two tilde-R expressions differ");
  return first;
}

LabeledMatrix build_Rtilde_q(int N, int power) {
  return tilde_of(build_Rq(N, power), build_Cq(N, power));
}

LabeledMatrix build_Rhtilde_closed(int N, Var param) {
  require_dim(N);
  if (N == 1) return LabeledMatrix::identity({1, 1});
  if (N % 2 != 0)
    throw Error(ErrorCode::UnsupportedDimension, "tilde R_h exists only for even dimension");
  const Scalar h = param_scalar(param);
  LabeledMatrix R = LabeledMatrix::identity({N, N});
  const int n = N - 1;
  for (int i = 1; i <= N; ++i) {
    const int d = 2 - (i == 1) - (i == N);
    if (d == 0) continue;
    const Scalar c = Scalar(i % 2 == 0 ? -d : d) * h;
    const int ip = N - i;  // 0-based i'
    add_unit_pair(R, N, 0, i - 1, 0, ip, c);
    add_unit_pair(R, N, i - 1, n, ip, n, c);
  }
  add_unit_pair(R, N, 0, n, 0, n, Scalar(2 * N - 3) * h * h);
  if (tilde_of(build_Rh_closed(N, param), build_Ch_closed(N, param)) != R)
    throw Error(ErrorCode::InternalMismatch, "closed tilde R_h disagrees with its C-conjugated form");
  return R;
}

LabeledMatrix contract_Rtilde(const DeformSpec& d) {
  require_dim(d.N);
  if (d.N == 1) return LabeledMatrix::identity({1, 1});
  const LabeledMatrix g = build_g(d.N, eta_for(d.power, d.param));
  return limit_q1(similarity_RTT(build_Rtilde_q(d.N, d.power), g), "tilde R''");
}

bool check_triangular(const LabeledMatrix& R) {
  return (twist(R) * R).is_identity();
}

bool check_ybe(const LabeledMatrix& R) {
  const LabeledMatrix R12 = embed_pair(R, 0, 1);
  const LabeledMatrix R13 = embed_pair(R, 0, 2);
  const LabeledMatrix R23 = embed_pair(R, 1, 2);
  return R12 * R13 * R23 == R23 * R13 * R12;
}

LabeledMatrix on_first_factor(const LabeledMatrix& R, int m) {
  return couple(R, LabeledMatrix::identity({m, m}));
}

LabeledMatrix on_second_factor(int n, const LabeledMatrix& S) {
  return couple(LabeledMatrix::identity({n, n}), S);
}

} // namespace jorcon
