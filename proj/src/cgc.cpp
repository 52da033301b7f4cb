#include "jorcon/cgc.hpp"

#include "jorcon/relations.hpp"

namespace jorcon {

namespace {

void check_labels(int two_m1, int two_m2, int J, int M) {
  auto spin = [](int t) { return t == 1 || t == -1; };
  if (!spin(two_m1) || !spin(two_m2) || (J != 0 && J != 1) || M < -J || M > J)
    throw Error(ErrorCode::InvalidLabel, "invalid coupling labels (" + std::to_string(two_m1) + "/2, " +
                                             std::to_string(two_m2) + "/2 | " + std::to_string(J) + " " +
                                             std::to_string(M) + ")");
}

int index_of(int two_m) { return two_m == 1 ? 0 : 1; }

constexpr int kSpins[2] = {1, -1};

std::string spin_label(int J, int M) {
  return std::to_string(J) + "," + std::to_string(M);
}

std::string bracket_symbol(Sigma sigma, bool open) {
  if (sigma == Sigma::Boson) return open ? "[" : "]";
  return open ? "{" : "}";
}

} // namespace

Scalar cgc(int two_m1, int two_m2, int J, int M, Var param) {
  check_labels(two_m1, two_m2, J, M);
  const Scalar h(Poly::variable(param), Poly(1));
  const Scalar r = Scalar::sqrt2().inverse();
  if (two_m1 == 1 && two_m2 == 1) {
    if (J == 1 && M == 1) return Scalar(1);
    if (J == 1 && M == -1) return Scalar::rational(1, 4) * h * h;
    if (J == 0) return -h * r;
    return Scalar();
  }
  if (two_m1 == 1 && two_m2 == -1) {
    if (J == 1 && M == 0) return r;
    if (J == 1 && M == -1) return Scalar::rational(-1, 2) * h;
    if (J == 0) return r;
    return Scalar();
  }
  if (two_m1 == -1 && two_m2 == 1) {
    if (J == 1 && M == 0) return r;
    if (J == 1 && M == -1) return Scalar::rational(1, 2) * h;
    if (J == 0) return -r;
    return Scalar();
  }
  return J == 1 && M == -1 ? Scalar(1) : Scalar();
}

CgcTable cgc_table(Var param) {
  CgcTable t;
  t.param = param;
  for (int a : kSpins)
    for (int b : kSpins)
      for (auto [J, M] : {std::pair{1, 1}, {1, 0}, {1, -1}, {0, 0}}) t.entries[{a, b, J, M}] = cgc(a, b, J, M, param);
  return t;
}

std::string spinor_name(Spinor s) {
  return s == Spinor::Creation ? "A+" : "At";
}

AlgElement coupled_bracket(Spinor T, Spinor U, int J, int M, Sigma sigma, bool classical) {
  auto kind = [](Spinor s) { return s == Spinor::Creation ? GenKind::Creation : GenKind::Tilde; };
  auto c = [&](int a, int b) {
    const Scalar v = cgc(a, b, J, M);
    return classical ? v.specialized(Var::H, QSqrt2(0)) : v;
  };
  check_labels(1, 1, J, M);
  const Scalar phase(sign(sigma) * ((1 - J) % 2 == 0 ? 1 : -1));
  AlgElement out;
  for (int a : kSpins)
    for (int b : kSpins) {
      const Scalar k = c(a, b);
      if (k.is_zero()) continue;
      const Generator t{kind(T), index_of(a), 0, Side::H};
      const Generator u{kind(U), index_of(a), 0, Side::H};
      const Generator t2{kind(T), index_of(b), 0, Side::H};
      const Generator u2{kind(U), index_of(b), 0, Side::H};
      out += AlgElement::word(t, u2, k);
      out -= AlgElement::word(u, t2, phase * k);
    }
  return out;
}

AlgElement coupled_bracket(Spinor T, Spinor U, int J, int Jp, int M, int Mp, Sigma sigma, bool classical) {
  auto kind = [](Spinor s) { return s == Spinor::Creation ? GenKind::Creation : GenKind::Tilde; };
  auto spec = [&](Scalar v) {
    return classical ? v.specialized(Var::H, QSqrt2(0)).specialized(Var::Hp, QSqrt2(0)) : v;
  };
  check_labels(1, 1, J, M);
  check_labels(1, 1, Jp, Mp);
  const Scalar phase(sign(sigma) * ((2 - J - Jp) % 2 == 0 ? 1 : -1));
  AlgElement out;
  for (int a : kSpins)
    for (int b : kSpins)
      for (int ap : kSpins)
        for (int bp : kSpins) {
          const Scalar k = spec(cgc(a, b, J, M, Var::H) * cgc(ap, bp, Jp, Mp, Var::Hp));
          if (k.is_zero()) continue;
          const Generator t{kind(T), index_of(a), index_of(ap), Side::H};
          const Generator u{kind(U), index_of(b), index_of(bp), Side::H};
          const Generator u1{kind(U), index_of(a), index_of(ap), Side::H};
          const Generator t2{kind(T), index_of(b), index_of(bp), Side::H};
          out += AlgElement::word(t, u, k);
          out -= AlgElement::word(u1, t2, phase * k);
        }
  return out;
}

std::vector<CoupledCheck> verify_coupled_identities(int n, int m, Sigma sigma, bool classical) {
  const bool single = n == 2 && m == 1;
  if (!single && !(n == 2 && m == 2))
    throw Error(ErrorCode::InvalidArgument, "coupled identities are defined for (2,1) and (2,2)");
  const RelationSet rel = classical ? classical_relations(n, m, sigma, Basis::Tilde)
                                    : compact_relations_h(n, m, sigma, Basis::Tilde);
  const Reducer reducer(rel.relations());
  const bool boson = sigma == Sigma::Boson;
  const std::string open = bracket_symbol(sigma, true);
  const std::string close = bracket_symbol(sigma, false);
  std::vector<CoupledCheck> out;

  auto run = [&](const std::string& name, const AlgElement& bracket, const AlgElement& expected) {
    CoupledCheck c;
    c.name = name;
    c.value = normal_order(bracket, reducer);
    c.expected = expected;
    c.ok = c.value == expected;
    out.push_back(std::move(c));
  };
  auto label = [&](Spinor T, Spinor U) { return open + spinor_name(T) + "," + spinor_name(U) + close; };

  const Spinor Cr = Spinor::Creation;
  const Spinor Ti = Spinor::Tilde;
  if (single) {
    for (Spinor s : {Cr, Ti}) {
      if (boson) {
        run(label(s, s) + "^{0,0}", coupled_bracket(s, s, 0, 0, sigma, classical), AlgElement());
      } else {
        for (int M = -1; M <= 1; ++M)
          run(label(s, s) + "^{" + spin_label(1, M) + "}", coupled_bracket(s, s, 1, M, sigma, classical), AlgElement());
      }
    }
    for (int M = -1; M <= 1; ++M)
      run(label(Ti, Cr) + "^{" + spin_label(1, M) + "}", coupled_bracket(Ti, Cr, 1, M, sigma, classical), AlgElement());
    run(label(Ti, Cr) + "^{0,0}", coupled_bracket(Ti, Cr, 0, 0, sigma, classical),
        AlgElement::identity(Scalar::sqrt2()));
    return out;
  }

  auto dbl = [&](Spinor T, Spinor U, int J, int Jp, int M, int Mp) {
    return label(T, U) + "^{" + std::to_string(J) + std::to_string(Jp) + "}_{" + std::to_string(M) + "," +
           std::to_string(Mp) + "}";
  };
  for (Spinor s : {Cr, Ti}) {
    if (boson) {
      for (int M = -1; M <= 1; ++M) {
        run(dbl(s, s, 1, 0, M, 0), coupled_bracket(s, s, 1, 0, M, 0, sigma, classical), AlgElement());
        run(dbl(s, s, 0, 1, 0, M), coupled_bracket(s, s, 0, 1, 0, M, sigma, classical), AlgElement());
      }
    } else {
      for (int M = -1; M <= 1; ++M)
        for (int Mp = -1; Mp <= 1; ++Mp)
          run(dbl(s, s, 1, 1, M, Mp), coupled_bracket(s, s, 1, 1, M, Mp, sigma, classical), AlgElement());
      run(dbl(s, s, 0, 0, 0, 0), coupled_bracket(s, s, 0, 0, 0, 0, sigma, classical), AlgElement());
    }
  }
  for (int J = 0; J <= 1; ++J)
    for (int Jp = 0; Jp <= 1; ++Jp)
      for (int M = -J; M <= J; ++M)
        for (int Mp = -Jp; Mp <= Jp; ++Mp) {
          const bool scalar = J == 0 && Jp == 0;
          run(dbl(Ti, Cr, J, Jp, M, Mp), coupled_bracket(Ti, Cr, J, Jp, M, Mp, sigma, classical),
              scalar ? AlgElement::identity(Scalar(2)) : AlgElement());
        }
  return out;
}

} // namespace jorcon
