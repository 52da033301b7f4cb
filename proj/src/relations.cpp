#include "jorcon/relations.hpp"

#include "jorcon/rmatrix.hpp"

namespace jorcon {

namespace {

struct Ctx {
  int n;
  int m;
  Sigma sigma;
  Side side;

  int w() const { return n * m; }
  Generator gen(GenKind k, int a) const { return {k, a / m, a % m, side}; }
};

enum class Order { FirstSecond, SecondFirst };

// Slot 1 carries kind k1 at index c, slot 2 kind k2 at index d; the word is
// k1_c k2_d or k2_d k1_c.
struct Product {
  GenKind k1;
  GenKind k2;
  Order order;
};

enum class Action { None, Left, Right };

struct Term {
  Product prod;
  Action action;
  const LabeledMatrix* M;
  Scalar factor;
};

struct BlockSpec {
  std::string name;
  SlotKind s1;
  SlotKind s2;
  std::vector<Term> terms;
  const LabeledMatrix* constant = nullptr;
  bool constant_transposed = false;
};

Word product_word(const Ctx& x, const Product& p, int c, int d) {
  const Generator g1 = x.gen(p.k1, c);
  const Generator g2 = x.gen(p.k2, d);
  return p.order == Order::FirstSecond ? Word{g1, g2} : Word{g2, g1};
}

// E_ab = sum over terms of factor * (M . word)_ab or (word . M)_ab, minus the
// constant matrix entry times the identity.
TensorBlock build_block(const Ctx& x, const BlockSpec& spec) {
  const int w = x.w();
  TensorBlock block{spec.name, spec.s1, spec.s2, w, std::vector<AlgElement>(static_cast<std::size_t>(w) * w)};
  for (int a = 0; a < w; ++a)
    for (int b = 0; b < w; ++b) {
      AlgElement e;
      const int ab = a * w + b;
      for (const auto& t : spec.terms) {
        if (t.action == Action::None) {
          e.add_term(product_word(x, t.prod, a, b), t.factor);
          continue;
        }
        for (int cd = 0; cd < w * w; ++cd) {
          const Scalar& c = t.action == Action::Left ? t.M->at(ab, cd) : t.M->at(cd, ab);
          if (!c.is_zero()) e.add_term(product_word(x, t.prod, cd / w, cd % w), t.factor * c);
        }
      }
      if (spec.constant) {
        const Scalar& c = spec.constant_transposed ? spec.constant->at(b, a) : spec.constant->at(a, b);
        e.add_term({}, -c);
      }
      block.at(a, b) = std::move(e);
    }
  return block;
}

constexpr GenKind kP = GenKind::Creation;
constexpr GenKind kQ = GenKind::Annihilation;
constexpr GenKind kT = GenKind::Tilde;

void require_dims(int n, int m) {
  if (n < 1 || m < 1) throw Error(ErrorCode::InvalidArgument, "n and m must be positive");
}

void require_tilde_dims(int n, int m) {
  auto ok = [](int N) { return N == 1 || N % 2 == 0; };
  if (!ok(n) || !ok(m))
    throw Error(ErrorCode::UnsupportedDimension,
                "the tilde basis has no contraction limit for odd dimension " +
                    std::to_string(!ok(n) ? n : m));
}

int delta(int a, int b) { return a == b ? 1 : 0; }
int parity(int k) { return k % 2 == 0 ? 1 : -1; }

// 1-based generator constructors for the componentwise lists.
struct Gens {
  Side side;
  AlgElement P(int i, int s) const { return AlgElement::gen({kP, i - 1, s - 1, side}); }
  AlgElement Q(int i, int s) const { return AlgElement::gen({kQ, i - 1, s - 1, side}); }
  AlgElement T(int i, int s) const { return AlgElement::gen({kT, i - 1, s - 1, side}); }
};

AlgElement hermitian(const AlgElement& e) {
  AlgElement out;
  for (const auto& [w, c] : e.terms()) {
    Word r(w.rbegin(), w.rend());
    for (auto& g : r) {
      if (g.kind == kP) g.kind = kQ;
      else if (g.kind == kQ) g.kind = kP;
    }
    out.add_term(r, c);
  }
  return out;
}

LabeledMatrix g_matrix(int N, int power, Var param) {
  if (N == 1) return LabeledMatrix::identity({1});
  return build_g(N, eta_for(power, param));
}

} // namespace

std::string basis_name(Basis b) {
  return b == Basis::Plain ? "plain" : "tilde";
}

StructureCoeffs structure_coeffs(int n, int m) {
  StructureCoeffs out;
  for (int i = 1; i <= n; ++i) out.d.push_back(2 - delta(i, 1) - delta(i, n));
  for (int s = 1; s <= m; ++s) out.dm.push_back(2 - delta(s, 1) - delta(s, m));
  return out;
}

// ---------------------------------------------------------------- q side

RelationSet compact_relations_q(int n, int m, Sigma sigma, int variant, Basis basis) {
  require_dims(n, m);
  if (variant != 1 && variant != 2) throw Error(ErrorCode::InvalidArgument, "variant must be 1 or 2");
  const Ctx x{n, m, sigma, Side::Q};
  const int sg = sign(sigma);
  const Scalar ms(-sg);
  RelationSet out(RelationMeta{n, m, sigma, "q", variant, basis, "compact"});

  LabeledMatrix R = build_Rq(n, 1);
  LabeledMatrix S = build_Rq(m, sg);
  LabeledMatrix Rs = R, Ss = S;
  if (variant == 2 && basis == Basis::Plain) {
    Rs = twist(inverse(R));
    Ss = twist(inverse(S));
  }
  const LabeledMatrix L = on_first_factor(Rs, m);
  const LabeledMatrix Rt = on_second_factor(n, Ss);

  out.add_block(build_block(x, {"A+1 A+2", SlotKind::Row, SlotKind::Row,
                                {{{kP, kP, Order::FirstSecond}, Action::Left, &L, Scalar(1)},
                                 {{kP, kP, Order::SecondFirst}, Action::Right, &Rt, ms}}}));
  if (basis == Basis::Plain) {
    out.add_block(build_block(x, {"A2 A1", SlotKind::Column, SlotKind::Column,
                                  {{{kQ, kQ, Order::SecondFirst}, Action::Left, &L, Scalar(1)},
                                   {{kQ, kQ, Order::FirstSecond}, Action::Right, &Rt, ms}}}));
    const LabeledMatrix M3 = couple(transpose_slot(Rs, 1), transpose_slot(Ss, 1));
    const LabeledMatrix I = LabeledMatrix::identity({n * m});
    BlockSpec spec{"A2 A+1", SlotKind::Row, SlotKind::Column,
                   {{{kP, kQ, Order::SecondFirst}, Action::None, nullptr, Scalar(1)},
                    {{kP, kQ, Order::FirstSecond}, Action::Left, &M3, ms}},
                   &I};
    out.add_block(build_block(x, spec));
    return out;
  }

  out.add_block(build_block(x, {"At1 At2", SlotKind::Row, SlotKind::Row,
                                {{{kT, kT, Order::FirstSecond}, Action::Left, &L, Scalar(1)},
                                 {{kT, kT, Order::SecondFirst}, Action::Right, &Rt, ms}}}));
  const LabeledMatrix C = tensor_product(build_Cq(n, 1), build_Cq(m, sg));
  const LabeledMatrix Rtil = build_Rtilde_q(n, 1);
  const LabeledMatrix Stil = build_Rtilde_q(m, sg);
  if (variant == 1) {
    const LabeledMatrix M = couple(inverse(Rtil), inverse(Stil));
    BlockSpec spec{"At2 A+1", SlotKind::Row, SlotKind::Row,
                   {{{kP, kT, Order::SecondFirst}, Action::None, nullptr, Scalar(1)},
                    {{kP, kT, Order::FirstSecond}, Action::Right, &M, ms}},
                   &C};
    out.add_block(build_block(x, spec));
  } else {
    const LabeledMatrix M = couple(Rtil, Stil);
    BlockSpec spec{"At1 A+2", SlotKind::Row, SlotKind::Row,
                   {{{kT, kP, Order::FirstSecond}, Action::None, nullptr, Scalar(1)},
                    {{kT, kP, Order::SecondFirst}, Action::Right, &M, ms}},
                   &C, true};
    out.add_block(build_block(x, spec));
  }
  return out;
}

RelationSet compact_relations_q_v2_direct(int n, int m, Sigma sigma) {
  RelationSet base = compact_relations_q(n, m, sigma, 1, Basis::Plain);
  const Ctx x{n, m, sigma, Side::Q};
  const int sg = sign(sigma);
  RelationSet out(RelationMeta{n, m, sigma, "q", 2, Basis::Plain, "compact-direct"});
  out.add_block(base.blocks()[0]);
  out.add_block(base.blocks()[1]);
  const LabeledMatrix M = couple(transpose_slot(build_Rq(n, -1), 2), transpose_slot(build_Rq(m, -sg), 2));
  const LabeledMatrix I = LabeledMatrix::identity({n * m});
  BlockSpec spec{"A1 A+2", SlotKind::Column, SlotKind::Row,
                 {{{kQ, kP, Order::FirstSecond}, Action::None, nullptr, Scalar(1)},
                  {{kQ, kP, Order::SecondFirst}, Action::Left, &M, Scalar(-sg)}},
                 &I};
  out.add_block(build_block(x, spec));
  return out;
}

RelationSet componentwise_relations_q(int n, int m, Sigma sigma, int variant, Basis basis) {
  require_dims(n, m);
  if (variant != 1 && variant != 2) throw Error(ErrorCode::InvalidArgument, "variant must be 1 or 2");
  const Gens G{Side::Q};
  const int sg = sign(sigma);
  const Scalar q = Scalar::q();
  const Scalar dq = q - Scalar::q_power(-1);
  auto qp = [](int k) { return Scalar::q_power(k); };
  auto br = [sigma](const AlgElement& a, const AlgElement& b, const Scalar& c) { return bracket(a, b, sigma, c); };
  const AlgElement I = AlgElement::identity();

  std::vector<AlgElement> creation;
  if (sigma == Sigma::Fermion)
    for (int i = 1; i <= n; ++i)
      for (int s = 1; s <= m; ++s) creation.push_back(Scalar(2) * (G.P(i, s) * G.P(i, s)));
  for (int i = 1; i <= n; ++i)
    for (int s = 1; s <= m; ++s)
      for (int t = s + 1; t <= m; ++t) creation.push_back(br(G.P(i, s), G.P(i, t), qp(-1)));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int s = 1; s <= m; ++s) creation.push_back(br(G.P(i, s), G.P(j, s), qp(-sg)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < i; ++j)
      for (int s = 1; s <= m; ++s)
        for (int t = s + 1; t <= m; ++t) creation.push_back(br(G.P(i, s), G.P(j, t), Scalar(1)));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int s = 1; s <= m; ++s)
        for (int t = s + 1; t <= m; ++t)
          creation.push_back(br(G.P(i, s), G.P(j, t), Scalar(1)) + dq * (G.P(j, s) * G.P(i, t)));

  RelationSet out(RelationMeta{n, m, sigma, "q", variant, basis, "componentwise"});
  for (const auto& e : creation) {
    out.add(e);
    out.add(hermitian(e));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int s = 1; s <= m; ++s)
        for (int t = 1; t <= m; ++t)
          if (i != j && s != t) out.add(br(G.Q(i, s), G.P(j, t), Scalar(1)));

  for (int i = 1; i <= n; ++i)
    for (int s = 1; s <= m; ++s) {
      if (variant == 1) {
        for (int j = 1; j <= n; ++j) {
          if (j == i) continue;
          AlgElement e = br(G.Q(i, s), G.P(j, s), qp(sg));
          for (int t = 1; t < s; ++t) e -= dq * (G.P(j, t) * G.Q(i, t));
          out.add(e);
        }
        for (int t = 1; t <= m; ++t) {
          if (t == s) continue;
          AlgElement e = br(G.Q(i, s), G.P(i, t), q);
          for (int j = 1; j < i; ++j) e -= (Scalar(sg) * dq) * (G.P(j, t) * G.Q(j, s));
          out.add(e);
        }
        AlgElement e = br(G.Q(i, s), G.P(i, s), qp(1 + sg)) - I;
        for (int j = 1; j < i; ++j) e -= (qp(2 * sg) - Scalar(1)) * (G.P(j, s) * G.Q(j, s));
        for (int t = 1; t < s; ++t) e -= (qp(2) - Scalar(1)) * (G.P(i, t) * G.Q(i, t));
        for (int j = 1; j < i; ++j)
          for (int t = 1; t < s; ++t) e -= (dq * dq) * (G.P(j, t) * G.Q(j, t));
        out.add(e);
      } else {
        for (int j = 1; j <= n; ++j) {
          if (j == i) continue;
          AlgElement e = br(G.Q(i, s), G.P(j, s), qp(-sg));
          for (int t = s + 1; t <= m; ++t) e += dq * (G.P(j, t) * G.Q(i, t));
          out.add(e);
        }
        for (int t = 1; t <= m; ++t) {
          if (t == s) continue;
          AlgElement e = br(G.Q(i, s), G.P(i, t), qp(-1));
          for (int j = i + 1; j <= n; ++j) e += (Scalar(sg) * dq) * (G.P(j, t) * G.Q(j, s));
          out.add(e);
        }
        AlgElement e = br(G.Q(i, s), G.P(i, s), qp(-1 - sg)) - I;
        for (int j = i + 1; j <= n; ++j) e -= (qp(-2 * sg) - Scalar(1)) * (G.P(j, s) * G.Q(j, s));
        for (int t = s + 1; t <= m; ++t) e -= (qp(-2) - Scalar(1)) * (G.P(i, t) * G.Q(i, t));
        for (int j = i + 1; j <= n; ++j)
          for (int t = s + 1; t <= m; ++t) e -= (dq * dq) * (G.P(j, t) * G.Q(j, t));
        out.add(e);
      }
    }

  if (basis == Basis::Plain) return out;

  // A' = At' C'^-1
  const LabeledMatrix Ci = inverse(tensor_product(build_Cq(n, 1), build_Cq(m, sg)));
  auto sub = [&](const Generator& g) {
    if (g.kind != kQ) return AlgElement::gen(g);
    AlgElement e;
    const int a = g.i * m + g.s;
    for (int b = 0; b < n * m; ++b)
      if (!Ci.at(b, a).is_zero()) e.add_term({Generator{kT, b / m, b % m, Side::Q}}, Ci.at(b, a));
    return e;
  };
  RelationSet tilde(out.meta());
  for (const auto& e : out.extra()) tilde.add(e.substitute(sub));
  return tilde;
}

// ---------------------------------------------------------------- h side

RelationSet compact_relations_h(int n, int m, Sigma sigma, Basis basis) {
  require_dims(n, m);
  if (basis == Basis::Tilde) require_tilde_dims(n, m);
  const Ctx x{n, m, sigma, Side::H};
  const int sg = sign(sigma);
  const Scalar ms(-sg);
  RelationSet out(RelationMeta{n, m, sigma, "hh", 0, basis, "compact"});
  const LabeledMatrix Rh = contract_R(DeformSpec{n, 1, Var::H});
  const LabeledMatrix Sh = contract_R(DeformSpec{m, sg, Var::Hp});
  const LabeledMatrix RS = couple(Rh, Sh);

  out.add_block(build_block(x, {"A+1 A+2", SlotKind::Row, SlotKind::Row,
                                {{{kP, kP, Order::FirstSecond}, Action::None, nullptr, Scalar(1)},
                                 {{kP, kP, Order::SecondFirst}, Action::Right, &RS, ms}}}));
  if (basis == Basis::Plain) {
    out.add_block(build_block(x, {"A1 A2", SlotKind::Column, SlotKind::Column,
                                  {{{kQ, kQ, Order::FirstSecond}, Action::None, nullptr, Scalar(1)},
                                   {{kQ, kQ, Order::SecondFirst}, Action::Left, &RS, ms}}}));
    const LabeledMatrix M = couple(transpose_slot(Rh, 1), transpose_slot(Sh, 1));
    const LabeledMatrix I = LabeledMatrix::identity({n * m});
    BlockSpec spec{"A2 A+1", SlotKind::Row, SlotKind::Column,
                   {{{kP, kQ, Order::SecondFirst}, Action::None, nullptr, Scalar(1)},
                    {{kP, kQ, Order::FirstSecond}, Action::Left, &M, ms}},
                   &I};
    out.add_block(build_block(x, spec));
    return out;
  }

  out.add_block(build_block(x, {"At1 At2", SlotKind::Row, SlotKind::Row,
                                {{{kT, kT, Order::FirstSecond}, Action::None, nullptr, Scalar(1)},
                                 {{kT, kT, Order::SecondFirst}, Action::Right, &RS, ms}}}));
  auto cn = contract_C(DeformSpec{n, 1, Var::H});
  auto cm = contract_C(DeformSpec{m, sg, Var::Hp});
  if (!cn.ok() || !cm.ok()) throw Error(ErrorCode::UnsupportedDimension, "C_h has no limit");
  const LabeledMatrix C = tensor_product(*cn.matrix, *cm.matrix);
  const LabeledMatrix M = couple(inverse(build_Rhtilde_closed(n, Var::H)), inverse(build_Rhtilde_closed(m, Var::Hp)));
  BlockSpec spec{"At2 A+1", SlotKind::Row, SlotKind::Row,
                 {{{kP, kT, Order::SecondFirst}, Action::None, nullptr, Scalar(1)},
                  {{kP, kT, Order::FirstSecond}, Action::Right, &M, ms}},
                 &C};
  out.add_block(build_block(x, spec));
  return out;
}

RelationSet componentwise_relations_h(int n, int m, Sigma sigma, Basis basis, bool literal) {
  require_dims(n, m);
  if (basis == Basis::Tilde) require_tilde_dims(n, m);
  const Gens G{Side::H};
  const int sg = sign(sigma);
  const Scalar S(sg);
  const int F = sigma == Sigma::Fermion ? 1 : 0;
  const Scalar h = (n == 1 && !literal) ? Scalar(0) : Scalar::h();
  const Scalar hp = (m == 1 && !literal) ? Scalar(0) : Scalar::hp();
  const auto sc = structure_coeffs(n, m);
  auto d = [&](int i) { return Scalar(sc.d[i - 1]); };
  auto dm = [&](int s) { return Scalar(sc.dm[s - 1]); };
  const AlgElement I = AlgElement::identity();
  RelationSet out(RelationMeta{n, m, sigma, "hh", 0, basis, "componentwise"});

  // creation-creation form, also used for the tilde annihilators
  auto creation_like = [&](auto X) {
    auto f = [&](int i, int s, int j, int t) {
      AlgElement e;
      e += Scalar(delta(j, n) * (1 - F * delta(i, 1) * delta(s, t))) * h * d(i) * (X(1, s) * X(i, t));
      e += Scalar(delta(t, m) * (1 - F * delta(i, j) * delta(s, 1))) * hp * dm(s) * (X(i, 1) * X(j, s));
      const int ex = 1 - F * (delta(i, 1) * delta(s, 1) + delta(i, 1) * delta(s, m) + delta(i, n) * delta(s, 1));
      e -= Scalar(delta(j, n) * delta(t, m) * ex) * h * hp * d(i) * dm(s) * (X(1, 1) * X(i, s));
      return e;
    };
    for (int i = 1; i <= n; ++i)
      for (int s = 1; s <= m; ++s)
        for (int j = 1; j <= n; ++j)
          for (int t = 1; t <= m; ++t)
            out.add(bracket(X(i, s), X(j, t), sigma) - (f(i, s, j, t) - S * f(j, t, i, s)));
  };
  creation_like([&](int i, int s) { return G.P(i, s); });

  if (basis == Basis::Plain) {
    auto g = [&](int i, int s, int j, int t) {
      AlgElement e;
      e += Scalar(delta(j, 1) * (1 - F * delta(i, n) * delta(s, t))) * h * d(i) * (G.Q(n, s) * G.Q(i, t));
      e += Scalar(delta(t, 1) * (1 - F * delta(i, j) * delta(s, m))) * hp * dm(s) * (G.Q(i, m) * G.Q(j, s));
      const int ex = 1 - F * (delta(i, 1) * delta(s, m) + delta(i, n) * delta(s, 1) + delta(i, n) * delta(s, m));
      e += Scalar(delta(j, 1) * delta(t, 1) * ex) * h * hp * d(i) * dm(s) * (G.Q(n, m) * G.Q(i, s));
      return e;
    };
    for (int i = 1; i <= n; ++i)
      for (int s = 1; s <= m; ++s)
        for (int j = 1; j <= n; ++j)
          for (int t = 1; t <= m; ++t)
            out.add(bracket(G.Q(i, s), G.Q(j, t), sigma) + (g(i, s, j, t) - S * g(j, t, i, s)));

    auto B = [&](int i, int j) {
      AlgElement e;
      for (int u = 1; u <= m; ++u) e += dm(u) * (G.P(i, u) * G.Q(j, u));
      return e;
    };
    auto BB = [&](int s, int t) {
      AlgElement e;
      for (int k = 1; k <= n; ++k) e += d(k) * (G.P(k, s) * G.Q(k, t));
      return e;
    };
    AlgElement D;
    for (int k = 1; k <= n; ++k)
      for (int u = 1; u <= m; ++u) D += d(k) * dm(u) * (G.P(k, u) * G.Q(k, u));
    const AlgElement PQ = G.P(1, 1) * G.Q(n, m);

    for (int i = 1; i <= n; ++i)
      for (int s = 1; s <= m; ++s)
        for (int j = 1; j <= n; ++j)
          for (int t = 1; t <= m; ++t) {
            AlgElement r;
            r += Scalar(delta(i, j) * delta(s, t)) * (I + S * h * hp * d(i) * dm(s) * PQ);
            r += Scalar(delta(i, j)) * S * h * d(i) *
                 (G.P(1, t) * G.Q(n, s) + Scalar(delta(s, 1) * delta(t, m)) * hp * (-B(1, n) + hp * PQ));
            r += Scalar(delta(s, t)) * S * hp * dm(s) *
                 (G.P(j, 1) * G.Q(i, m) + Scalar(delta(i, 1) * delta(j, n)) * h * (-BB(1, m) + h * PQ));
            r += Scalar(delta(i, 1) * delta(j, n)) * S * h * (-BB(t, s) + h * (G.P(1, t) * G.Q(n, s)));
            r += Scalar(delta(s, 1) * delta(t, m)) * S * hp * (-B(j, i) + hp * (G.P(j, 1) * G.Q(i, m)));
            r += Scalar(delta(i, 1) * delta(j, n) * delta(s, 1) * delta(t, m)) * S * h * hp *
                 (D - h * B(1, n) - hp * BB(1, m) + h * hp * PQ);
            out.add(bracket(G.Q(i, s), G.P(j, t), sigma) - r);
          }
    return out;
  }

  creation_like([&](int i, int s) { return G.T(i, s); });
  auto Bt = [&](int i, int j) {
    AlgElement e;
    for (int u = 1; u <= m; ++u) e += Scalar(parity(u)) * dm(u) * (G.P(i, u) * G.T(j, m + 1 - u));
    return e;
  };
  auto BBt = [&](int s, int t) {
    AlgElement e;
    for (int k = 1; k <= n; ++k) e += Scalar(parity(k)) * d(k) * (G.P(k, s) * G.T(n + 1 - k, t));
    return e;
  };
  AlgElement Dt;
  for (int k = 1; k <= n; ++k)
    for (int u = 1; u <= m; ++u)
      Dt += Scalar(parity(k + u)) * d(k) * dm(u) * (G.P(k, u) * G.T(n + 1 - k, m + 1 - u));
  const AlgElement PT = G.P(1, 1) * G.T(1, 1);
  const Scalar c2n(2 * n - 3), c2m(2 * m - 3);

  for (int i = 1; i <= n; ++i)
    for (int s = 1; s <= m; ++s)
      for (int j = 1; j <= n; ++j)
        for (int t = 1; t <= m; ++t) {
          const int ip = n + 1 - i;
          const int sp = m + 1 - s;
          AlgElement r;
          r += Scalar(delta(ip, j) * delta(sp, t) * parity(i + s)) * (I + S * h * hp * d(i) * dm(s) * PT);
          r -= Scalar(delta(ip, j) * parity(i)) *
               (S * h * d(i) * (G.P(1, t) * G.T(1, s)) +
                Scalar(delta(s, m) * delta(t, m)) * hp *
                    (Scalar(m - 1) * I + S * h * d(i) * Bt(1, 1) + S * c2m * h * hp * d(i) * PT));
          r -= Scalar(delta(sp, t) * parity(s)) *
               (S * hp * dm(s) * (G.P(j, 1) * G.T(i, 1)) +
                Scalar(delta(i, n) * delta(j, n)) * h *
                    (Scalar(n - 1) * I + S * hp * dm(s) * BBt(1, 1) + S * c2n * h * hp * dm(s) * PT));
          r += Scalar(delta(i, n) * delta(j, n)) * S * h * (BBt(t, s) + c2n * h * (G.P(1, t) * G.T(1, s)));
          r += Scalar(delta(s, m) * delta(t, m)) * S * hp * (Bt(j, i) + c2m * hp * (G.P(j, 1) * G.T(i, 1)));
          r += Scalar(delta(i, n) * delta(j, n) * delta(s, m) * delta(t, m)) * h * hp *
               (Scalar((n - 1) * (m - 1)) * I + S * Dt + S * c2n * h * Bt(1, 1) + S * c2m * hp * BBt(1, 1) +
                S * c2n * c2m * h * hp * PT);
          out.add(bracket(G.T(i, s), G.P(j, t), sigma) - r);
        }
  return out;
}

RelationSet componentwise_relations_h_m1(int n, Sigma sigma, Basis basis, bool literal) {
  require_dims(n, 1);
  if (basis == Basis::Tilde) require_tilde_dims(n, 1);
  const Gens G{Side::H};
  const Scalar S(sign(sigma));
  const int F = sigma == Sigma::Fermion ? 1 : 0;
  const Scalar h = (n == 1 && !literal) ? Scalar(0) : Scalar::h();
  const auto sc = structure_coeffs(n, 1);
  auto d = [&](int i) { return Scalar(sc.d[i - 1]); };
  auto P = [&](int i) { return G.P(i, 1); };
  auto Q = [&](int i) { return G.Q(i, 1); };
  auto T = [&](int i) { return G.T(i, 1); };
  const AlgElement I = AlgElement::identity();
  RelationSet out(RelationMeta{n, 1, sigma, "hh", 0, basis, "m1"});

  auto creation_like = [&](auto X) {
    auto f = [&](int i, int j) {
      return Scalar(delta(j, n) * (1 - F * delta(i, 1))) * h * d(i) * (X(1) * X(i));
    };
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) out.add(bracket(X(i), X(j), sigma) - (f(i, j) - S * f(j, i)));
  };
  creation_like(P);
  if (basis == Basis::Plain) {
    auto g = [&](int i, int j) {
      return Scalar(delta(j, 1) * (1 - F * delta(i, n))) * h * d(i) * (Q(n) * Q(i));
    };
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) out.add(bracket(Q(i), Q(j), sigma) + (g(i, j) - S * g(j, i)));
    AlgElement sum;
    for (int k = 1; k <= n; ++k) sum += d(k) * (P(k) * Q(k));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        AlgElement r = Scalar(delta(i, j)) * (I + S * h * d(i) * (P(1) * Q(n)));
        r += Scalar(delta(i, 1) * delta(j, n)) * S * h * (-sum + h * (P(1) * Q(n)));
        out.add(bracket(Q(i), P(j), sigma) - r);
      }
    return out;
  }
  creation_like(T);
  AlgElement sum;
  for (int k = 1; k <= n; ++k) sum += Scalar(parity(k)) * d(k) * (P(k) * T(n + 1 - k));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      AlgElement r = Scalar(delta(n + 1 - i, j) * parity(i + 1)) * (I + S * h * d(i) * (P(1) * T(1)));
      r += Scalar(delta(i, n) * delta(j, n)) * h *
           (Scalar(n - 1) * I + S * sum + S * Scalar(2 * n - 3) * h * (P(1) * T(1)));
      out.add(bracket(T(i), P(j), sigma) - r);
    }
  return out;
}

RelationSet explicit_relations_21(Sigma sigma, Basis basis) {
  const Gens G{Side::H};
  auto P = [&](int i) { return G.P(i, 1); };
  auto Q = [&](int i) { return G.Q(i, 1); };
  auto T = [&](int i) { return G.T(i, 1); };
  const Scalar h = Scalar::h();
  const AlgElement I = AlgElement::identity();
  RelationSet out(RelationMeta{2, 1, sigma, "hh", 0, basis, "explicit"});
  auto br = [sigma](const AlgElement& a, const AlgElement& b) { return bracket(a, b, sigma); };

  if (sigma == Sigma::Boson && basis == Basis::Plain) {
    out.add(br(P(1), P(2)) - h * (P(1) * P(1)));
    out.add(br(Q(1), Q(2)) - h * (Q(2) * Q(2)));
    out.add(br(Q(2), P(1)));
    out.add(br(Q(1), P(2)) - h * (-(P(1) * Q(1)) - P(2) * Q(2) + h * (P(1) * Q(2))));
    out.add(br(Q(1), P(1)) - I - h * (P(1) * Q(2)));
    out.add(br(Q(2), P(2)) - I - h * (P(1) * Q(2)));
  } else if (sigma == Sigma::Boson) {
    out.add(br(P(1), P(2)) - h * (P(1) * P(1)));
    out.add(br(T(1), T(2)) - h * (T(1) * T(1)));
    out.add(br(T(1), P(1)));
    out.add(br(T(2), P(2)) - h * (I - P(1) * T(2) + P(2) * T(1) + h * (P(1) * T(1))));
    out.add(br(T(1), P(2)) - I - h * (P(1) * T(1)));
    out.add(-br(T(2), P(1)) - I - h * (P(1) * T(1)));
  } else if (basis == Basis::Plain) {
    out.add(br(P(1), P(1)));
    out.add(br(P(1), P(2)));
    out.add(br(P(2), P(2)) - Scalar(2) * h * (P(1) * P(2)));
    out.add(br(Q(1), Q(1)) - Scalar(2) * h * (Q(1) * Q(2)));
    out.add(br(Q(1), Q(2)));
    out.add(br(Q(2), Q(2)));
    out.add(br(Q(2), P(1)));
    out.add(br(Q(1), P(2)) - h * (P(1) * Q(1) + P(2) * Q(2) - h * (P(1) * Q(2))));
    out.add(br(Q(1), P(1)) - I + h * (P(1) * Q(2)));
    out.add(br(Q(2), P(2)) - I + h * (P(1) * Q(2)));
  } else {
    out.add(br(P(1), P(1)));
    out.add(br(P(1), P(2)));
    out.add(br(P(2), P(2)) - Scalar(2) * h * (P(1) * P(2)));
    out.add(br(T(1), T(1)));
    out.add(br(T(1), T(2)));
    out.add(br(T(2), T(2)) - Scalar(2) * h * (T(1) * T(2)));
    out.add(br(T(1), P(1)));
    out.add(br(T(2), P(2)) - h * (I + P(1) * T(2) - P(2) * T(1) - h * (P(1) * T(1))));
    out.add(br(T(1), P(2)) - I + h * (P(1) * T(1)));
    out.add(-br(T(2), P(1)) - I + h * (P(1) * T(1)));
  }
  return out;
}

RelationSet classical_relations(int n, int m, Sigma sigma, Basis basis) {
  require_dims(n, m);
  if (basis == Basis::Tilde) require_tilde_dims(n, m);
  const Gens G{Side::H};
  RelationSet out(RelationMeta{n, m, sigma, "classical", 0, basis, "componentwise"});
  auto X = [&](GenKind k, int a) { return AlgElement::gen({k, a / m, a % m, Side::H}); };
  const int w = n * m;
  const GenKind ann = basis == Basis::Plain ? kQ : kT;
  LabeledMatrix C0 = LabeledMatrix::identity({w});
  if (basis == Basis::Tilde) {
    auto c0 = [](int N) {
      return build_Ch_closed(N).map([](const Scalar& x) { return x.specialized(Var::H, QSqrt2(0)); });
    };
    C0 = tensor_product(c0(n), c0(m));
  }
  for (int a = 0; a < w; ++a)
    for (int b = 0; b < w; ++b) {
      out.add(bracket(X(kP, a), X(kP, b), sigma));
      out.add(bracket(X(ann, a), X(ann, b), sigma));
      // [Q_a, P_b} = delta_ab;  [At_b, A+_a} = C0_ab
      out.add(bracket(X(ann, b), X(kP, a), sigma) - AlgElement::identity(C0.at(a, b)));
    }
  (void)G;
  return out;
}

// ---------------------------------------------------------------- contraction

RelationSet transform_generators(const RelationSet& rel, const LabeledMatrix& g, const LabeledMatrix& gm) {
  const int n = rel.meta().n;
  const int m = rel.meta().m;
  const int w = n * m;
  if (g.size() != n || gm.size() != m) throw Error(ErrorCode::DimensionMismatch, "g matrices do not match (n, m)");
  const LabeledMatrix Gm = tensor_product(g, gm);
  const LabeledMatrix Gi = inverse(Gm);

  auto sub = [&](const Generator& x) {
    AlgElement e;
    const int a = x.i * m + x.s;
    for (int b = 0; b < w; ++b) {
      const Generator y{x.kind, b / m, b % m, Side::Transformed};
      const Scalar& c = x.kind == kQ ? Gm.at(a, b) : Gi.at(b, a);
      if (!c.is_zero()) e.add_term({y}, c);
    }
    return e;
  };
  auto factor = [&](SlotKind k, int a, int c) -> const Scalar& {
    return k == SlotKind::Row ? Gm.at(c, a) : Gi.at(a, c);
  };

  RelationMeta meta = rel.meta();
  meta.family = "transformed";
  RelationSet out(meta);
  for (const auto& block : rel.blocks()) {
    std::vector<AlgElement> subst;
    subst.reserve(block.entries.size());
    for (const auto& e : block.entries) subst.push_back(e.substitute(sub));
    TensorBlock nb{block.name, block.slot1, block.slot2, w, std::vector<AlgElement>(block.entries.size())};
    for (int a = 0; a < w; ++a)
      for (int b = 0; b < w; ++b) {
        AlgElement e;
        for (int c = 0; c < w; ++c) {
          const Scalar& f1 = factor(block.slot1, a, c);
          if (f1.is_zero()) continue;
          for (int d = 0; d < w; ++d) {
            const Scalar& f2 = factor(block.slot2, b, d);
            if (!f2.is_zero()) e += (f1 * f2) * subst[static_cast<std::size_t>(c) * w + d];
          }
        }
        nb.at(a, b) = std::move(e);
      }
    out.add_block(std::move(nb));
  }
  for (const auto& e : rel.extra()) out.add(e.substitute(sub));
  return out;
}

RelationSet transform_generators(const RelationSet& rel) {
  const auto& meta = rel.meta();
  return transform_generators(rel, g_matrix(meta.n, 1, Var::H), g_matrix(meta.m, sign(meta.sigma), Var::Hp));
}

namespace {

std::string label(int a, int m) {
  return "(" + std::to_string(a / m + 1) + "," + std::to_string(a % m + 1) + ")";
}

AlgElement contract_element(const AlgElement& e, const std::string& context, int row, int col) {
  // the constant term goes first so that a pole of the transformed metric is the one reported
  std::vector<std::pair<Word, Scalar>> terms;
  if (!e.constant().is_zero()) terms.emplace_back(Word{}, e.constant());
  for (const auto& [w, c] : e.terms())
    if (!w.empty()) terms.emplace_back(w, c);
  AlgElement out;
  for (const auto& [w, c] : terms) {
    Scalar lim;
    try {
      lim = limit_q1(c);
    } catch (const PoleAtQ1&) {
      PoleInfo info;
      info.context = context;
      info.row = row;
      info.col = col;
      std::string word;
      for (const auto& g : w) word += (word.empty() ? "" : " ") + g.to_string();
      info.coefficient = c.to_string() + " multiplying " + (word.empty() ? "I" : word);
      throw PoleAtQ1(info);
    }
    Word nw = w;
    for (auto& g : nw) g.side = Side::H;
    out.add_term(nw, lim);
  }
  return out;
}

} // namespace

RelationSet contract_relations(const RelationSet& rel) {
  RelationMeta meta = rel.meta();
  meta.family = "contracted";
  RelationSet out(meta);
  const int m = meta.m;
  for (const auto& block : rel.blocks()) {
    TensorBlock nb{block.name, block.slot1, block.slot2, block.w, std::vector<AlgElement>(block.entries.size())};
    for (int a = 0; a < block.w; ++a)
      for (int b = 0; b < block.w; ++b)
        nb.at(a, b) = contract_element(block.at(a, b),
                                       "relation " + block.name + " " + label(a, m) + label(b, m), a + 1, b + 1);
    out.add_block(std::move(nb));
  }
  int k = 0;
  for (const auto& e : rel.extra()) {
    ++k;
    out.add(contract_element(e, "relation #" + std::to_string(k), k, 0));
  }
  return out;
}

RelationSet specialize_classical(const RelationSet& rel) {
  auto f = [](const Scalar& x) { return x.specialized(Var::H, QSqrt2(0)).specialized(Var::Hp, QSqrt2(0)); };
  RelationSet out(rel.meta());
  for (const auto& block : rel.blocks()) {
    TensorBlock nb = block;
    for (auto& e : nb.entries) e = e.map_coefficients(f);
    out.add_block(std::move(nb));
  }
  for (const auto& e : rel.extra()) out.add(e.map_coefficients(f));
  return out;
}

} // namespace jorcon
