#include "jorcon/matrix.hpp"

#include <numeric>

namespace jorcon {

namespace {

int product(const std::vector<int>& dims) {
  return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<int>());
}

void require_same(const LabeledMatrix& a, const LabeledMatrix& b, const char* what) {
  if (a.size() != b.size())
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + ": matrix sizes differ");
}

int half(const LabeledMatrix& a) {
  const auto& d = a.dims();
  if (d.size() % 2 != 0 || d.empty())
    throw Error(ErrorCode::DimensionMismatch, "matrix is not a two-slot matrix");
  for (std::size_t k = 0; k < d.size() / 2; ++k)
    if (d[k] != d[k + d.size() / 2])
      throw Error(ErrorCode::DimensionMismatch, "slots have different shapes");
  return product(std::vector<int>(d.begin(), d.begin() + d.size() / 2));
}

} // namespace

LabeledMatrix::LabeledMatrix(std::vector<int> dims) : dims_(std::move(dims)) {
  for (int d : dims_)
    if (d < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  size_ = product(dims_);
  entries_.assign(static_cast<std::size_t>(size_) * size_, Scalar());
}

LabeledMatrix LabeledMatrix::identity(std::vector<int> dims) {
  LabeledMatrix m(std::move(dims));
  for (int k = 0; k < m.size_; ++k) m.at(k, k) = Scalar(1);
  return m;
}

LabeledMatrix LabeledMatrix::unit(int N, int i, int j) {
  if (i < 0 || j < 0 || i >= N || j >= N) throw Error(ErrorCode::InvalidArgument, "unit index out of range");
  LabeledMatrix m({N});
  m.at(i, j) = Scalar(1);
  return m;
}

LabeledMatrix LabeledMatrix::scalar(const Scalar& c) {
  LabeledMatrix m({1});
  m.at(0, 0) = c;
  return m;
}

int LabeledMatrix::flat(const std::vector<int>& idx) const {
  if (idx.size() != dims_.size()) throw Error(ErrorCode::DimensionMismatch, "index arity mismatch");
  int f = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) f = f * dims_[k] + idx[k];
  return f;
}

std::vector<int> LabeledMatrix::split(int f) const {
  std::vector<int> idx(dims_.size());
  for (std::size_t k = dims_.size(); k-- > 0;) {
    idx[k] = f % dims_[k];
    f /= dims_[k];
  }
  return idx;
}

bool LabeledMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool LabeledMatrix::is_identity() const {
  for (int r = 0; r < size_; ++r)
    for (int c = 0; c < size_; ++c)
      if (r == c ? !at(r, c).is_one() : !at(r, c).is_zero()) return false;
  return true;
}

bool operator==(const LabeledMatrix& a, const LabeledMatrix& b) {
  if (a.size_ != b.size_) return false;
  for (std::size_t k = 0; k < a.entries_.size(); ++k)
    if (a.entries_[k] != b.entries_[k]) return false;
  return true;
}

LabeledMatrix LabeledMatrix::map(const std::function<Scalar(const Scalar&)>& f) const {
  LabeledMatrix out = *this;
  for (auto& e : out.entries_)
    if (!e.is_zero()) e = f(e);
  return out;
}

LabeledMatrix matmul(const LabeledMatrix& a, const LabeledMatrix& b) {
  require_same(a, b, "matmul");
  const int n = a.size();
  LabeledMatrix out(a.dims());
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Scalar& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        const Scalar& y = b.at(k, j);
        if (!y.is_zero()) out.at(i, j) += x * y;
      }
    }
  }
  return out;
}

LabeledMatrix matadd(const LabeledMatrix& a, const LabeledMatrix& b) {
  require_same(a, b, "matadd");
  LabeledMatrix out = a;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) out.at(i, j) += b.at(i, j);
  return out;
}

LabeledMatrix matsub(const LabeledMatrix& a, const LabeledMatrix& b) {
  return matadd(a, scalar_mul(Scalar(-1), b));
}

LabeledMatrix scalar_mul(const Scalar& c, const LabeledMatrix& a) {
  return a.map([&c](const Scalar& x) { return c * x; });
}

LabeledMatrix tensor_product(const LabeledMatrix& a, const LabeledMatrix& b) {
  std::vector<int> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  LabeledMatrix out(dims);
  const int nb = b.size();
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) {
      const Scalar& x = a.at(i, j);
      if (x.is_zero()) continue;
      for (int k = 0; k < nb; ++k)
        for (int l = 0; l < nb; ++l)
          if (!b.at(k, l).is_zero()) out.at(i * nb + k, j * nb + l) = x * b.at(k, l);
    }
  return out;
}

LabeledMatrix twist(const LabeledMatrix& a) {
  const int w = half(a);
  LabeledMatrix out(a.dims());
  auto sw = [w](int f) { return (f % w) * w + f / w; };
  for (int r = 0; r < a.size(); ++r)
    for (int c = 0; c < a.size(); ++c) out.at(sw(r), sw(c)) = a.at(r, c);
  return out;
}

LabeledMatrix transpose_slot(const LabeledMatrix& a, int slot) {
  if (slot != 1 && slot != 2) throw Error(ErrorCode::InvalidArgument, "slot must be 1 or 2");
  const int w = half(a);
  LabeledMatrix out(a.dims());
  for (int r = 0; r < a.size(); ++r)
    for (int c = 0; c < a.size(); ++c) {
      int i = r / w, j = r % w, k = c / w, l = c % w;
      if (slot == 1) std::swap(i, k);
      else std::swap(j, l);
      out.at(i * w + j, k * w + l) = a.at(r, c);
    }
  return out;
}

LabeledMatrix transpose(const LabeledMatrix& a) {
  LabeledMatrix out(a.dims());
  for (int r = 0; r < a.size(); ++r)
    for (int c = 0; c < a.size(); ++c) out.at(c, r) = a.at(r, c);
  return out;
}

LabeledMatrix inverse(const LabeledMatrix& a) {
  const int n = a.size();
  LabeledMatrix work = a;
  LabeledMatrix inv = LabeledMatrix::identity(a.dims());
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!work.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
    if (pivot != col)
      for (int c = 0; c < n; ++c) {
        std::swap(work.at(pivot, c), work.at(col, c));
        std::swap(inv.at(pivot, c), inv.at(col, c));
      }
    const Scalar p_inv = work.at(col, col).inverse();
    if (!p_inv.is_one())
      for (int c = 0; c < n; ++c) {
        if (!work.at(col, c).is_zero()) work.at(col, c) *= p_inv;
        if (!inv.at(col, c).is_zero()) inv.at(col, c) *= p_inv;
      }
    for (int r = 0; r < n; ++r) {
      if (r == col || work.at(r, col).is_zero()) continue;
      const Scalar f = work.at(r, col);
      for (int c = 0; c < n; ++c) {
        if (!work.at(col, c).is_zero()) work.at(r, c) -= f * work.at(col, c);
        if (!inv.at(col, c).is_zero()) inv.at(r, c) -= f * inv.at(col, c);
      }
    }
  }
  return inv;
}

LabeledMatrix couple(const LabeledMatrix& r, const LabeledMatrix& s) {
  if (r.dims().size() != 2 || s.dims().size() != 2)
    throw Error(ErrorCode::DimensionMismatch, "couple expects two-slot factors");
  const int n = r.dims()[0];
  const int m = s.dims()[0];
  half(r);
  half(s);
  LabeledMatrix out({n, m, n, m});
  auto idx = [n, m](int i, int s_, int j, int t) { return ((i * m + s_) * n + j) * m + t; };
  for (int rr = 0; rr < r.size(); ++rr)
    for (int rc = 0; rc < r.size(); ++rc) {
      const Scalar& x = r.at(rr, rc);
      if (x.is_zero()) continue;
      const int i = rr / n, j = rr % n, k = rc / n, l = rc % n;
      for (int sr = 0; sr < s.size(); ++sr)
        for (int sc = 0; sc < s.size(); ++sc) {
          const Scalar& y = s.at(sr, sc);
          if (y.is_zero()) continue;
          const int s_ = sr / m, t = sr % m, u = sc / m, v = sc % m;
          out.at(idx(i, s_, j, t), idx(k, u, l, v)) = x * y;
        }
    }
  return out;
}

LabeledMatrix embed_pair(const LabeledMatrix& a, int p, int q) {
  if (a.dims().size() != 2 || p < 0 || q > 2 || p >= q)
    throw Error(ErrorCode::DimensionMismatch, "embed_pair expects a two-slot matrix and 0 <= p < q <= 2");
  const int N = a.dims()[0];
  half(a);
  LabeledMatrix out({N, N, N});
  for (int r = 0; r < out.size(); ++r) {
    auto ri = out.split(r);
    const int other = 3 - p - q;
    for (int c = 0; c < out.size(); ++c) {
      auto ci = out.split(c);
      if (ri[other] != ci[other]) continue;
      const Scalar& x = a.at(ri[p] * N + ri[q], ci[p] * N + ci[q]);
      if (!x.is_zero()) out.at(r, c) = x;
    }
  }
  return out;
}

LabeledMatrix limit_q1(const LabeledMatrix& a, const std::string& context) {
  LabeledMatrix out(a.dims());
  for (int r = 0; r < a.size(); ++r)
    for (int c = 0; c < a.size(); ++c) {
      const Scalar& x = a.at(r, c);
      if (x.is_zero()) continue;
      try {
        out.at(r, c) = limit_q1(x);
      } catch (const PoleAtQ1&) {
        PoleInfo info;
        info.context = context;
        info.row = r + 1;
        info.col = c + 1;
        info.coefficient = x.to_string();
        throw PoleAtQ1(info);
      }
    }
  return out;
}

} // namespace jorcon
