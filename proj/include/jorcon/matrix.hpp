#pragma once

#include <functional>
#include <vector>

#include "jorcon/scalar.hpp"

namespace jorcon {

// Square matrix over Scalar. Rows and columns are indexed by composite
// indices over `dims`, row-major: (i, s) in dims [n, m] maps to i*m + s.
// A matrix on V (x) V has dims [N, N]; the first half of `dims` is slot 1 and
// the second half slot 2 whenever the number of factors is even.
class LabeledMatrix {
public:
  LabeledMatrix() = default;
  explicit LabeledMatrix(std::vector<int> dims);

  static LabeledMatrix identity(std::vector<int> dims);
  // e_{ij} on an N-dimensional space, 0-based i, j.
  static LabeledMatrix unit(int N, int i, int j);
  static LabeledMatrix scalar(const Scalar& c);

  const std::vector<int>& dims() const { return dims_; }
  int size() const { return size_; }

  Scalar& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * size_ + c]; }
  const Scalar& at(int r, int c) const {
    return entries_[static_cast<std::size_t>(r) * size_ + c];
  }
  // Composite multi-index (one entry per factor) to flat index.
  int flat(const std::vector<int>& idx) const;
  std::vector<int> split(int flat_index) const;

  bool is_zero() const;
  bool is_identity() const;

  friend bool operator==(const LabeledMatrix& a, const LabeledMatrix& b);
  friend bool operator!=(const LabeledMatrix& a, const LabeledMatrix& b) { return !(a == b); }

  LabeledMatrix map(const std::function<Scalar(const Scalar&)>& f) const;

private:
  std::vector<int> dims_;
  int size_ = 0;
  std::vector<Scalar> entries_;
};

LabeledMatrix matmul(const LabeledMatrix& a, const LabeledMatrix& b);
LabeledMatrix matadd(const LabeledMatrix& a, const LabeledMatrix& b);
LabeledMatrix matsub(const LabeledMatrix& a, const LabeledMatrix& b);
LabeledMatrix scalar_mul(const Scalar& c, const LabeledMatrix& a);

inline LabeledMatrix operator*(const LabeledMatrix& a, const LabeledMatrix& b) { return matmul(a, b); }
inline LabeledMatrix operator+(const LabeledMatrix& a, const LabeledMatrix& b) { return matadd(a, b); }
inline LabeledMatrix operator-(const LabeledMatrix& a, const LabeledMatrix& b) { return matsub(a, b); }

LabeledMatrix tensor_product(const LabeledMatrix& a, const LabeledMatrix& b);

// tau A tau: exchanges the two slots in rows and columns.
LabeledMatrix twist(const LabeledMatrix& a);
LabeledMatrix transpose_slot(const LabeledMatrix& a, int slot);
LabeledMatrix transpose(const LabeledMatrix& a);

// Exact Gauss-Jordan inverse; throws SingularMatrix.
LabeledMatrix inverse(const LabeledMatrix& a);

// Composite two-slot matrix on W (x) W with W = V_n (x) V_m from R on
// V_n (x) V_n and S on V_m (x) V_m:
//   out[((i,s),(j,t)), ((k,u),(l,v))] = R[(i,j),(k,l)] * S[(s,t),(u,v)].
LabeledMatrix couple(const LabeledMatrix& r, const LabeledMatrix& s);

// Matrix on W from a on V_n and b on V_m: entry (is, jt) = a_ij b_st.
inline LabeledMatrix couple_single(const LabeledMatrix& a, const LabeledMatrix& b) {
  return tensor_product(a, b);
}

// Matrix on V (x) V (x) V acting as `a` on factors (p, q) with p < q.
LabeledMatrix embed_pair(const LabeledMatrix& a, int p, int q);

LabeledMatrix limit_q1(const LabeledMatrix& a, const std::string& context);

} // namespace jorcon
