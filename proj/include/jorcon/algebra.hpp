#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "jorcon/scalar.hpp"

namespace jorcon {

enum class GenKind : int { Creation = 0, Annihilation = 1, Tilde = 2 };

// q-side primed operators, transformed (double primed) operators before the
// limit, and h-side operators.
enum class Side : int { Q = 0, Transformed = 1, H = 2 };

// Generator with 0-based labels (i, s).
struct Generator {
  GenKind kind = GenKind::Creation;
  int i = 0;
  int s = 0;
  Side side = Side::H;

  auto operator<=>(const Generator&) const = default;
  std::string to_string() const;
};

using Word = std::vector<Generator>;

// Degree of a word in the normal order: out-of-order quadratic words come
// first, then ordered quadratic words, linear words and the identity.
struct ColumnLess {
  bool operator()(const Word& a, const Word& b) const;
};

bool is_out_of_order(const Word& w);

// Noncommutative polynomial of degree at most 2; the empty word is the
// identity.
class AlgElement {
public:
  using Terms = std::map<Word, Scalar, ColumnLess>;

  AlgElement() = default;
  static AlgElement identity(const Scalar& c = Scalar(1));
  static AlgElement gen(const Generator& g, const Scalar& c = Scalar(1));
  static AlgElement word(const Generator& a, const Generator& b, const Scalar& c = Scalar(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  Scalar coefficient(const Word& w) const;
  Scalar constant() const { return coefficient({}); }

  void add_term(const Word& w, const Scalar& c);

  AlgElement& operator+=(const AlgElement& o);
  AlgElement& operator-=(const AlgElement& o);
  friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
  friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
  AlgElement operator-() const;
  friend AlgElement operator*(const Scalar& c, const AlgElement& a);
  friend AlgElement operator*(const AlgElement& a, const AlgElement& b);
  friend bool operator==(const AlgElement& a, const AlgElement& b);
  friend bool operator!=(const AlgElement& a, const AlgElement& b) { return !(a == b); }

  AlgElement map_coefficients(const std::function<Scalar(const Scalar&)>& f) const;
  // Replace every generator by a linear combination.
  AlgElement substitute(const std::function<AlgElement(const Generator&)>& f) const;

  std::string to_string() const;

private:
  Terms terms_;
};

// XY - sigma * c * YX.
AlgElement bracket(const AlgElement& x, const AlgElement& y, Sigma sigma, const Scalar& c = Scalar(1));

enum class SlotKind { Row, Column };

// Relations E_{ab} indexed by composite labels a, b of W = V_n (x) V_m. Slot
// kinds record how the block recombines under a change of basis.
struct TensorBlock {
  std::string name;
  SlotKind slot1 = SlotKind::Row;
  SlotKind slot2 = SlotKind::Row;
  int w = 0;
  std::vector<AlgElement> entries;

  const AlgElement& at(int a, int b) const { return entries[static_cast<std::size_t>(a) * w + b]; }
  AlgElement& at(int a, int b) { return entries[static_cast<std::size_t>(a) * w + b]; }
};

enum class Basis { Plain, Tilde };

struct RelationMeta {
  int n = 1;
  int m = 1;
  Sigma sigma = Sigma::Boson;
  std::string family;  // "q", "transformed", "hh", "classical", ...
  int variant = 0;     // 1 or 2 on the q side, 0 otherwise
  Basis basis = Basis::Plain;
  std::string form;    // "compact", "componentwise", ...
};

class RelationSet {
public:
  RelationSet() = default;
  explicit RelationSet(RelationMeta meta) : meta_(std::move(meta)) {}

  const RelationMeta& meta() const { return meta_; }
  RelationMeta& meta() { return meta_; }
  const std::vector<TensorBlock>& blocks() const { return blocks_; }
  std::vector<TensorBlock>& blocks() { return blocks_; }
  const std::vector<AlgElement>& extra() const { return extra_; }

  void add_block(TensorBlock b) { blocks_.push_back(std::move(b)); }
  void add(const AlgElement& e) { extra_.push_back(e); }

  // All nonzero relations, deduplicated up to scalar multiples.
  std::vector<AlgElement> relations() const;

private:
  RelationMeta meta_;
  std::vector<TensorBlock> blocks_;
  std::vector<AlgElement> extra_;
};

// Row-reduced echelon basis of the span of a list of relations over the
// coefficient field, with columns in ColumnLess order.
class Reducer {
public:
  Reducer() = default;
  explicit Reducer(const std::vector<AlgElement>& relations);

  // Fully reduced representative of e modulo the span.
  AlgElement reduce(const AlgElement& e) const;
  bool contains(const AlgElement& e) const { return reduce(e).is_zero(); }
  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(const Word& w) const { return pivot_index_.count(w) != 0; }

private:
  void insert(AlgElement row);
  std::vector<AlgElement> rows_;
  std::map<Word, std::size_t, ColumnLess> pivot_index_;
};

bool relation_span_equal(const RelationSet& a, const RelationSet& b);
bool relation_span_equal(const std::vector<AlgElement>& a, const std::vector<AlgElement>& b);

// Normal form with creations to the left; throws MissingRewriteRule when an
// out-of-order word is not determined by the relations.
AlgElement normal_order(const AlgElement& e, const Reducer& rel);
AlgElement normal_order(const AlgElement& e, const RelationSet& rel);

} // namespace jorcon
