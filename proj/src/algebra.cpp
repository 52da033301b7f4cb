#include "jorcon/algebra.hpp"

#include <algorithm>
#include <set>

namespace jorcon {

std::string Generator::to_string() const {
  std::string prime = side == Side::Q ? "'" : side == Side::Transformed ? "''" : "";
  std::string base;
  switch (kind) {
    case GenKind::Creation: base = "A" + prime + "+"; break;
    case GenKind::Annihilation: base = "A" + prime; break;
    case GenKind::Tilde: base = "At" + prime; break;
  }
  return base + "_{" + std::to_string(i + 1) + std::to_string(s + 1) + "}";
}

bool is_out_of_order(const Word& w) {
  return w.size() == 2 && w[1] < w[0];
}

namespace {

int column_group(const Word& w) {
  if (w.size() == 2) return is_out_of_order(w) ? 0 : 1;
  return w.size() == 1 ? 2 : 3;
}

} // namespace

bool ColumnLess::operator()(const Word& a, const Word& b) const {
  const int ga = column_group(a);
  const int gb = column_group(b);
  if (ga != gb) return ga < gb;
  return a < b;
}

AlgElement AlgElement::identity(const Scalar& c) {
  AlgElement e;
  e.add_term({}, c);
  return e;
}

AlgElement AlgElement::gen(const Generator& g, const Scalar& c) {
  AlgElement e;
  e.add_term({g}, c);
  return e;
}

AlgElement AlgElement::word(const Generator& a, const Generator& b, const Scalar& c) {
  AlgElement e;
  e.add_term({a, b}, c);
  return e;
}

int AlgElement::degree() const {
  int d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.size()));
  return d;
}

Scalar AlgElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

void AlgElement::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  if (w.size() > 2) throw Error(ErrorCode::InvalidArgument, "algebra elements have degree at most 2");
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgElement& AlgElement::operator+=(const AlgElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

AlgElement AlgElement::operator-() const {
  AlgElement out = *this;
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

AlgElement operator*(const Scalar& c, const AlgElement& a) {
  if (c.is_zero()) return AlgElement();
  AlgElement out = a;
  for (auto& [w, x] : out.terms_) x *= c;
  return out;
}

AlgElement operator*(const AlgElement& a, const AlgElement& b) {
  AlgElement out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  return out;
}

bool operator==(const AlgElement& a, const AlgElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  for (; i != a.terms_.end(); ++i, ++j)
    if (i->first != j->first || i->second != j->second) return false;
  return true;
}

AlgElement AlgElement::map_coefficients(const std::function<Scalar(const Scalar&)>& f) const {
  AlgElement out;
  for (const auto& [w, c] : terms_) out.add_term(w, f(c));
  return out;
}

AlgElement AlgElement::substitute(const std::function<AlgElement(const Generator&)>& f) const {
  AlgElement out;
  for (const auto& [w, c] : terms_) {
    AlgElement t = AlgElement::identity(c);
    for (const auto& g : w) t = t * f(g);
    out += t;
  }
  return out;
}

std::string AlgElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    std::string word;
    for (const auto& g : w) word += (word.empty() ? "" : " ") + g.to_string();
    if (word.empty()) word = "I";
    std::string cs = c.to_string();
    bool negative = false;
    const bool single = c.num().terms().size() == 1;
    if (single && cs.front() == '-') {
      negative = true;
      cs = cs.substr(1);
    }
    std::string term;
    if (cs == "1") term = word;
    else if (single && c.den().is_one()) term = cs + "*" + word;
    else term = "(" + cs + ")*" + word;
    if (first) out = negative ? "-" + term : term;
    else out += (negative ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

AlgElement bracket(const AlgElement& x, const AlgElement& y, Sigma sigma, const Scalar& c) {
  return x * y - (Scalar(sign(sigma)) * c) * (y * x);
}

std::vector<AlgElement> RelationSet::relations() const {
  std::vector<AlgElement> out;
  std::set<std::string> seen;
  auto consider = [&](const AlgElement& e) {
    if (e.is_zero()) return;
    const Scalar lead = e.terms().begin()->second;
    const std::string key = (lead.inverse() * e).to_string();
    if (seen.insert(key).second) out.push_back(e);
  };
  for (const auto& b : blocks_)
    for (const auto& e : b.entries) consider(e);
  for (const auto& e : extra_) consider(e);
  return out;
}

// ---------------------------------------------------------------- reduction

Reducer::Reducer(const std::vector<AlgElement>& relations) {
  std::vector<const AlgElement*> order;
  order.reserve(relations.size());
  for (const auto& r : relations) order.push_back(&r);
  // Simple rows first keeps the pivots simple.
  auto weight = [](const AlgElement* e) {
    std::size_t w = 0;
    for (const auto& [word, c] : e->terms()) w += c.complexity();
    return std::make_pair(e->terms().size(), w);
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](const AlgElement* a, const AlgElement* b) { return weight(a) < weight(b); });
  for (const auto* r : order) insert(*r);
}

AlgElement Reducer::reduce(const AlgElement& e) const {
  AlgElement out = e;
  for (const auto& [w, c] : e.terms()) {
    auto it = pivot_index_.find(w);
    if (it == pivot_index_.end()) continue;
    // rows are fully reduced, so the coefficient of w in `out` is still c
    out -= c * rows_[it->second];
  }
  return out;
}

void Reducer::insert(AlgElement row) {
  row = reduce(row);
  if (row.is_zero()) return;
  const Word lead = row.terms().begin()->first;
  const Scalar lead_coef = row.terms().begin()->second;
  if (!lead_coef.is_one()) row = lead_coef.inverse() * row;
  for (auto& other : rows_) {
    const Scalar c = other.coefficient(lead);
    if (!c.is_zero()) other -= c * row;
  }
  pivot_index_[lead] = rows_.size();
  rows_.push_back(std::move(row));
}

bool relation_span_equal(const std::vector<AlgElement>& a, const std::vector<AlgElement>& b) {
  Reducer ra(a);
  Reducer rb(b);
  if (ra.rank() != rb.rank()) return false;
  for (const auto& e : a)
    if (!rb.contains(e)) return false;
  for (const auto& e : b)
    if (!ra.contains(e)) return false;
  return true;
}

bool relation_span_equal(const RelationSet& a, const RelationSet& b) {
  return relation_span_equal(a.relations(), b.relations());
}

AlgElement normal_order(const AlgElement& e, const Reducer& rel) {
  AlgElement out = rel.reduce(e);
  for (const auto& [w, c] : out.terms())
    if (is_out_of_order(w))
      throw Error(ErrorCode::MissingRewriteRule, "no rewrite rule for " + w[0].to_string() + " " + w[1].to_string());
  return out;
}

AlgElement normal_order(const AlgElement& e, const RelationSet& rel) {
  return normal_order(e, Reducer(rel.relations()));
}

} // namespace jorcon
