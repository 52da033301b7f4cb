#include "jorcon/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace jorcon {

namespace {

std::string rational_string(const mpq_class& q) {
  return q.get_str();
}

mpq_class rational_from(const json& j) {
  if (!j.is_string()) throw Error(ErrorCode::Parse, "rational must be a string");
  mpq_class q;
  if (q.set_str(j.get<std::string>(), 10) != 0) throw Error(ErrorCode::Parse, "bad rational " + j.get<std::string>());
  q.canonicalize();
  return q;
}

json poly_json(const Poly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms())
    out.push_back(json::array({e[0], e[1], e[2], rational_string(c.rational()), rational_string(c.radical())}));
  return out;
}

Poly poly_from(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, "polynomial must be an array");
  std::vector<Poly::Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 5) throw Error(ErrorCode::Parse, "polynomial term must have five fields");
    Exponents e{};
    for (int k = 0; k < 3; ++k) {
      if (!t[k].is_number_integer() || t[k].get<int>() < 0) throw Error(ErrorCode::Parse, "bad exponent");
      e[k] = t[k].get<int>();
    }
    terms.emplace_back(e, QSqrt2(rational_from(t[3]), rational_from(t[4])));
  }
  return Poly::from_terms(std::move(terms));
}

const char* kind_name(GenKind k) {
  switch (k) {
    case GenKind::Creation: return "A+";
    case GenKind::Annihilation: return "A";
    case GenKind::Tilde: return "At";
  }
  return "";
}

const char* side_name(Side s) {
  switch (s) {
    case Side::Q: return "q";
    case Side::Transformed: return "transformed";
    case Side::H: return "h";
  }
  return "";
}

AlgElement monic(const AlgElement& e) {
  const Scalar& lead = e.terms().begin()->second;
  return lead.is_one() ? e : lead.inverse() * e;
}

int padded_width(const std::vector<std::string>& cells) {
  std::size_t w = 1;
  for (const auto& c : cells) w = std::max(w, c.size());
  return static_cast<int>(w);
}

} // namespace

json to_json(const Scalar& s) {
  json out = json::object();
  out["num"] = poly_json(s.num());
  out["den"] = poly_json(s.den());
  return out;
}

Scalar scalar_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) throw Error(ErrorCode::Parse, "scalar needs num and den");
  Poly den = poly_from(j["den"]);
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  return Scalar(poly_from(j["num"]), std::move(den));
}

json to_json(const LabeledMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.size(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.size(); ++c) row.push_back(to_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  json out = json::object();
  out["dims"] = m.dims();
  out["rows"] = std::move(rows);
  return out;
}

LabeledMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dims") || !j.contains("rows")) throw Error(ErrorCode::Parse, "matrix needs dims and rows");
  std::vector<int> dims;
  for (const auto& d : j["dims"]) {
    if (!d.is_number_integer() || d.get<int>() < 1) throw Error(ErrorCode::Parse, "bad dimension");
    dims.push_back(d.get<int>());
  }
  if (dims.empty()) throw Error(ErrorCode::Parse, "empty dims");
  LabeledMatrix m(dims);
  const auto& rows = j["rows"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != m.size()) throw Error(ErrorCode::Parse, "row count does not match dims");
  for (int r = 0; r < m.size(); ++r) {
    if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != m.size()) throw Error(ErrorCode::Parse, "row length does not match dims");
    for (int c = 0; c < m.size(); ++c) m.at(r, c) = scalar_from_json(rows[r][c]);
  }
  return m;
}

json to_json(const Generator& g) {
  json out = json::object();
  out["kind"] = kind_name(g.kind);
  out["i"] = g.i + 1;
  out["s"] = g.s + 1;
  out["side"] = side_name(g.side);
  return out;
}

Generator generator_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::Parse, "generator must be an object");
  Generator g;
  const std::string k = j.value("kind", "");
  if (k == "A+") g.kind = GenKind::Creation;
  else if (k == "A") g.kind = GenKind::Annihilation;
  else if (k == "At") g.kind = GenKind::Tilde;
  else throw Error(ErrorCode::Parse, "unknown generator kind " + k);
  const std::string s = j.value("side", "");
  if (s == "q") g.side = Side::Q;
  else if (s == "transformed") g.side = Side::Transformed;
  else if (s == "h") g.side = Side::H;
  else throw Error(ErrorCode::Parse, "unknown side " + s);
  g.i = j.value("i", 0) - 1;
  g.s = j.value("s", 0) - 1;
  if (g.i < 0 || g.s < 0) throw Error(ErrorCode::Parse, "generator labels start at 1");
  return g;
}

json to_json(const AlgElement& e) {
  json lin = json::array();
  json quad = json::array();
  for (const auto& [w, c] : e.terms()) {
    if (w.size() == 1) lin.push_back(json::array({to_json(w[0]), to_json(c)}));
    if (w.size() == 2) quad.push_back(json::array({to_json(w[0]), to_json(w[1]), to_json(c)}));
  }
  json out = json::object();
  out["const"] = to_json(e.constant());
  out["lin"] = std::move(lin);
  out["quad"] = std::move(quad);
  return out;
}

AlgElement element_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::Parse, "relation must be an object");
  AlgElement e;
  e.add_term({}, scalar_from_json(j.at("const")));
  for (const auto& t : j.at("lin")) e.add_term({generator_from_json(t.at(0))}, scalar_from_json(t.at(1)));
  for (const auto& t : j.at("quad"))
    e.add_term({generator_from_json(t.at(0)), generator_from_json(t.at(1))}, scalar_from_json(t.at(2)));
  return e;
}

json to_json(const RelationSet& r) {
  const auto& m = r.meta();
  json out = json::object();
  out["n"] = m.n;
  out["m"] = m.m;
  out["sigma"] = sign(m.sigma);
  out["family"] = m.family;
  if (m.variant) out["variant"] = m.variant;
  out["basis"] = m.basis == Basis::Plain ? "plain" : "tilde";
  out["form"] = m.form;
  json rels = json::array();
  for (const auto& e : r.relations()) rels.push_back(to_json(monic(e)));
  out["relations"] = std::move(rels);
  return out;
}

std::string render_text(const LabeledMatrix& m) {
  std::vector<std::string> cells;
  for (int r = 0; r < m.size(); ++r)
    for (int c = 0; c < m.size(); ++c) cells.push_back(m.at(r, c).to_string());
  const int w = padded_width(cells);
  std::ostringstream os;
  for (int r = 0; r < m.size(); ++r) {
    os << "[";
    for (int c = 0; c < m.size(); ++c) {
      const std::string& s = cells[static_cast<std::size_t>(r) * m.size() + c];
      os << (c ? "  " : " ") << std::string(w - s.size(), ' ') << s;
    }
    os << " ]\n";
  }
  return os.str();
}

std::string render_text(const RelationSet& r) {
  std::ostringstream os;
  for (const auto& e : r.relations()) os << monic(e).to_string() << " = 0\n";
  return os.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

} // namespace jorcon
