#include "sandwich/cli/documents.hpp"

#include <algorithm>
#include <stdexcept>

namespace sandwich::cli {

json to_json(const Rational& r) { return r.str(); }

json to_json(const PLFunction& f) {
  json records = json::array();
  auto pts = f.breakpoints();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    json rec = {{"x", pts[i].x.str()}};
    if (i > 0) rec["left"] = pts[i].left.str();
    rec["value"] = pts[i].value.str();
    if (i + 1 < pts.size()) rec["right"] = pts[i].right.str();
    records.push_back(std::move(rec));
  }
  return records;
}

json to_json(const PuncturedFunction& f) {
  // Removed points that the canonical carrier dropped (continuous there)
  // still need an explicit null-valued record.
  PLFunction marked = f.carrier();
  json records = json::array();
  std::vector<Rational> xs;
  for (const Breakpoint& p : f.carrier().breakpoints()) xs.push_back(p.x);
  for (const Rational& d : f.removed()) xs.push_back(d);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Rational& x = xs[i];
    json rec = {{"x", x.str()}};
    if (i > 0) rec["left"] = marked.left_limit(x).str();
    rec["value"] = f.is_removed(x) ? json(nullptr) : json(marked(x).str());
    if (i + 1 < xs.size()) rec["right"] = marked.right_limit(x).str();
    records.push_back(std::move(rec));
  }
  return records;
}

json to_json(const SeqFunction& f) {
  json out = json::object();
  out["prefix"] = json::array();
  for (const Rational& v : f.prefix()) out["prefix"].push_back(v.str());
  out["period"] = json::array();
  for (const Rational& v : f.period()) out["period"].push_back(v.str());
  if (f.infinity_value()) out["infinity"] = f.infinity_value()->str();
  return out;
}

json to_json(const FiniteFunction& f) {
  json out = json::array();
  for (const Rational& v : f.values()) out.push_back(v.str());
  return out;
}

json to_json(const LatticeExpr& e) {
  using K = LatticeExpr::Kind;
  switch (e.kind()) {
    case K::generator: return {{"generator", e.index()}};
    case K::constant: return {{"constant", e.scalar().str()}};
    case K::scale: return {{"scale", e.scalar().str()}, {"of", to_json(e.lhs())}};
    case K::sum: return {{"sum", {to_json(e.lhs()), to_json(e.rhs())}}};
    case K::join: return {{"join", {to_json(e.lhs()), to_json(e.rhs())}}};
    case K::meet: return {{"meet", {to_json(e.lhs()), to_json(e.rhs())}}};
    case K::product: return {{"product", {to_json(e.lhs()), to_json(e.rhs())}}};
  }
  return nullptr;
}

json to_json(const ExtractionResult& r) {
  json cover = json::array();
  for (const CoverRecord& c : r.cover) {
    cover.push_back({{"s", c.s_index},
                     {"t", c.t_index},
                     {"from", c.from.str()},
                     {"to", c.to.str()},
                     {"from_closed", c.from_closed},
                     {"to_closed", c.to_closed}});
  }
  return {{"s_indices", r.s_indices}, {"t_indices", r.t_indices}, {"cover", cover}};
}

json to_json(const Obstruction& o) {
  json out = json::object();
  if (const auto* x = std::get_if<Rational>(&o.y)) {
    out["y"] = x->str();
  } else {
    const auto& p = std::get<SequencePoint>(o.y);
    if (p.is_infinity()) out["y"] = "infinity";
    else out["y_index"] = *p.index;
  }
  out["eta"] = o.eta.str();
  out["lambda"] = o.lambda.str();
  return out;
}

json to_json(const InsertionCertificate& c) {
  json steps = json::array();
  for (const InsertionStep& s : c.steps) {
    steps.push_back({{"n", s.n},
                     {"lambda", s.lambda.str()},
                     {"distance", s.distance.str()},
                     {"lower_ok", s.lower_ok},
                     {"upper_ok", s.upper_ok},
                     {"cauchy_ok", s.cauchy_ok},
                     {"a", to_json(s.a)}});
  }
  return {{"final_tol", c.final_tol.str()}, {"steps", steps}};
}

// ---------------------------------------------------------------------------

const json& DocumentReader::at(const std::string& pointer) const {
  try {
    return doc_.root().at(json::json_pointer(pointer));
  } catch (const json::exception&) {
    fail(pointer, "missing required field");
  }
}

bool DocumentReader::has(const std::string& pointer) const {
  return doc_.root().contains(json::json_pointer(pointer));
}

void DocumentReader::only_fields(const std::string& pointer,
                                 std::initializer_list<std::string_view> allowed) const {
  const json& obj = at(pointer);
  if (!obj.is_object()) fail(pointer, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      fail(pointer + "/" + key, "unknown field '" + key + "'");
    }
  }
}

Rational DocumentReader::rational(const std::string& pointer) const {
  const json& v = at(pointer);
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(pointer, e.what());
    }
  }
  fail(pointer, "expected a rational as \"p/q\" string or integer");
}

std::vector<Rational> DocumentReader::rationals(const std::string& pointer) const {
  const json& v = at(pointer);
  if (!v.is_array()) fail(pointer, "expected an array of rationals");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(rational(pointer + "/" + std::to_string(i)));
  return out;
}

std::string DocumentReader::string(const std::string& pointer) const {
  const json& v = at(pointer);
  if (!v.is_string()) fail(pointer, "expected a string");
  return v.get<std::string>();
}

std::vector<std::string> DocumentReader::strings(const std::string& pointer) const {
  const json& v = at(pointer);
  if (!v.is_array()) fail(pointer, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(string(pointer + "/" + std::to_string(i)));
  return out;
}

bool DocumentReader::boolean(const std::string& pointer) const {
  const json& v = at(pointer);
  if (!v.is_boolean()) fail(pointer, "expected true or false");
  return v.get<bool>();
}

std::size_t DocumentReader::count(const std::string& pointer) const {
  const json& v = at(pointer);
  if (!v.is_number_unsigned()) fail(pointer, "expected a non-negative integer");
  return v.get<std::size_t>();
}

PLFunction DocumentReader::breakpoint_records(const std::string& pointer,
                                              std::span<const Rational> removed) const {
  const json& v = at(pointer);
  if (!v.is_array()) fail(pointer, "expected an array of breakpoint records");
  if (v.size() < 2) fail(pointer, "need at least two breakpoint records");
  std::vector<Breakpoint> pts;
  std::vector<Rational> seen_removed;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string rec = pointer + "/" + std::to_string(i);
    const bool first = i == 0;
    const bool last = i + 1 == v.size();
    if (first) only_fields(rec, {"x", "value", "right"});
    else if (last) only_fields(rec, {"x", "left", "value"});
    else only_fields(rec, {"x", "left", "value", "right"});

    Breakpoint p;
    p.x = rational(rec + "/x");
    if (!pts.empty() && !(pts.back().x < p.x)) {
      fail(rec + "/x", "breakpoint " + p.x.str() + " is not greater than the previous breakpoint " +
                           pts.back().x.str());
    }
    const bool is_removed = std::binary_search(removed.begin(), removed.end(), p.x);
    if (!first) p.left = rational(rec + "/left");
    if (!last) p.right = rational(rec + "/right");
    if (at(rec + "/value").is_null()) {
      if (!is_removed) fail(rec + "/value", "value may only be null at a removed point");
      p.value = max(p.left, p.right);
      seen_removed.push_back(p.x);
    } else {
      if (is_removed) fail(rec + "/value", "removed point " + p.x.str() + " must have a null value");
      p.value = rational(rec + "/value");
    }
    if (first) p.left = p.value;
    if (last) p.right = p.value;
    pts.push_back(std::move(p));
  }
  if (seen_removed.size() != removed.size()) {
    for (const Rational& d : removed) {
      if (std::find(seen_removed.begin(), seen_removed.end(), d) == seen_removed.end()) {
        fail(pointer, "no breakpoint record for removed point " + d.str());
      }
    }
  }
  return PLFunction::from_breakpoints(std::move(pts));
}

PLFunction DocumentReader::pl_function(const std::string& pointer) const {
  return breakpoint_records(pointer, {});
}

PuncturedFunction DocumentReader::punctured_function(const std::string& pointer,
                                                     std::span<const Rational> removed) const {
  PLFunction carrier = breakpoint_records(pointer, removed);
  return PuncturedFunction::make(carrier, std::vector<Rational>(removed.begin(), removed.end()));
}

SeqFunction DocumentReader::seq_function(const std::string& pointer) const {
  only_fields(pointer, {"prefix", "period", "infinity"});
  std::vector<Rational> prefix;
  if (has(pointer + "/prefix")) prefix = rationals(pointer + "/prefix");
  std::vector<Rational> period = rationals(pointer + "/period");
  if (period.empty()) fail(pointer + "/period", "period must be nonempty");
  std::optional<Rational> inf;
  if (has(pointer + "/infinity") && !at(pointer + "/infinity").is_null()) {
    inf = rational(pointer + "/infinity");
  }
  return SeqFunction::make(std::move(prefix), std::move(period), std::move(inf));
}

FiniteFunction DocumentReader::finite_function(const std::string& pointer) const {
  std::vector<Rational> values = rationals(pointer);
  if (values.empty()) fail(pointer, "finite function needs at least one value");
  return FiniteFunction(std::move(values));
}

LatticeExpr DocumentReader::lattice_expr(const std::string& pointer) const {
  const json& v = at(pointer);
  if (!v.is_object() || v.size() == 0) fail(pointer, "expected an expression object");
  auto binary = [&](const std::string& op) {
    const std::string p = pointer + "/" + op;
    if (!at(p).is_array() || at(p).size() != 2) fail(p, "expected two operands");
    return std::pair{lattice_expr(p + "/0"), lattice_expr(p + "/1")};
  };
  if (v.contains("generator")) {
    only_fields(pointer, {"generator"});
    return LatticeExpr::generator(count(pointer + "/generator"));
  }
  if (v.contains("constant")) {
    only_fields(pointer, {"constant"});
    return LatticeExpr::constant(rational(pointer + "/constant"));
  }
  if (v.contains("scale")) {
    only_fields(pointer, {"scale", "of"});
    return rational(pointer + "/scale") * lattice_expr(pointer + "/of");
  }
  if (v.contains("sum")) {
    only_fields(pointer, {"sum"});
    auto [a, b] = binary("sum");
    return a + b;
  }
  if (v.contains("join")) {
    only_fields(pointer, {"join"});
    auto [a, b] = binary("join");
    return join(a, b);
  }
  if (v.contains("meet")) {
    only_fields(pointer, {"meet"});
    auto [a, b] = binary("meet");
    return meet(a, b);
  }
  if (v.contains("product")) {
    only_fields(pointer, {"product"});
    auto [a, b] = binary("product");
    return product(a, b);
  }
  fail(pointer, "unknown expression node");
}

InsertionCertificate DocumentReader::certificate(const std::string& pointer) const {
  InsertionCertificate cert;
  cert.final_tol = rational(pointer + "/final_tol");
  const json& steps = at(pointer + "/steps");
  if (!steps.is_array()) fail(pointer + "/steps", "expected an array");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string s = pointer + "/steps/" + std::to_string(i);
    only_fields(s, {"n", "lambda", "distance", "lower_ok", "upper_ok", "cauchy_ok", "a"});
    cert.steps.push_back(InsertionStep{static_cast<unsigned>(count(s + "/n")), pl_function(s + "/a"),
                                       rational(s + "/lambda"), rational(s + "/distance"),
                                       boolean(s + "/lower_ok"), boolean(s + "/upper_ok"),
                                       boolean(s + "/cauchy_ok")});
  }
  return cert;
}

}  // namespace sandwich::cli
