#include "sandwich/cli/problem.hpp"

#include "sandwich/cli/documents.hpp"

namespace sandwich::cli {

std::string_view model_name(Model m) {
  switch (m) {
    case Model::pl_interval: return "pl-interval";
    case Model::dense_interval: return "dense-interval";
    case Model::one_point: return "one-point";
    case Model::finite: return "finite";
  }
  return "?";
}

const FunctionValue* ProblemSpec::find(std::string_view name) const {
  for (const NamedFunction& nf : functions) {
    if (nf.name == name) return &nf.value;
  }
  return nullptr;
}

namespace {

Model parse_model(const DocumentReader& r) {
  const std::string name = r.string("/model");
  for (Model m : {Model::pl_interval, Model::dense_interval, Model::one_point, Model::finite}) {
    if (model_name(m) == name) return m;
  }
  r.fail("/model", "unknown model '" + name +
                       "' (expected pl-interval, dense-interval, one-point or finite)");
}

std::string escape(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

void check_names(const DocumentReader& r, const ProblemSpec& spec, const std::string& pointer,
                 const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!spec.find(names[i])) {
      r.fail(pointer + "/" + std::to_string(i), "no function named '" + names[i] + "'");
    }
  }
}

FunctionValue read_function(const DocumentReader& r, const ProblemSpec& spec, const std::string& p) {
  try {
    switch (spec.model) {
      case Model::pl_interval: return r.pl_function(p);
      case Model::dense_interval: return r.punctured_function(p, spec.removed);
      case Model::one_point: return r.seq_function(p);
      case Model::finite: return r.finite_function(p);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    // Construction-time failures (e.g. a removed point at an endpoint) are
    // still input errors, so report them against the function's field.
    r.fail(p, e.what());
  }
  r.fail(p, "unsupported model");
}

}  // namespace

ProblemSpec parse_problem(std::string_view text) {
  const LocatedJson doc = LocatedJson::parse(text);
  const DocumentReader r(doc);
  r.only_fields("", {"model", "domain", "removed", "size", "functions", "families", "generators",
                     "parameters"});

  ProblemSpec spec;
  spec.model = parse_model(r);

  if (r.has("/domain")) {
    if (!r.at("/domain").is_array() || r.at("/domain").size() != 2) {
      r.fail("/domain", "expected [lo, hi]");
    }
    if (spec.model == Model::finite || spec.model == Model::one_point) {
      r.fail("/domain", "domain applies only to interval models");
    }
    Rational lo = r.rational("/domain/0");
    Rational hi = r.rational("/domain/1");
    if (!(lo < hi)) r.fail("/domain", "domain needs lo < hi");
    spec.domain.emplace(std::move(lo), std::move(hi));
  }

  if (r.has("/removed")) {
    if (spec.model != Model::dense_interval) {
      r.fail("/removed", "removed points apply only to the dense-interval model");
    }
    spec.removed = r.rationals("/removed");
    for (std::size_t i = 1; i < spec.removed.size(); ++i) {
      if (!(spec.removed[i - 1] < spec.removed[i])) {
        r.fail("/removed/" + std::to_string(i), "removed points must be strictly increasing");
      }
    }
  }

  if (r.has("/size")) {
    if (spec.model != Model::finite) r.fail("/size", "size applies only to the finite model");
    spec.size = r.count("/size");
    if (*spec.size == 0) r.fail("/size", "size must be positive");
  }

  if (!r.at("/functions").is_object()) r.fail("/functions", "expected an object of named functions");
  // nlohmann::json objects are key-sorted, which gives a stable document order.
  for (const auto& [name, value] : r.at("/functions").items()) {
    const std::string p = "/functions/" + escape(name);
    FunctionValue fv = read_function(r, spec, p);
    if (spec.domain) {
      const PLFunction* carrier = nullptr;
      if (const auto* pl = std::get_if<PLFunction>(&fv)) carrier = pl;
      if (const auto* pf = std::get_if<PuncturedFunction>(&fv)) carrier = &pf->carrier();
      if (carrier && (carrier->lo() != spec.domain->first || carrier->hi() != spec.domain->second)) {
        r.fail(p, "function '" + name + "' is not defined on the declared domain");
      }
    }
    if (const auto* ff = std::get_if<FiniteFunction>(&fv)) {
      if (!spec.size) spec.size = ff->size();
      if (ff->size() != *spec.size) {
        r.fail(p, "function '" + name + "' has " + std::to_string(ff->size()) + " values, expected " +
                      std::to_string(*spec.size));
      }
    }
    spec.functions.push_back({name, std::move(fv)});
  }

  if (r.has("/families")) {
    r.only_fields("/families", {"S", "T"});
    if (r.has("/families/S")) spec.family_s = r.strings("/families/S");
    if (r.has("/families/T")) spec.family_t = r.strings("/families/T");
    check_names(r, spec, "/families/S", spec.family_s);
    check_names(r, spec, "/families/T", spec.family_t);
  }
  if (r.has("/generators")) {
    spec.generators = r.strings("/generators");
    check_names(r, spec, "/generators", spec.generators);
  }

  if (r.has("/parameters")) {
    r.only_fields("/parameters", {"epsilon", "tol", "eta", "lambda", "delta", "samples"});
    Parameters& pm = spec.parameters;
    auto opt = [&](const char* key, std::optional<Rational>& out) {
      const std::string p = std::string("/parameters/") + key;
      if (r.has(p)) out = r.rational(p);
    };
    opt("epsilon", pm.epsilon);
    opt("tol", pm.tol);
    opt("eta", pm.eta);
    opt("lambda", pm.lambda);
    opt("delta", pm.delta);
    if (r.has("/parameters/samples")) pm.samples = r.rationals("/parameters/samples");
  }
  return spec;
}

std::string emit_problem(const ProblemSpec& spec) {
  json out = json::object();
  out["model"] = std::string(model_name(spec.model));
  if (spec.domain) out["domain"] = {spec.domain->first.str(), spec.domain->second.str()};
  if (spec.model == Model::dense_interval) {
    out["removed"] = json::array();
    for (const Rational& d : spec.removed) out["removed"].push_back(d.str());
  }
  if (spec.size) out["size"] = *spec.size;
  out["functions"] = json::object();
  for (const NamedFunction& nf : spec.functions) {
    out["functions"][nf.name] = std::visit([](const auto& f) { return to_json(f); }, nf.value);
  }
  if (!spec.family_s.empty() || !spec.family_t.empty()) {
    out["families"] = json::object();
    if (!spec.family_s.empty()) out["families"]["S"] = spec.family_s;
    if (!spec.family_t.empty()) out["families"]["T"] = spec.family_t;
  }
  if (!spec.generators.empty()) out["generators"] = spec.generators;

  json params = json::object();
  const Parameters& pm = spec.parameters;
  auto put = [&](const char* key, const std::optional<Rational>& v) {
    if (v) params[key] = v->str();
  };
  put("epsilon", pm.epsilon);
  put("tol", pm.tol);
  put("eta", pm.eta);
  put("lambda", pm.lambda);
  put("delta", pm.delta);
  if (pm.samples) {
    params["samples"] = json::array();
    for (const Rational& s : *pm.samples) params["samples"].push_back(s.str());
  }
  if (!params.empty()) out["parameters"] = std::move(params);
  return out.dump(2) + "\n";
}

}  // namespace sandwich::cli
