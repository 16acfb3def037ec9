#include "sandwich/cli/commands.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "sandwich/cli/csv.hpp"
#include "sandwich/cli/svg.hpp"
#include "sandwich/condition_c.hpp"
#include "sandwich/extension.hpp"
#include "sandwich/insertion.hpp"
#include "sandwich/semicont.hpp"
#include "sandwich/stone_weierstrass.hpp"

namespace sandwich::cli {
namespace {

constexpr std::array<std::string_view, 12> kCommands = {
    "check", "envelope", "extract", "insert", "kt", "extend",
    "obstruct", "pipeline", "sw", "sample", "plot", "verify-cert"};

constexpr std::size_t kDefaultCsvResolution = 16;

// Result functions a command may also emit as CSV/SVG files.
struct Plottable {
  std::string name;
  PlotSeries series;
  PuncturedFunction punctured;
};

class Context {
 public:
  Context(std::string_view command, const ProblemSpec& spec, const RunOptions& options)
      : command_(command), spec_(spec), options_(options) {
    report_.document = {{"command", std::string(command)}, {"status", "ok"}};
  }

  const ProblemSpec& spec() const { return spec_; }
  const RunOptions& options() const { return options_; }
  Report& report() { return report_; }
  json& doc() { return report_.document; }

  void require_model(std::initializer_list<Model> allowed) const {
    if (std::find(allowed.begin(), allowed.end(), spec_.model) == allowed.end()) {
      throw ParameterError("command '" + command_ + "' does not support the " +
                           std::string(model_name(spec_.model)) + " model");
    }
  }

  template <class T>
  const T* find(std::string_view name) const {
    const FunctionValue* v = spec_.find(name);
    return v ? std::get_if<T>(v) : nullptr;
  }

  template <class T>
  const T& need(std::string_view name) const {
    if (const T* f = find<T>(name)) return *f;
    throw ParameterError("command '" + command_ + "' needs a function named '" + std::string(name) + "'");
  }

  template <class T>
  std::vector<T> family(const std::vector<std::string>& names, const char* label) const {
    if (names.empty()) {
      throw ParameterError("command '" + command_ + "' needs a nonempty family " + label);
    }
    std::vector<T> out;
    for (const std::string& n : names) out.push_back(need<T>(n));
    return out;
  }

  Rational param(const std::optional<Rational>& flag, const std::optional<Rational>& doc_value,
                 const char* name) const {
    if (flag) return *flag;
    if (doc_value) return *doc_value;
    throw ParameterError("command '" + command_ + "' needs parameter '" + name + "'");
  }

  ScheduleOptions schedule() const {
    ScheduleOptions s;
    if (options_.lambda_cap) s.cap = *options_.lambda_cap;
    return s;
  }

  void say(const std::string& line) { report_.text += line + "\n"; }

  void plot(std::string name, const PLFunction& f) {
    plots_.push_back({name, PlotSeries::of(name, f), PuncturedFunction::make(f, {})});
  }
  void plot(std::string name, const PuncturedFunction& f) {
    plots_.push_back({name, PlotSeries::of(name, f), f});
  }

  void emit_requested_files() {
    if (plots_.empty()) return;
    if (options_.csv_resolution) {
      for (const Plottable& p : plots_) {
        report_.files.push_back(
            {p.name + ".csv", to_csv(sample_rows(p.punctured, *options_.csv_resolution))});
      }
    }
    if (options_.svg) {
      std::vector<PlotSeries> series;
      for (const Plottable& p : plots_) series.push_back(p.series);
      report_.files.push_back({command_ + ".svg", render_svg(series)});
    }
  }

  const std::vector<Plottable>& plots() const { return plots_; }

 private:
  std::string command_;
  const ProblemSpec& spec_;
  const RunOptions& options_;
  Report report_;
  std::vector<Plottable> plots_;
};

json semicontinuity(const SemicontinuityCheck& c) {
  json out = {{"holds", c.holds}};
  if (!c.holds) {
    out["x"] = c.x->str();
    out["deficit"] = c.deficit->str();
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------------------

void cmd_check(Context& ctx) {
  json results = json::object();
  for (const NamedFunction& nf : ctx.spec().functions) {
    json r;
    std::visit(
        [&](const auto& f) {
          using T = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<T, PLFunction> || std::is_same_v<T, PuncturedFunction>) {
            const SemicontinuityCheck u = is_usc(f);
            const SemicontinuityCheck l = is_lsc(f);
            r["usc"] = semicontinuity(u);
            r["lsc"] = semicontinuity(l);
            r["continuous"] = u.holds && l.holds;
          } else if constexpr (std::is_same_v<T, SeqFunction>) {
            r["usc"] = {{"holds", is_usc(f)}};
            r["lsc"] = {{"holds", is_lsc(f)}};
            r["continuous"] = is_usc(f) && is_lsc(f);
            r["limsup"] = f.limsup().str();
            r["liminf"] = f.liminf().str();
          } else {
            r["usc"] = {{"holds", true}};
            r["lsc"] = {{"holds", true}};
            r["continuous"] = true;
          }
          if constexpr (std::is_same_v<T, PuncturedFunction>) {
            // Values at removed points are limits of values on X, so the
            // carrier has the same supremum.
            r["sup_norm"] = sup_norm(f.carrier()).str();
          } else {
            r["sup_norm"] = sup_norm(f).str();
          }
        },
        nf.value);
    ctx.say(nf.name + ": usc " + yes_no(r["usc"]["holds"]) + ", lsc " + yes_no(r["lsc"]["holds"]) +
            ", sup norm " + r["sup_norm"].get<std::string>());
    if (!r["usc"]["holds"].get<bool>() && r["usc"].contains("x")) {
      ctx.say("  not usc at x = " + r["usc"]["x"].get<std::string>() + " (deficit " +
              r["usc"]["deficit"].get<std::string>() + ")");
    }
    if (!r["lsc"]["holds"].get<bool>() && r["lsc"].contains("x")) {
      ctx.say("  not lsc at x = " + r["lsc"]["x"].get<std::string>() + " (deficit " +
              r["lsc"]["deficit"].get<std::string>() + ")");
    }
    results[nf.name] = std::move(r);
  }
  ctx.doc()["functions"] = std::move(results);

  const FunctionValue* f = ctx.spec().find("f");
  const FunctionValue* g = ctx.spec().find("g");
  if (f && g) {
    Comparison c = std::visit(
        [](const auto& a, const auto& b) -> Comparison {
          using A = std::decay_t<decltype(a)>;
          using B = std::decay_t<decltype(b)>;
          if constexpr (std::is_same_v<A, B>) return compare_le(a, b);
          else throw InternalError("functions of one document share a model");
        },
        *f, *g);
    json cmp = {{"holds", c.holds}};
    if (c.witness) cmp["witness"] = c.witness->str();
    ctx.doc()["f_le_g"] = cmp;
    ctx.say(std::string("f <= g: ") + yes_no(c.holds) +
            (c.witness ? " (fails at " + c.witness->str() + ")" : ""));
  }
}

void cmd_envelope(Context& ctx) {
  ctx.require_model({Model::pl_interval});
  const PLFunction* f = ctx.find<PLFunction>("f");
  const PLFunction* g = ctx.find<PLFunction>("g");
  if (!f && !g) throw ParameterError("command 'envelope' needs a function named 'f' or 'g'");
  const auto& pm = ctx.spec().parameters;
  const std::optional<Rational> lambda = ctx.options().lambda ? ctx.options().lambda : pm.lambda;

  if (lambda) {
    ctx.doc()["lambda"] = lambda->str();
    if (f) {
      PLFunction up = upper_lipschitz(*f, *lambda);
      ctx.doc()["upper"] = to_json(up);
      ctx.say("f^" + lambda->str() + " has " + std::to_string(up.piece_count()) + " pieces, sup norm " +
              sup_norm(up).str());
      ctx.plot("f", *f);
      ctx.plot("f_upper", up);
    }
    if (g) {
      PLFunction low = lower_lipschitz(*g, *lambda);
      ctx.doc()["lower"] = to_json(low);
      ctx.say("g_" + lambda->str() + " has " + std::to_string(low.piece_count()) + " pieces, sup norm " +
              sup_norm(low).str());
      ctx.plot("g", *g);
      ctx.plot("g_lower", low);
    }
    return;
  }

  const Rational delta = pm.delta ? *pm.delta : Rational::pow2(-8);
  ctx.doc()["delta"] = delta.str();
  if (f) {
    const std::vector<Rational> samples = pm.samples ? *pm.samples : default_samples(*f);
    DilworthWitness w = dilworth_witness(*f, samples, delta, ctx.schedule());
    PLFunction env = upper_lipschitz(*f, w.lambda);
    ctx.doc()["upper"] = {{"lambda", w.lambda.str()},
                          {"schedule_index", w.schedule_index},
                          {"samples", samples.size()},
                          {"envelope", to_json(env)}};
    ctx.say("f: lambda* = " + w.lambda.str() + " (schedule index " + std::to_string(w.schedule_index) +
            ", " + std::to_string(samples.size()) + " samples, delta " + delta.str() + ")");
    ctx.plot("f", *f);
    ctx.plot("f_upper", env);
  }
  if (g) {
    // The lower family of g is the upper family of -g, reflected.
    const PLFunction neg = -*g;
    const std::vector<Rational> samples = pm.samples ? *pm.samples : default_samples(neg);
    DilworthWitness w = dilworth_witness(neg, samples, delta, ctx.schedule());
    PLFunction env = lower_lipschitz(*g, w.lambda);
    ctx.doc()["lower"] = {{"lambda", w.lambda.str()},
                          {"schedule_index", w.schedule_index},
                          {"samples", samples.size()},
                          {"envelope", to_json(env)}};
    ctx.say("g: lambda* = " + w.lambda.str() + " (schedule index " + std::to_string(w.schedule_index) +
            ", " + std::to_string(samples.size()) + " samples, delta " + delta.str() + ")");
    ctx.plot("g", *g);
    ctx.plot("g_lower", env);
  }
}

std::string index_list(const std::vector<std::size_t>& idx, const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ", ";
    out += names.at(idx[i]);
  }
  return out + "}";
}

void cmd_extract(Context& ctx) {
  ctx.require_model({Model::pl_interval, Model::finite});
  const ProblemSpec& spec = ctx.spec();
  const Rational eps = ctx.param(ctx.options().epsilon, spec.parameters.epsilon, "epsilon");
  ExtractionResult r;
  if (spec.model == Model::pl_interval) {
    auto S = ctx.family<PLFunction>(spec.family_s, "S");
    auto T = ctx.family<PLFunction>(spec.family_t, "T");
    r = extract_finite(S, T, eps);
  } else {
    auto S = ctx.family<FiniteFunction>(spec.family_s, "S");
    auto T = ctx.family<FiniteFunction>(spec.family_t, "T");
    r = extract_finite(S, T, eps);
  }
  ctx.doc()["epsilon"] = eps.str();
  ctx.doc()["extraction"] = to_json(r);
  json s_names = json::array(), t_names = json::array();
  for (std::size_t i : r.s_indices) s_names.push_back(spec.family_s[i]);
  for (std::size_t i : r.t_indices) t_names.push_back(spec.family_t[i]);
  ctx.doc()["S0"] = s_names;
  ctx.doc()["T0"] = t_names;
  ctx.say("S0 = " + index_list(r.s_indices, spec.family_s));
  ctx.say("T0 = " + index_list(r.t_indices, spec.family_t));
  if (!r.cover.empty()) ctx.say(std::to_string(r.cover.size()) + " cover intervals");
}

void cmd_insert(Context& ctx) {
  ctx.require_model({Model::pl_interval});
  const PLFunction& f = ctx.need<PLFunction>("f");
  const PLFunction& g = ctx.need<PLFunction>("g");
  const Rational eps = ctx.param(ctx.options().epsilon, ctx.spec().parameters.epsilon, "epsilon");
  GapInsertion gi = insert_gap(f, g, eps, ctx.schedule());
  ctx.doc()["kind"] = "gap-insertion";
  ctx.doc()["f"] = to_json(f);
  ctx.doc()["g"] = to_json(g);
  ctx.doc()["epsilon"] = eps.str();
  ctx.doc()["lambda"] = gi.lambda.str();
  ctx.doc()["schedule_index"] = gi.schedule_index;
  ctx.doc()["a"] = to_json(gi.a);
  ctx.say("inserted continuous a with f <= a <= g at lambda = " + gi.lambda.str() + " (" +
          std::to_string(gi.a.piece_count()) + " pieces)");
  ctx.plot("f", f);
  ctx.plot("g", g);
  ctx.plot("a", gi.a);
}

void cmd_kt(Context& ctx) {
  ctx.require_model({Model::pl_interval});
  const PLFunction& f = ctx.need<PLFunction>("f");
  const PLFunction& g = ctx.need<PLFunction>("g");
  const Rational tol = ctx.param(ctx.options().tol, ctx.spec().parameters.tol, "tol");
  InsertionResult res = kt_compact(f, g, tol, ctx.schedule());
  ctx.doc()["kind"] = "insertion-certificate";
  ctx.doc()["f"] = to_json(f);
  ctx.doc()["g"] = to_json(g);
  ctx.doc()["tol"] = tol.str();
  ctx.doc()["h"] = to_json(res.h);
  ctx.doc()["certificate"] = to_json(res.certificate);
  for (const InsertionStep& s : res.certificate.steps) {
    ctx.say("n = " + std::to_string(s.n) + ": lambda " + s.lambda.str() + ", |a_n - a_(n-1)| = " +
            s.distance.str());
  }
  ctx.say("h satisfies f - " + tol.str() + " <= h <= g (" + std::to_string(res.h.piece_count()) +
          " pieces)");
  ctx.plot("f", f);
  ctx.plot("g", g);
  ctx.plot("h", res.h);
}

void cmd_extend(Context& ctx) {
  ctx.require_model({Model::dense_interval, Model::one_point});
  bool any = false;
  if (ctx.spec().model == Model::dense_interval) {
    if (const auto* f = ctx.find<PuncturedFunction>("f")) {
      PLFunction F = extend_upper(*f);
      ctx.doc()["upper"] = to_json(F);
      ctx.say("U(f) restricts to f: " + yes_no(restricts_to(F, *f)) + ", usc: " + yes_no(bool(is_usc(F))));
      ctx.plot("f", *f);
      ctx.plot("U_f", F);
      any = true;
    }
    if (const auto* g = ctx.find<PuncturedFunction>("g")) {
      PLFunction G = extend_lower(*g);
      ctx.doc()["lower"] = to_json(G);
      ctx.say("L(g) restricts to g: " + yes_no(restricts_to(G, *g)) + ", lsc: " + yes_no(bool(is_lsc(G))));
      ctx.plot("g", *g);
      ctx.plot("L_g", G);
      any = true;
    }
  } else {
    if (const auto* f = ctx.find<SeqFunction>("f")) {
      SeqFunction F = extend_upper(*f);
      ctx.doc()["upper"] = to_json(F);
      ctx.say("U(f)(infinity) = " + F.infinity_value()->str());
      any = true;
    }
    if (const auto* g = ctx.find<SeqFunction>("g")) {
      SeqFunction G = extend_lower(*g);
      ctx.doc()["lower"] = to_json(G);
      ctx.say("L(g)(infinity) = " + G.infinity_value()->str());
      any = true;
    }
  }
  if (!any) throw ParameterError("command 'extend' needs a function named 'f' or 'g'");
}

std::string point_str(const ModelPoint& y) {
  if (const auto* x = std::get_if<Rational>(&y)) return x->str();
  const auto& p = std::get<SequencePoint>(y);
  return p.is_infinity() ? "infinity" : "n = " + std::to_string(*p.index);
}

void report_obstruction(Context& ctx, const Obstruction& o) {
  ctx.report().exit_code = exit_obstruction;
  ctx.doc()["status"] = "obstruction";
  ctx.doc()["obstruction"] = to_json(o);
  ctx.say("obstruction at y = " + point_str(o.y) + ": y lies in the closures of {f >= " + o.eta.str() +
          "} and {g <= " + o.lambda.str() + "}");
}

void cmd_obstruct(Context& ctx) {
  ctx.require_model({Model::dense_interval, Model::one_point});
  const ProblemSpec& spec = ctx.spec();
  const Rational eta = ctx.param(ctx.options().eta, spec.parameters.eta, "eta");
  const Rational lambda = ctx.param(ctx.options().lambda, spec.parameters.lambda, "lambda");
  std::optional<Obstruction> o;
  if (spec.model == Model::dense_interval) {
    o = check_obstruction(ctx.need<PuncturedFunction>("f"), ctx.need<PuncturedFunction>("g"), eta, lambda);
  } else {
    o = check_obstruction(ctx.need<SeqFunction>("f"), ctx.need<SeqFunction>("g"), eta, lambda);
  }
  ctx.doc()["eta"] = eta.str();
  ctx.doc()["lambda"] = lambda.str();
  if (o) {
    report_obstruction(ctx, *o);
  } else {
    ctx.doc()["obstruction"] = nullptr;
    ctx.say("closures of {f >= " + eta.str() + "} and {g <= " + lambda.str() + "} are disjoint");
  }
}

// On the one-point model a continuous function on N ∪ {∞} is a convergent
// sequence. When U(f) <= L(g), the sequence that follows f on the prefixes
// and is constant limsup f afterwards lies between f and g.
void pipeline_one_point(Context& ctx) {
  const SeqFunction& f = ctx.need<SeqFunction>("f");
  const SeqFunction& g = ctx.need<SeqFunction>("g");
  const SeqFunction F = extend_upper(f);
  const SeqFunction G = extend_lower(g);
  ctx.doc()["upper_extension"] = to_json(F);
  ctx.doc()["lower_extension"] = to_json(G);
  if (Comparison c = compare_le(F, G); !c) {
    const bool at_inf = c.witness->sign() < 0;
    const Rational up = at_inf ? *F.infinity_value() : f.at(c.witness->numerator().get_ui());
    const Rational low = at_inf ? *G.infinity_value() : g.at(c.witness->numerator().get_ui());
    auto [eta, lambda] = straddling_levels(up, low, {up, low});
    std::optional<Obstruction> o = check_obstruction(f, g, eta, lambda);
    if (!o) throw InternalError("U(f) > L(g) but no obstruction was found");
    report_obstruction(ctx, *o);
    return;
  }
  const Rational c = f.limsup();
  const std::size_t head = std::max(f.prefix().size(), g.prefix().size());
  std::vector<Rational> prefix;
  for (std::size_t n = 0; n < head; ++n) prefix.push_back(f.at(n));
  const SeqFunction h = SeqFunction::make(prefix, {c}, c);
  if (!compare_le(f.with_infinity(c), h) || !compare_le(h, g.with_infinity(c))) {
    throw InternalError("sequence insertion postcondition failed");
  }
  ctx.doc()["kind"] = "sequence-insertion";
  ctx.doc()["h"] = to_json(h);
  ctx.say("U(f)(infinity) = " + F.infinity_value()->str() + " <= L(g)(infinity) = " +
          G.infinity_value()->str());
  ctx.say("h is eventually constant " + c.str() + " and satisfies f <= h <= g");
}

void cmd_pipeline(Context& ctx) {
  ctx.require_model({Model::dense_interval, Model::one_point});
  if (ctx.spec().model == Model::one_point) {
    pipeline_one_point(ctx);
    return;
  }
  const PuncturedFunction& f = ctx.need<PuncturedFunction>("f");
  const PuncturedFunction& g = ctx.need<PuncturedFunction>("g");
  const Rational tol = ctx.param(ctx.options().tol, ctx.spec().parameters.tol, "tol");
  PipelineResult res = kt_pipeline(f, g, tol, ctx.schedule());
  if (const auto* o = std::get_if<Obstruction>(&res)) {
    report_obstruction(ctx, *o);
    ctx.plot("f", f);
    ctx.plot("g", g);
    return;
  }
  const auto& ok = std::get<PipelineSuccess>(res);
  ctx.doc()["kind"] = "pipeline-certificate";
  ctx.doc()["removed"] = json::array();
  for (const Rational& d : f.removed()) ctx.doc()["removed"].push_back(d.str());
  ctx.doc()["f"] = to_json(f);
  ctx.doc()["g"] = to_json(g);
  ctx.doc()["tol"] = tol.str();
  ctx.doc()["upper_extension"] = to_json(ok.upper_extension);
  ctx.doc()["lower_extension"] = to_json(ok.lower_extension);
  ctx.doc()["h"] = to_json(ok.h);
  ctx.doc()["certificate"] = to_json(ok.insertion.certificate);
  ctx.say("U(f) <= L(g) on the closed interval; no obstruction");
  ctx.say("h satisfies f - " + tol.str() + " <= h <= g on X (" +
          std::to_string(ok.insertion.certificate.steps.size()) + " certified steps)");
  ctx.plot("f", f);
  ctx.plot("g", g);
  ctx.plot("h", ok.h);
}

void cmd_sw(Context& ctx) {
  ctx.require_model({Model::finite});
  const ProblemSpec& spec = ctx.spec();
  auto gens = ctx.family<FiniteFunction>(spec.generators, "of generators");
  const FiniteFunction& h = ctx.need<FiniteFunction>("h");
  LatticeExpr e = sw_construct(gens, h);
  const FiniteFunction value = evaluate(e, gens, h.size());
  ctx.doc()["expression"] = to_json(e);
  ctx.doc()["expression_text"] = e.str();
  ctx.doc()["value"] = to_json(value);
  ctx.doc()["exact"] = value == h;
  ctx.say("h = " + e.str());
  ctx.say(std::to_string(e.node_count()) + " nodes, evaluates to h exactly: " + yes_no(value == h));
}

void collect_interval_plots(Context& ctx, const char* command) {
  ctx.require_model({Model::pl_interval, Model::dense_interval});
  for (const NamedFunction& nf : ctx.spec().functions) {
    std::visit(
        [&](const auto& f) {
          using T = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<T, PLFunction> || std::is_same_v<T, PuncturedFunction>) {
            ctx.plot(nf.name, f);
          }
        },
        nf.value);
  }
  if (ctx.plots().empty()) throw ParameterError(std::string("command '") + command + "' needs a function");
}

void cmd_sample(Context& ctx) {
  collect_interval_plots(ctx, "sample");
  const std::size_t r = ctx.options().csv_resolution.value_or(kDefaultCsvResolution);
  ctx.doc()["resolution"] = r;
  const bool many = ctx.plots().size() > 1;
  for (const Plottable& p : ctx.plots()) {
    std::vector<CsvRow> rows = sample_rows(p.punctured, r);
    std::string csv = to_csv(rows);
    ctx.doc()["rows"][p.name] = rows.size();
    if (many) ctx.report().text += "# " + p.name + "\n";
    ctx.report().text += csv;
    ctx.report().files.push_back({p.name + ".csv", std::move(csv)});
  }
}

void cmd_plot(Context& ctx) {
  collect_interval_plots(ctx, "plot");
  std::vector<PlotSeries> series;
  json styles = json::object();
  for (const Plottable& p : ctx.plots()) {
    series.push_back(p.series);
    static constexpr const char* kNames[] = {"continuous", "usc", "lsc", "neither"};
    styles[p.name] = kNames[static_cast<int>(stroke_style(p.series))];
  }
  ctx.doc()["styles"] = styles;
  std::string svg = render_svg(series);
  ctx.report().text = svg;
  ctx.report().files.push_back({"plot.svg", std::move(svg)});
}

// ---------------------------------------------------------------------------

void check(CertificateCheck& c, bool ok, const std::string& failure) {
  if (!ok) {
    c.ok = false;
    c.failures.push_back(failure);
  }
}

CertificateCheck verify_gap_insertion(const DocumentReader& r) {
  r.only_fields("", {"command", "status", "kind", "f", "g", "epsilon", "lambda", "schedule_index", "a"});
  const PLFunction f = r.pl_function("/f");
  const PLFunction g = r.pl_function("/g");
  const PLFunction a = r.pl_function("/a");
  CertificateCheck c;
  check(c, a.is_continuous(), "a is not continuous");
  check(c, f.same_domain(a) && a.same_domain(g), "a is not defined on the domain of f and g");
  if (c.ok) {
    check(c, static_cast<bool>(compare_le(f, a)), "f <= a fails");
    check(c, static_cast<bool>(compare_le(a, g)), "a <= g fails");
  }
  return c;
}

CertificateCheck verify_insertion(const DocumentReader& r) {
  r.only_fields("", {"command", "status", "kind", "f", "g", "tol", "h", "certificate"});
  const PLFunction f = r.pl_function("/f");
  const PLFunction g = r.pl_function("/g");
  const PLFunction h = r.pl_function("/h");
  const Rational tol = r.rational("/tol");
  const InsertionCertificate cert = r.certificate("/certificate");
  CertificateCheck c = verify_certificate(f, g, cert);
  check(c, cert.final_tol == tol, "certificate tolerance differs from tol");
  check(c, !cert.steps.empty() && cert.steps.back().a == h, "h is not the last certified iterate");
  return c;
}

CertificateCheck verify_pipeline(const DocumentReader& r) {
  r.only_fields("", {"command", "status", "kind", "removed", "f", "g", "tol", "upper_extension",
                     "lower_extension", "h", "certificate"});
  const std::vector<Rational> removed = r.rationals("/removed");
  const PuncturedFunction f = r.punctured_function("/f", removed);
  const PuncturedFunction g = r.punctured_function("/g", removed);
  const PuncturedFunction h = r.punctured_function("/h", removed);
  const PLFunction F = r.pl_function("/upper_extension");
  const PLFunction G = r.pl_function("/lower_extension");
  const Rational tol = r.rational("/tol");
  const InsertionCertificate cert = r.certificate("/certificate");

  CertificateCheck c = verify_certificate(F, G, cert);
  check(c, cert.final_tol == tol, "certificate tolerance differs from tol");
  check(c, restricts_to(F, f), "upper extension does not restrict to f");
  check(c, restricts_to(G, g), "lower extension does not restrict to g");
  check(c, static_cast<bool>(is_usc(F)), "upper extension is not usc");
  check(c, static_cast<bool>(is_lsc(G)), "lower extension is not lsc");
  if (!cert.steps.empty()) {
    check(c, restricts_to(cert.steps.back().a, h), "h is not the restriction of the last iterate");
  }
  const PuncturedFunction f_low = PuncturedFunction::make(f.carrier() - tol, removed);
  check(c, static_cast<bool>(compare_le(f_low, h)), "f - tol <= h fails on X");
  check(c, static_cast<bool>(compare_le(h, g)), "h <= g fails on X");
  return c;
}

}  // namespace

std::span<const std::string_view> command_names() { return kCommands; }

Report run(std::string_view command, const ProblemSpec& spec, const RunOptions& options) {
  Context ctx(command, spec, options);
  if (command == "check") cmd_check(ctx);
  else if (command == "envelope") cmd_envelope(ctx);
  else if (command == "extract") cmd_extract(ctx);
  else if (command == "insert") cmd_insert(ctx);
  else if (command == "kt") cmd_kt(ctx);
  else if (command == "extend") cmd_extend(ctx);
  else if (command == "obstruct") cmd_obstruct(ctx);
  else if (command == "pipeline") cmd_pipeline(ctx);
  else if (command == "sw") cmd_sw(ctx);
  else if (command == "sample") cmd_sample(ctx);
  else if (command == "plot") cmd_plot(ctx);
  else throw ParameterError("unknown command '" + std::string(command) + "'");
  if (command != "sample" && command != "plot") ctx.emit_requested_files();
  return std::move(ctx.report());
}

Report verify_certificate_document(std::string_view text) {
  const LocatedJson doc = LocatedJson::parse(text);
  const DocumentReader r(doc);
  const std::string kind = r.string("/kind");
  CertificateCheck c;
  if (kind == "gap-insertion") c = verify_gap_insertion(r);
  else if (kind == "insertion-certificate") c = verify_insertion(r);
  else if (kind == "pipeline-certificate") c = verify_pipeline(r);
  else r.fail("/kind", "unknown certificate kind '" + kind + "'");

  Report report;
  report.document = {{"command", "verify-cert"}, {"kind", kind}, {"verified", c.ok}, {"failures", c.failures}};
  if (c.ok) {
    report.document["status"] = "ok";
    report.text = kind + ": certificate verified\n";
  } else {
    report.exit_code = exit_precondition;
    report.document["status"] = "rejected";
    report.text = kind + ": certificate rejected\n";
    for (const std::string& f : c.failures) report.text += "  " + f + "\n";
  }
  return report;
}

Report run_text(std::string_view command, std::string_view input, const RunOptions& options) {
  auto failure = [&](int code, const char* status, const std::string& message) {
    Report r;
    r.exit_code = code;
    r.document = {{"command", std::string(command)}, {"status", status}, {"message", message}};
    r.text = std::string(code == exit_internal ? "internal error: " : "error: ") + message + "\n";
    return r;
  };
  try {
    if (command == "verify-cert") return verify_certificate_document(input);
    return run(command, parse_problem(input), options);
  } catch (const ParseError& e) {
    Report r = failure(exit_precondition, "parse-error", e.what());
    r.document["line"] = e.line();
    r.document["field"] = e.field();
    return r;
  } catch (const SemicontinuityViolation& e) {
    Report r = failure(exit_precondition, "precondition-failure", e.what());
    r.document["x"] = e.x().str();
    r.document["deficit"] = e.deficit().str();
    return r;
  } catch (const SeparationError& e) {
    Report r = failure(exit_precondition, "precondition-failure", e.what());
    r.document["pair"] = {e.pair().first, e.pair().second};
    return r;
  } catch (const InternalError& e) {
    return failure(exit_internal, "internal-error", e.what());
  } catch (const Error& e) {
    return failure(exit_precondition, "precondition-failure", e.what());
  } catch (const std::exception& e) {
    return failure(exit_internal, "internal-error", e.what());
  }
}

}  // namespace sandwich::cli
