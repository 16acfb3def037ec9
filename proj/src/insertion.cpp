#include "sandwich/insertion.hpp"

#include "sandwich/condition_c.hpp"
#include "sandwich/error.hpp"

namespace sandwich {
namespace {

void require_semicontinuous(const PLFunction& f, const PLFunction& g) {
  if (const auto c = is_usc(f); !c) {
    throw SemicontinuityViolation("lower function is not usc at x = " + c.x->str(), *c.x,
                                  *c.deficit);
  }
  if (const auto c = is_lsc(g); !c) {
    throw SemicontinuityViolation("upper function is not lsc at x = " + c.x->str(), *c.x,
                                  *c.deficit);
  }
}

}  // namespace

GapInsertion insert_gap(const PLFunction& f, const PLFunction& g, const Rational& epsilon,
                        const ScheduleOptions& options) {
  if (epsilon.sign() <= 0) throw PreconditionError("gap ε must be positive, got " + epsilon.str());
  if (!f.same_domain(g)) throw DomainError("f and g live on different domains");
  require_semicontinuous(f, g);
  if (const auto gap = compare_le(f + epsilon, g); !gap) {
    throw PreconditionError("gap condition f + " + epsilon.str() + " <= g fails at x = " +
                            gap.witness->str());
  }
  const PLFunction both[] = {f, g};
  const LambdaSchedule schedule = make_schedule(both, options);
  const LipschitzFamily upper(f, EnvelopeDirection::upper, schedule);
  const LipschitzFamily lower(g, EnvelopeDirection::lower, schedule);
  ChainExtraction found = extract_from_chains(upper, lower);
  return {std::move(found.lower_member), std::move(found.lambda), found.index};
}

InsertionResult kt_compact(const PLFunction& f, const PLFunction& g, const Rational& tol,
                           const ScheduleOptions& options) {
  const auto exponent = tol.half_power_exponent();
  if (!exponent || *exponent < 1) {
    throw ParameterError("tol must be 1/2^N with N >= 1, got " + tol.str());
  }
  if (!f.same_domain(g)) throw DomainError("f and g live on different domains");
  require_semicontinuous(f, g);
  if (const auto order = compare_le(f, g); !order) {
    throw PreconditionError("f <= g fails at x = " + order.witness->str());
  }

  InsertionCertificate cert;
  cert.final_tol = tol;
  const unsigned total = *exponent;
  for (unsigned n = 1; n <= total; ++n) {
    const Rational shift = Rational::pow2(-static_cast<int>(n));  // 2^{-n}
    GapInsertion step = [&] {
      if (n == 1) return insert_gap(f - shift, g, shift, options);
      const PLFunction& prev = cert.steps.back().a;
      const Rational prev_shift = shift * Rational(2);  // 2^{-(n-1)}
      return insert_gap(join(f - shift, prev - prev_shift), meet(g, prev + prev_shift), shift,
                        options);
    }();

    const PLFunction& prev = n == 1 ? step.a : cert.steps.back().a;
    Rational distance = sup_norm(step.a - prev);
    const bool lower_ok = static_cast<bool>(compare_le(f - shift, step.a));
    const bool upper_ok = static_cast<bool>(compare_le(step.a, g));
    const bool cauchy_ok = distance <= shift * Rational(2);
    if (!(lower_ok && upper_ok && cauchy_ok && step.a.is_continuous())) {
      throw InternalError("Dieudonné recurrence violated at step " + std::to_string(n));
    }
    InsertionStep rec{n,         std::move(step.a), std::move(step.lambda), std::move(distance),
                      lower_ok, upper_ok,          cauchy_ok};
    cert.steps.push_back(std::move(rec));
  }
  PLFunction h = cert.steps.back().a;
  return {std::move(h), std::move(cert)};
}

CertificateCheck verify_certificate(const PLFunction& f, const PLFunction& g,
                                    const InsertionCertificate& certificate) {
  CertificateCheck out;
  auto fail = [&](std::string msg) {
    out.ok = false;
    out.failures.push_back(std::move(msg));
  };
  const auto& steps = certificate.steps;
  if (steps.empty()) {
    fail("certificate has no steps");
    return out;
  }
  if (certificate.final_tol != Rational::pow2(-static_cast<int>(steps.size()))) {
    fail("final_tol " + certificate.final_tol.str() + " is not 2^-" +
         std::to_string(steps.size()));
  }
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const InsertionStep& s = steps[i];
    const std::string tag = "step " + std::to_string(i + 1) + ": ";
    if (s.n != i + 1) fail(tag + "index recorded as " + std::to_string(s.n));
    if (!s.a.same_domain(f) || !f.same_domain(g)) {
      fail(tag + "domain mismatch");
      continue;
    }
    const Rational shift = Rational::pow2(-static_cast<int>(i + 1));
    if (!s.a.is_continuous()) fail(tag + "a_n is not continuous");
    const auto lower = compare_le(f - shift, s.a);
    if (!lower) fail(tag + "f - 2^-n <= a_n fails at x = " + lower.witness->str());
    const auto upper = compare_le(s.a, g);
    if (!upper) fail(tag + "a_n <= g fails at x = " + upper.witness->str());
    const PLFunction& prev = i == 0 ? s.a : steps[i - 1].a;
    const Rational dist = sup_norm(s.a - prev);
    if (dist != s.distance) fail(tag + "recorded distance " + s.distance.str() + " != " + dist.str());
    const bool cauchy = dist <= shift * Rational(2);
    if (!cauchy) fail(tag + "‖a_n - a_{n-1}‖ = " + dist.str() + " exceeds 2^-(n-1)");
    if (s.lower_ok != lower.holds || s.upper_ok != upper.holds || s.cauchy_ok != cauchy) {
      fail(tag + "recorded check flags disagree with the recomputed checks");
    }
  }
  return out;
}

}  // namespace sandwich
