#pragma once

#include <string>
#include <vector>

#include "sandwich/pl_function.hpp"
#include "sandwich/semicont.hpp"

namespace sandwich {

/// A continuous a with f <= a <= g, found at schedule value `lambda`.
struct GapInsertion {
  PLFunction a;
  Rational lambda;
  std::size_t schedule_index = 0;
};

/// Inserts a continuous function between usc f and lsc g separated by a gap.
///
/// Requires is_usc(f), is_lsc(g), ε > 0 and f + ε <= g; otherwise throws
/// PreconditionError (SemicontinuityViolation for the first two). The upper
/// envelopes of f and lower envelopes of g are walked along one doubling
/// schedule until f^λ <= g_λ, and a = f^λ is returned.
GapInsertion insert_gap(const PLFunction& f, const PLFunction& g, const Rational& epsilon,
                        const ScheduleOptions& options = {});

struct InsertionStep {
  unsigned n = 0;
  PLFunction a;
  Rational lambda;       // schedule value used by the gap insertion
  Rational distance;     // ‖a_n - a_{n-1}‖ (a_0 = a_1)
  bool lower_ok = false;   // f - 2^{-n} <= a_n
  bool upper_ok = false;   // a_n <= g
  bool cauchy_ok = false;  // ‖a_n - a_{n-1}‖ <= 2^{-(n-1)}
};

struct InsertionCertificate {
  std::vector<InsertionStep> steps;
  Rational final_tol;
};

struct InsertionResult {
  PLFunction h;
  InsertionCertificate certificate;
};

/// Dieudonné iteration for usc f <= lsc g on a compact interval.
///
/// a_1 = insert_gap(f - 1/2, g, 1/2) and
/// a_{m+1} = insert_gap((f - 2^{-(m+1)}) ∨ (a_m - 2^{-m}), g ∧ (a_m + 2^{-m}), 2^{-(m+1)}).
/// Returns h = a_N for tol = 2^{-N} together with the per-step certificate.
/// Throws ParameterError unless tol = 2^{-N} with N >= 1, and PreconditionError
/// when f <= g fails or f, g are not usc/lsc.
InsertionResult kt_compact(const PLFunction& f, const PLFunction& g, const Rational& tol,
                           const ScheduleOptions& options = {});

struct CertificateCheck {
  bool ok = true;
  std::vector<std::string> failures;

  explicit operator bool() const { return ok; }
};

/// Re-derives every claim of a certificate from the stored functions using
/// only exact comparisons and sup norms; stored flags are not trusted.
CertificateCheck verify_certificate(const PLFunction& f, const PLFunction& g,
                                    const InsertionCertificate& certificate);

}  // namespace sandwich
