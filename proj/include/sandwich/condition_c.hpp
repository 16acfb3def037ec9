#pragma once

#include <span>
#include <vector>

#include "sandwich/finite_function.hpp"
#include "sandwich/pl_function.hpp"
#include "sandwich/semicont.hpp"

namespace sandwich {

/// One step of the cover sweep: the pair (S[s_index], T[t_index]) satisfies
/// s < t on the relatively open interval from `from` to `to`. Ends are closed
/// only at the domain endpoints.
struct CoverRecord {
  std::size_t s_index = 0;
  std::size_t t_index = 0;
  Rational from;
  Rational to;
  bool from_closed = false;
  bool to_closed = false;

  bool operator==(const CoverRecord&) const = default;
};

/// Finite subfamilies S_0 ⊆ S, T_0 ⊆ T with ⋀S_0 <= ⋁T_0, plus the cover that
/// witnesses it. Index sets are sorted and duplicate-free.
struct ExtractionResult {
  std::vector<std::size_t> s_indices;
  std::vector<std::size_t> t_indices;
  std::vector<CoverRecord> cover;
};

/// Decides ⋀S + ε <= ⋁T exactly.
///
/// Throws ParameterError when a family is empty, ε <= 0, or some member is
/// discontinuous; DomainError on mismatched domains.
Comparison verify_premise(std::span<const PLFunction> S, std::span<const PLFunction> T,
                          const Rational& epsilon);

/// Sweeps [lo, hi] left to right: at each frontier point picks the pair
/// (s, t) with s < t there whose connected component of {s < t} reaches
/// furthest right (ties: lexicographically smallest pair), then jumps to
/// that component's right end. The resulting ⋀S_0 <= ⋁T_0 is re-verified
/// before returning.
///
/// Throws PreconditionError when the premise fails.
ExtractionResult extract_finite(std::span<const PLFunction> S, std::span<const PLFunction> T,
                                const Rational& epsilon);

/// Finite-space analogue: for every point picks the lexicographically first
/// pair with s(p) < t(p). Throws PreconditionError when ⋀S + ε <= ⋁T fails.
ExtractionResult extract_finite(std::span<const FiniteFunction> S,
                                std::span<const FiniteFunction> T, const Rational& epsilon);

/// Monotone-chain specialization: a decreasing upper chain and an increasing
/// lower chain share one schedule, so a single index j with
/// S_j <= T_j is a valid extraction.
struct ChainExtraction {
  std::size_t index = 0;
  Rational lambda;
  PLFunction lower_member;  // member of the decreasing chain S
  PLFunction upper_member;  // member of the increasing chain T
};

/// Walks the schedule until S_j <= T_j. Throws InternalError when the cap is
/// reached first.
ChainExtraction extract_from_chains(const LipschitzFamily& S, const LipschitzFamily& T);

}  // namespace sandwich
