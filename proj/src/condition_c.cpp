#include "sandwich/condition_c.hpp"

#include <algorithm>
#include <set>

#include "sandwich/error.hpp"

namespace sandwich {
namespace {

void require_family(std::span<const PLFunction> fam, const char* name) {
  if (fam.empty()) throw ParameterError(std::string("family ") + name + " is empty");
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if (!fam[i].is_continuous()) {
      throw ParameterError(std::string("member ") + name + "[" + std::to_string(i) +
                           "] is not continuous");
    }
  }
}

// Right end of the component of {d > 0} containing x, where d is continuous
// and d(x) > 0. `closed` is set when the component contains hi.
Rational reach_right(const PLFunction& d, const Rational& x, bool& closed) {
  auto pts = d.breakpoints();
  Rational start = x;
  Rational v_start = d(x);
  for (const Breakpoint& p : pts) {
    if (!(x < p.x)) continue;
    if (p.value.sign() <= 0) {
      closed = false;
      return start + (p.x - start) * (v_start / (v_start - p.value));
    }
    start = p.x;
    v_start = p.value;
  }
  closed = true;
  return d.hi();
}

// Left end of the same component; `closed` when it contains lo.
Rational reach_left(const PLFunction& d, const Rational& x, bool& closed) {
  auto pts = d.breakpoints();
  Rational start = x;
  Rational v_start = d(x);
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    if (!(it->x < x)) continue;
    if (it->value.sign() <= 0) {
      closed = false;
      return start - (start - it->x) * (v_start / (v_start - it->value));
    }
    start = it->x;
    v_start = it->value;
  }
  closed = true;
  return d.lo();
}

template <class F>
ExtractionResult finish(ExtractionResult r, std::span<const F> S, std::span<const F> T) {
  std::set<std::size_t> s_set, t_set;
  for (const CoverRecord& c : r.cover) {
    s_set.insert(c.s_index);
    t_set.insert(c.t_index);
  }
  r.s_indices.assign(s_set.begin(), s_set.end());
  r.t_indices.assign(t_set.begin(), t_set.end());

  F lower = S[r.s_indices.front()];
  for (std::size_t i : r.s_indices) lower = meet(lower, S[i]);
  F upper = T[r.t_indices.front()];
  for (std::size_t i : r.t_indices) upper = join(upper, T[i]);
  if (!compare_le(lower, upper)) {
    throw InternalError("extracted subfamilies fail ⋀S_0 <= ⋁T_0");
  }
  return r;
}

}  // namespace

Comparison verify_premise(std::span<const PLFunction> S, std::span<const PLFunction> T,
                          const Rational& epsilon) {
  if (epsilon.sign() <= 0) throw ParameterError("ε must be positive, got " + epsilon.str());
  require_family(S, "S");
  require_family(T, "T");
  return compare_le(meet_all(S) + epsilon, join_all(T));
}

ExtractionResult extract_finite(std::span<const PLFunction> S, std::span<const PLFunction> T,
                                const Rational& epsilon) {
  if (const auto premise = verify_premise(S, T, epsilon); !premise) {
    throw PreconditionError("premise ⋀S + ε <= ⋁T fails at x = " + premise.witness->str());
  }
  std::vector<PLFunction> gaps;  // gaps[i * |T| + j] = T[j] - S[i]
  gaps.reserve(S.size() * T.size());
  for (const PLFunction& s : S) {
    for (const PLFunction& t : T) gaps.push_back(t - s);
  }

  ExtractionResult result;
  Rational frontier = S.front().lo();
  while (true) {
    std::optional<std::size_t> best;
    Rational best_reach;
    bool best_closed = false;
    for (std::size_t k = 0; k < gaps.size(); ++k) {
      if (gaps[k](frontier).sign() <= 0) continue;
      bool closed = false;
      Rational r = reach_right(gaps[k], frontier, closed);
      const bool better = !best || (closed && !best_closed) ||
                          (closed == best_closed && best_reach < r);
      if (better) {
        best = k;
        best_reach = std::move(r);
        best_closed = closed;
      }
    }
    if (!best) {
      throw InternalError("no pair with s < t at frontier " + frontier.str());
    }
    CoverRecord rec;
    rec.s_index = *best / T.size();
    rec.t_index = *best % T.size();
    rec.from = reach_left(gaps[*best], frontier, rec.from_closed);
    rec.to = best_reach;
    rec.to_closed = best_closed;
    result.cover.push_back(rec);
    if (best_closed) break;
    frontier = std::move(best_reach);
  }
  return finish(std::move(result), S, T);
}

ExtractionResult extract_finite(std::span<const FiniteFunction> S,
                                std::span<const FiniteFunction> T, const Rational& epsilon) {
  if (epsilon.sign() <= 0) throw ParameterError("ε must be positive, got " + epsilon.str());
  if (S.empty() || T.empty()) throw ParameterError("families must be nonempty");
  FiniteFunction lower = S.front();
  for (const FiniteFunction& s : S) lower = meet(lower, s);
  FiniteFunction upper = T.front();
  for (const FiniteFunction& t : T) upper = join(upper, t);
  if (const auto premise = compare_le(lower + epsilon, upper); !premise) {
    throw PreconditionError("premise ⋀S + ε <= ⋁T fails at point " + premise.witness->str());
  }

  ExtractionResult result;
  for (std::size_t p = 0; p < lower.size(); ++p) {
    bool found = false;
    for (std::size_t i = 0; i < S.size() && !found; ++i) {
      for (std::size_t j = 0; j < T.size() && !found; ++j) {
        if (S[i][p] < T[j][p]) {
          const Rational x(static_cast<long long>(p));
          result.cover.push_back({i, j, x, x, true, true});
          found = true;
        }
      }
    }
    if (!found) throw InternalError("no pair with s < t at point " + std::to_string(p));
  }
  return finish(std::move(result), S, T);
}

ChainExtraction extract_from_chains(const LipschitzFamily& S, const LipschitzFamily& T) {
  if (S.direction() != EnvelopeDirection::upper || T.direction() != EnvelopeDirection::lower) {
    throw ParameterError("expected a decreasing upper chain and an increasing lower chain");
  }
  const std::size_t n = std::min(S.size(), T.size());
  for (std::size_t j = 0; j < n; ++j) {
    PLFunction s = S.member(j);
    PLFunction t = T.member(j);
    if (compare_le(s, t)) return {j, S.lambda(j), std::move(s), std::move(t)};
  }
  throw InternalError("Lipschitz schedule cap " + S.schedule().cap.str() +
                      " exceeded before the chains separated");
}

}  // namespace sandwich
