#include "sandwich/seq_function.hpp"

#include <algorithm>

#include "sandwich/error.hpp"

namespace sandwich {
namespace {

void shorten_period(std::vector<Rational>& period) {
  const std::size_t n = period.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = period[i] == period[i - p];
    if (periodic) {
      period.resize(p);
      return;
    }
  }
}

}  // namespace

SeqFunction SeqFunction::make(std::vector<Rational> prefix, std::vector<Rational> period,
                              std::optional<Rational> infinity_value) {
  if (period.empty()) throw ParameterError("sequence period must be nonempty");
  shorten_period(period);
  // A trailing prefix entry equal to the periodic value it would have had is
  // absorbed by rotating the period one step to the right.
  while (!prefix.empty() && prefix.back() == period.back()) {
    prefix.pop_back();
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
  }
  SeqFunction s;
  s.prefix_ = std::move(prefix);
  s.period_ = std::move(period);
  s.infinity_ = std::move(infinity_value);
  return s;
}

SeqFunction SeqFunction::constant(const Rational& c, std::optional<Rational> infinity_value) {
  return make({}, {c}, std::move(infinity_value));
}

Rational SeqFunction::at(std::uint64_t n) const {
  if (n < prefix_.size()) return prefix_[n];
  return period_[(n - prefix_.size()) % period_.size()];
}

Rational SeqFunction::limsup() const { return *std::max_element(period_.begin(), period_.end()); }
Rational SeqFunction::liminf() const { return *std::min_element(period_.begin(), period_.end()); }

SeqFunction SeqFunction::with_infinity(std::optional<Rational> v) const {
  SeqFunction s = *this;
  s.infinity_ = std::move(v);
  return s;
}

Rational sup_norm(const SeqFunction& f) {
  Rational best;
  for (const Rational& v : f.prefix()) best = max(best, abs(v));
  for (const Rational& v : f.period()) best = max(best, abs(v));
  if (f.infinity_value()) best = max(best, abs(*f.infinity_value()));
  return best;
}

}  // namespace sandwich
