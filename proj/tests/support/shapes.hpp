#pragma once

// Small named functions on [0,1] that recur across the tests.

#include <string_view>
#include <vector>

#include "sandwich/pl_function.hpp"

namespace testsupport {

inline sandwich::Rational R(std::string_view s) { return sandwich::Rational::parse(s); }

/// Breakpoint record shorthand.
inline sandwich::Breakpoint bp(std::string_view x, std::string_view left, std::string_view value,
                               std::string_view right) {
  return {R(x), R(left), R(value), R(right)};
}

inline sandwich::PLFunction line(std::string_view y0, std::string_view y1) {
  return sandwich::PLFunction::affine(R("0"), R("1"), R(y0), R(y1));
}

inline sandwich::PLFunction constant(std::string_view c) {
  return sandwich::PLFunction::constant(R("0"), R("1"), R(c));
}

/// Indicator of the single point {a}.
inline sandwich::PLFunction point_bump(std::string_view a) {
  return sandwich::PLFunction::from_breakpoints({bp("0", "0", "0", "0"), bp(a, "0", "1", "0"), bp("1", "0", "0", "0")});
}

/// Step from 0 to 1 at a with value v at a: v = 1 gives χ_[a,1], v = 0 gives χ_(a,1].
inline sandwich::PLFunction step(std::string_view a, std::string_view v) {
  return sandwich::PLFunction::from_breakpoints({bp("0", "0", "0", "0"), bp(a, "0", v, "1"), bp("1", "1", "1", "1")});
}

/// 1/2 + χ_(1/4,3/4), which is lsc.
inline sandwich::PLFunction raised_window() {
  return sandwich::PLFunction::from_breakpoints({bp("0", "1/2", "1/2", "1/2"), bp("1/4", "1/2", "1/2", "3/2"),
                                                 bp("3/4", "3/2", "1/2", "1/2"), bp("1", "1/2", "1/2", "1/2")});
}

/// max(0, 1 - s|x - 1/2|) for s >= 2.
inline sandwich::PLFunction tent(std::string_view s) {
  const sandwich::Rational w = sandwich::Rational(1) / R(s);
  const sandwich::Rational h = R("1/2");
  std::vector<std::pair<sandwich::Rational, sandwich::Rational>> nodes = {
      {R("0"), R("0")}, {h - w, R("0")}, {h, R("1")}, {h + w, R("0")}, {R("1"), R("0")}};
  if (w == h) nodes = {{R("0"), R("0")}, {h, R("1")}, {R("1"), R("0")}};
  return sandwich::PLFunction::interpolant(nodes);
}

}  // namespace testsupport
