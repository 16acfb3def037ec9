#include "sandwich/pl_function.hpp"

#include <algorithm>
#include <iterator>

#include "sandwich/error.hpp"

namespace sandwich {
namespace {

Breakpoint continuous_point(const Rational& x, const Rational& y) { return {x, y, y, y}; }

Rational lerp(const Rational& x0, const Rational& y0, const Rational& x1, const Rational& y1,
              const Rational& x) {
  return y0 + (y1 - y0) * ((x - x0) / (x1 - x0));
}

void canonicalize(std::vector<Breakpoint>& pts) {
  pts.front().left = pts.front().value;
  pts.back().right = pts.back().value;
  std::vector<Breakpoint> out;
  out.reserve(pts.size());
  out.push_back(std::move(pts.front()));
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    Breakpoint& p = pts[i];
    if (p.left == p.value && p.value == p.right) {
      const Breakpoint& prev = out.back();
      const Breakpoint& next = pts[i + 1];
      // (prev.x, prev.right), (p.x, p.value), (next.x, next.left) collinear.
      if ((p.value - prev.right) * (next.x - p.x) == (next.left - p.value) * (p.x - prev.x)) {
        continue;
      }
    }
    out.push_back(std::move(p));
  }
  out.push_back(std::move(pts.back()));
  pts = std::move(out);
}

std::vector<Rational> merged_grid(const PLFunction& f, const PLFunction& g) {
  std::vector<Rational> grid;
  grid.reserve(f.breakpoints().size() + g.breakpoints().size());
  auto fx = f.breakpoints();
  auto gx = g.breakpoints();
  std::size_t i = 0, j = 0;
  while (i < fx.size() || j < gx.size()) {
    if (j == gx.size() || (i < fx.size() && fx[i].x < gx[j].x)) {
      grid.push_back(fx[i++].x);
    } else if (i == fx.size() || gx[j].x < fx[i].x) {
      grid.push_back(gx[j++].x);
    } else {
      grid.push_back(fx[i].x);
      ++i;
      ++j;
    }
  }
  return grid;
}

// Breakpoint data of f at every grid abscissa; grid must contain f's breakpoints.
std::vector<Breakpoint> resample(const PLFunction& f, const std::vector<Rational>& grid) {
  auto pts = f.breakpoints();
  std::vector<Breakpoint> out;
  out.reserve(grid.size());
  std::size_t j = 0;
  for (const Rational& x : grid) {
    if (j < pts.size() && pts[j].x == x) {
      out.push_back(pts[j++]);
    } else {
      out.push_back(continuous_point(x, lerp(pts[j - 1].x, pts[j - 1].right, pts[j].x,
                                             pts[j].left, x)));
    }
  }
  return out;
}

void require_same_domain(const PLFunction& f, const PLFunction& g) {
  if (!f.same_domain(g)) {
    throw DomainError("functions on different domains [" + f.lo().str() + ", " + f.hi().str() +
                      "] and [" + g.lo().str() + ", " + g.hi().str() + "]");
  }
}

template <class Pick>
PLFunction lattice_combine(const PLFunction& f, const PLFunction& g, Pick pick) {
  require_same_domain(f, g);
  const auto grid = merged_grid(f, g);
  const auto a = resample(f, grid);
  const auto b = resample(g, grid);
  std::vector<Breakpoint> out;
  out.reserve(2 * grid.size());
  auto emit = [&](const Breakpoint& p, const Breakpoint& q) {
    out.push_back({p.x, pick(p.left, q.left), pick(p.value, q.value), pick(p.right, q.right)});
  };
  for (std::size_t i = 0; i < grid.size(); ++i) {
    emit(a[i], b[i]);
    if (i + 1 == grid.size()) break;
    const Rational d0 = a[i].right - b[i].right;
    const Rational d1 = a[i + 1].left - b[i + 1].left;
    if (d0.sign() * d1.sign() < 0) {
      // The two affine pieces cross strictly inside (x_i, x_{i+1}).
      const Rational t = d0 / (d0 - d1);
      const Rational x = grid[i] + t * (grid[i + 1] - grid[i]);
      const Rational y = a[i].right + t * (a[i + 1].left - a[i].right);
      out.push_back(continuous_point(x, y));
    }
  }
  return PLFunction::from_breakpoints(std::move(out));
}

template <class Reduce>
PLFunction tree_reduce(std::span<const PLFunction> fs, Reduce reduce) {
  if (fs.empty()) throw ParameterError("empty family");
  std::vector<PLFunction> level(fs.begin(), fs.end());
  while (level.size() > 1) {
    std::vector<PLFunction> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
      next.push_back(reduce(level[i], level[i + 1]));
    }
    if (level.size() % 2 == 1) next.push_back(std::move(level.back()));
    level = std::move(next);
  }
  return std::move(level.front());
}

// A point strictly inside (a, b) where the affine function from (a, ya) to
// (b, yb) is negative, given that its limit at `b` (at_right) or at `a` is negative.
Rational negative_point_in_piece(const Rational& a, const Rational& ya, const Rational& b,
                                 const Rational& yb, bool at_right) {
  if (ya.sign() < 0 && yb.sign() < 0) return midpoint(a, b);
  const Rational zero = a + (b - a) * (ya / (ya - yb));
  return at_right ? midpoint(zero, b) : midpoint(a, zero);
}

}  // namespace

PLFunction PLFunction::from_breakpoints(std::vector<Breakpoint> points) {
  if (points.size() < 2) throw DomainError("a PL function needs at least two breakpoints");
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i - 1].x < points[i].x)) {
      throw DomainError("breakpoints not strictly increasing at x = " + points[i].x.str());
    }
  }
  canonicalize(points);
  return PLFunction(std::move(points));
}

PLFunction PLFunction::constant(const Rational& lo, const Rational& hi, const Rational& c) {
  return from_breakpoints({continuous_point(lo, c), continuous_point(hi, c)});
}

PLFunction PLFunction::affine(const Rational& lo, const Rational& hi, const Rational& y_lo,
                              const Rational& y_hi) {
  return from_breakpoints({continuous_point(lo, y_lo), continuous_point(hi, y_hi)});
}

PLFunction PLFunction::interpolant(std::span<const std::pair<Rational, Rational>> nodes) {
  std::vector<Breakpoint> pts;
  pts.reserve(nodes.size());
  for (const auto& [x, y] : nodes) pts.push_back(continuous_point(x, y));
  return from_breakpoints(std::move(pts));
}

std::size_t PLFunction::piece_containing(const Rational& x) const {
  // First breakpoint strictly greater than x, minus one.
  auto it = std::upper_bound(points_.begin(), points_.end(), x,
                             [](const Rational& v, const Breakpoint& p) { return v < p.x; });
  return static_cast<std::size_t>(std::distance(points_.begin(), it)) - 1;
}

Rational PLFunction::eval(const Rational& x) const {
  if (!contains(x)) {
    throw DomainError("x = " + x.str() + " outside [" + lo().str() + ", " + hi().str() + "]");
  }
  const std::size_t i = piece_containing(x);
  const Breakpoint& p = points_[i];
  if (p.x == x) return p.value;
  const Breakpoint& q = points_[i + 1];
  return lerp(p.x, p.right, q.x, q.left, x);
}

Rational PLFunction::left_limit(const Rational& x) const {
  if (!contains(x)) throw DomainError("x = " + x.str() + " outside domain");
  const std::size_t i = piece_containing(x);
  const Breakpoint& p = points_[i];
  if (p.x == x) return p.left;
  const Breakpoint& q = points_[i + 1];
  return lerp(p.x, p.right, q.x, q.left, x);
}

Rational PLFunction::right_limit(const Rational& x) const {
  if (!contains(x)) throw DomainError("x = " + x.str() + " outside domain");
  const std::size_t i = piece_containing(x);
  const Breakpoint& p = points_[i];
  if (p.x == x) return p.right;
  const Breakpoint& q = points_[i + 1];
  return lerp(p.x, p.right, q.x, q.left, x);
}

Rational PLFunction::slope(std::size_t piece) const {
  const Breakpoint& p = points_.at(piece);
  const Breakpoint& q = points_.at(piece + 1);
  return (q.left - p.right) / (q.x - p.x);
}

Rational PLFunction::max_abs_slope() const {
  Rational best;
  for (std::size_t i = 0; i < piece_count(); ++i) best = max(best, abs(slope(i)));
  return best;
}

bool PLFunction::is_continuous() const {
  return std::all_of(points_.begin(), points_.end(), [](const Breakpoint& p) {
    return p.left == p.value && p.value == p.right;
  });
}

PLFunction PLFunction::with_value(const Rational& x, const Rational& v) const {
  if (!contains(x)) throw DomainError("x = " + x.str() + " outside domain");
  std::vector<Breakpoint> pts;
  pts.reserve(points_.size() + 1);
  bool placed = false;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const Breakpoint& p = points_[i];
    if (!placed && x < p.x) {
      const Breakpoint& prev = points_[i - 1];
      const Rational y = lerp(prev.x, prev.right, p.x, p.left, x);
      pts.push_back({x, y, v, y});
      placed = true;
    }
    pts.push_back(p);
    if (p.x == x) {
      pts.back().value = v;
      placed = true;
    }
  }
  return from_breakpoints(std::move(pts));
}

Comparison compare_le(const PLFunction& f, const PLFunction& g) {
  const PLFunction d = g - f;
  auto pts = d.breakpoints();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Breakpoint& p = pts[i];
    if (i > 0 && p.left.sign() < 0) {
      const Breakpoint& prev = pts[i - 1];
      return {false, negative_point_in_piece(prev.x, prev.right, p.x, p.left, true)};
    }
    if (p.value.sign() < 0) return {false, p.x};
    if (i + 1 < pts.size() && p.right.sign() < 0) {
      const Breakpoint& next = pts[i + 1];
      return {false, negative_point_in_piece(p.x, p.right, next.x, next.left, false)};
    }
  }
  return {};
}

PLFunction meet(const PLFunction& f, const PLFunction& g) {
  return lattice_combine(f, g, [](const Rational& a, const Rational& b) { return min(a, b); });
}

PLFunction join(const PLFunction& f, const PLFunction& g) {
  return lattice_combine(f, g, [](const Rational& a, const Rational& b) { return max(a, b); });
}

PLFunction meet_all(std::span<const PLFunction> fs) {
  return tree_reduce(fs, [](const PLFunction& a, const PLFunction& b) { return meet(a, b); });
}

PLFunction join_all(std::span<const PLFunction> fs) {
  return tree_reduce(fs, [](const PLFunction& a, const PLFunction& b) { return join(a, b); });
}

PLFunction affine_combination(const Rational& alpha, const PLFunction& f, const Rational& beta,
                              const PLFunction& g) {
  require_same_domain(f, g);
  const auto grid = merged_grid(f, g);
  const auto a = resample(f, grid);
  const auto b = resample(g, grid);
  std::vector<Breakpoint> out;
  out.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out.push_back({grid[i], alpha * a[i].left + beta * b[i].left,
                   alpha * a[i].value + beta * b[i].value, alpha * a[i].right + beta * b[i].right});
  }
  return PLFunction::from_breakpoints(std::move(out));
}

PLFunction operator+(const PLFunction& f, const PLFunction& g) {
  return affine_combination(1, f, 1, g);
}
PLFunction operator-(const PLFunction& f, const PLFunction& g) {
  return affine_combination(1, f, -1, g);
}

PLFunction operator-(const PLFunction& f) { return Rational(-1) * f; }

PLFunction operator*(const Rational& c, const PLFunction& f) {
  std::vector<Breakpoint> out(f.breakpoints().begin(), f.breakpoints().end());
  for (Breakpoint& p : out) {
    p.left *= c;
    p.value *= c;
    p.right *= c;
  }
  return PLFunction::from_breakpoints(std::move(out));
}

PLFunction operator+(const PLFunction& f, const Rational& c) {
  std::vector<Breakpoint> out(f.breakpoints().begin(), f.breakpoints().end());
  for (Breakpoint& p : out) {
    p.left += c;
    p.value += c;
    p.right += c;
  }
  return PLFunction::from_breakpoints(std::move(out));
}

PLFunction operator-(const PLFunction& f, const Rational& c) { return f + (-c); }

Rational sup_norm(const PLFunction& f) {
  Rational best;
  for (const Breakpoint& p : f.breakpoints()) {
    best = max(best, max(abs(p.value), max(abs(p.left), abs(p.right))));
  }
  return best;
}

}  // namespace sandwich
