#include "sandwich/cli/svg.hpp"

#include <algorithm>
#include <cstdio>

#include "sandwich/semicont.hpp"

namespace sandwich::cli {
namespace {

constexpr double kWidth = 800;
constexpr double kHeight = 400;
constexpr double kMargin = 40;
constexpr double kDotRadius = 3.5;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

const char* dash_array(StrokeStyle s) {
  switch (s) {
    case StrokeStyle::continuous: return nullptr;
    case StrokeStyle::usc: return "8 4";
    case StrokeStyle::lsc: return "2 4";
    case StrokeStyle::neither: return "8 4 2 4";
  }
  return nullptr;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Frame {
  Rational x_lo, x_hi, y_lo, y_hi;
  double px(const Rational& x) const {
    return kMargin + ((x - x_lo) / (x_hi - x_lo)).to_double() * (kWidth - 2 * kMargin);
  }
  double py(const Rational& y) const {
    return kHeight - kMargin - ((y - y_lo) / (y_hi - y_lo)).to_double() * (kHeight - 2 * kMargin);
  }
};

Frame frame_for(std::span<const PlotSeries> series) {
  Frame fr{series.front().carrier.lo(), series.front().carrier.hi(), 0, 0};
  bool first = true;
  for (const PlotSeries& s : series) {
    for (const Breakpoint& p : s.carrier.breakpoints()) {
      for (const Rational* v : {&p.left, &p.value, &p.right}) {
        if (first || *v < fr.y_lo) fr.y_lo = *v;
        if (first || fr.y_hi < *v) fr.y_hi = *v;
        first = false;
      }
    }
  }
  if (fr.y_lo == fr.y_hi) {
    fr.y_lo = fr.y_lo - Rational(1);
    fr.y_hi = fr.y_hi + Rational(1);
  }
  return fr;
}

std::string circle(double cx, double cy, const char* color, bool filled) {
  std::string out = "<circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" + num(kDotRadius) + "\"";
  if (filled) out += std::string(" fill=\"") + color + "\"/>\n";
  else out += std::string(" fill=\"white\" stroke=\"") + color + "\" stroke-width=\"1.5\"/>\n";
  return out;
}

}  // namespace

PlotSeries PlotSeries::of(std::string name, const PLFunction& f) { return {std::move(name), f, {}}; }

PlotSeries PlotSeries::of(std::string name, const PuncturedFunction& f) {
  return {std::move(name), f.carrier(), {f.removed().begin(), f.removed().end()}};
}

StrokeStyle stroke_style(const PlotSeries& s) {
  if (s.removed.empty()) {
    if (s.carrier.is_continuous()) return StrokeStyle::continuous;
    if (is_usc(s.carrier)) return StrokeStyle::usc;
    if (is_lsc(s.carrier)) return StrokeStyle::lsc;
    return StrokeStyle::neither;
  }
  const PuncturedFunction f = PuncturedFunction::make(s.carrier, s.removed);
  const bool usc = static_cast<bool>(is_usc(f));
  const bool lsc = static_cast<bool>(is_lsc(f));
  if (usc && lsc) return StrokeStyle::continuous;
  if (usc) return StrokeStyle::usc;
  if (lsc) return StrokeStyle::lsc;
  return StrokeStyle::neither;
}

std::string render_svg(std::span<const PlotSeries> series) {
  if (series.empty()) throw ParameterError("nothing to plot");
  const Frame fr = frame_for(series);
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"400\" viewBox=\"0 0 800 400\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"400\" fill=\"white\"/>\n";
  out += "<rect x=\"40\" y=\"40\" width=\"720\" height=\"320\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  out += "<text x=\"40\" y=\"390\" font-size=\"11\" font-family=\"monospace\">" + fr.x_lo.str() + "</text>\n";
  out += "<text x=\"760\" y=\"390\" font-size=\"11\" font-family=\"monospace\" text-anchor=\"end\">" +
         fr.x_hi.str() + "</text>\n";
  out += "<text x=\"36\" y=\"44\" font-size=\"11\" font-family=\"monospace\" text-anchor=\"end\">" +
         fr.y_hi.str() + "</text>\n";
  out += "<text x=\"36\" y=\"360\" font-size=\"11\" font-family=\"monospace\" text-anchor=\"end\">" +
         fr.y_lo.str() + "</text>\n";

  for (std::size_t k = 0; k < series.size(); ++k) {
    const PlotSeries& s = series[k];
    const char* color = kPalette[k % std::size(kPalette)];
    const char* dash = dash_array(stroke_style(s));
    out += "<g class=\"series\" data-name=\"" + s.name + "\">\n";
    auto pts = s.carrier.breakpoints();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      out += "<line x1=\"" + num(fr.px(pts[i].x)) + "\" y1=\"" + num(fr.py(pts[i].right)) + "\" x2=\"" +
             num(fr.px(pts[i + 1].x)) + "\" y2=\"" + num(fr.py(pts[i + 1].left)) + "\" stroke=\"" + color +
             "\" stroke-width=\"2\"";
      if (dash) out += std::string(" stroke-dasharray=\"") + dash + "\"";
      out += "/>\n";
    }
    std::vector<Rational> marks;
    for (const Breakpoint& p : pts) marks.push_back(p.x);
    marks.insert(marks.end(), s.removed.begin(), s.removed.end());
    std::sort(marks.begin(), marks.end());
    marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
    for (const Rational& x : marks) {
      const bool absent = std::binary_search(s.removed.begin(), s.removed.end(), x);
      const Rational v = s.carrier(x);
      const Rational l = x == s.carrier.lo() ? v : s.carrier.left_limit(x);
      const Rational r = x == s.carrier.hi() ? v : s.carrier.right_limit(x);
      if (!absent && l == v && r == v) continue;
      const double cx = fr.px(x);
      // Limits not attained by the function get open circles.
      if (absent || l != v) out += circle(cx, fr.py(l), color, false);
      if (r != l && (absent || r != v)) out += circle(cx, fr.py(r), color, false);
      if (!absent) out += circle(cx, fr.py(v), color, true);
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace sandwich::cli
