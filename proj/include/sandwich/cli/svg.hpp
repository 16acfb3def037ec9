#pragma once

#include <span>
#include <string>
#include <vector>

#include "sandwich/extension.hpp"
#include "sandwich/pl_function.hpp"

namespace sandwich::cli {

enum class StrokeStyle { continuous, usc, lsc, neither };

struct PlotSeries {
  std::string name;
  PLFunction carrier;
  std::vector<Rational> removed;  // points drawn without a value

  static PlotSeries of(std::string name, const PLFunction& f);
  static PlotSeries of(std::string name, const PuncturedFunction& f);
};

StrokeStyle stroke_style(const PlotSeries& s);

/// Fixed 800x400 canvas with 40px margins. All series share the x range of
/// the first series and a common y range.
std::string render_svg(std::span<const PlotSeries> series);

}  // namespace sandwich::cli
