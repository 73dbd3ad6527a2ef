#ifndef STARFAN_SVG_HPP
#define STARFAN_SVG_HPP

#include <string>

#include "starfan/arrangement.hpp"

namespace starfan {

/// Deterministic SVG heatmap of a translational error grid: one rect per
/// node colored by err (white = 0, dark red = max), plus the translated
/// star outlines -Star(a) + x_i for each data point. d = 2 only.
std::string render_translation_heatmap(const Fan& fan, const LabeledDataset& data,
                                       const ParamVector& a, const TranslationalGrid& grid);

/// Deterministic SVG line chart of a scalar series (used for lambda sweeps
/// and segment profiles). Values may be negative; NaNs break the polyline.
std::string render_series_chart(const std::vector<double>& xs, const std::vector<double>& ys,
                                const std::string& x_label, const std::string& y_label);

}  // namespace starfan

#endif
