#include "starfan/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace starfan {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string render_translation_heatmap(const Fan& fan, const LabeledDataset& data,
                                       const ParamVector& a, const TranslationalGrid& grid) {
  if (fan.dim() != 2) throw Error(Errc::DimensionError, "heatmaps are 2-D only");
  const GridSpec& g = grid.spec;
  const double px = 720.0;                         // drawing width in pixels
  const double world_w = std::max(g.nx - 1, 1) * g.step;
  const double world_h = std::max(g.ny - 1, 1) * g.step;
  const double scale = px / world_w;
  const double hpx = world_h * scale;
  auto sx = [&](double x) { return (x - g.x0) * scale; };
  auto sy = [&](double y) { return hpx - (y - g.y0) * scale; };  // y up

  int max_err = 1;
  for (const auto& row : grid.err)
    for (int e : row) max_err = std::max(max_err, e);

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(px) << "\" height=\""
      << fmt(hpx) << "\" viewBox=\"0 0 " << fmt(px) << " " << fmt(hpx) << "\">\n";
  const double cell = g.step * scale;
  for (int iy = 0; iy < g.ny; ++iy)
    for (int ix = 0; ix < g.nx; ++ix) {
      const int e = grid.err[iy][ix];
      const double u = double(e) / double(max_err);
      const int rch = 255;
      const int gch = int(std::lround(255.0 * (1.0 - u)));
      const int bch = gch;
      svg << "<rect x=\"" << fmt(sx(g.x0 + ix * g.step) - cell / 2) << "\" y=\""
          << fmt(sy(g.y0 + iy * g.step) - cell / 2) << "\" width=\"" << fmt(cell)
          << "\" height=\"" << fmt(cell) << "\" fill=\"rgb(" << rch << "," << gch << "," << bch
          << ")\"/>\n";
    }

  // outline of -Star(a) + x_i for each point: the translations keeping x_i inside
  const auto vertices = star_vertices(fan, a);
  for (int i = 0; i < data.size(); ++i) {
    svg << "<polygon points=\"";
    for (const auto& v : vertices)
      svg << fmt(sx(data.points[i][0] - v[0])) << "," << fmt(sy(data.points[i][1] - v[1])) << " ";
    svg << "\" fill=\"none\" stroke=\"" << (data.labels[i] == 0 ? "#1f77b4" : "#2ca02c")
        << "\" stroke-width=\"1.5\"/>\n";
    svg << "<circle cx=\"" << fmt(sx(data.points[i][0])) << "\" cy=\"" << fmt(sy(data.points[i][1]))
        << "\" r=\"3\" fill=\"black\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string render_series_chart(const std::vector<double>& xs, const std::vector<double>& ys,
                                const std::string& x_label, const std::string& y_label) {
  const double w = 720.0, h = 480.0, pad = 50.0;
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  bool first = true;
  for (size_t i = 0; i < xs.size() && i < ys.size(); ++i) {
    if (!std::isfinite(xs[i]) || !std::isfinite(ys[i])) continue;
    if (first) {
      xmin = xmax = xs[i];
      ymin = ymax = ys[i];
      first = false;
    } else {
      xmin = std::min(xmin, xs[i]);
      xmax = std::max(xmax, xs[i]);
      ymin = std::min(ymin, ys[i]);
      ymax = std::max(ymax, ys[i]);
    }
  }
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) ymax = ymin + 1;
  auto sx = [&](double x) { return pad + (x - xmin) / (xmax - xmin) * (w - 2 * pad); };
  auto sy = [&](double y) { return h - pad - (y - ymin) / (ymax - ymin) * (h - 2 * pad); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w) << "\" height=\""
      << fmt(h) << "\" viewBox=\"0 0 " << fmt(w) << " " << fmt(h) << "\">\n";
  svg << "<rect width=\"" << fmt(w) << "\" height=\"" << fmt(h) << "\" fill=\"white\"/>\n";
  svg << "<line x1=\"" << fmt(pad) << "\" y1=\"" << fmt(h - pad) << "\" x2=\"" << fmt(w - pad)
      << "\" y2=\"" << fmt(h - pad) << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << fmt(pad) << "\" y1=\"" << fmt(pad) << "\" x2=\"" << fmt(pad)
      << "\" y2=\"" << fmt(h - pad) << "\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << fmt(w / 2) << "\" y=\"" << fmt(h - 12) << "\" text-anchor=\"middle\">"
      << x_label << "</text>\n";
  svg << "<text x=\"14\" y=\"" << fmt(h / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
      << fmt(h / 2) << ")\">" << y_label << "</text>\n";

  bool open = false;
  for (size_t i = 0; i < xs.size() && i < ys.size(); ++i) {
    const bool ok = std::isfinite(xs[i]) && std::isfinite(ys[i]);
    if (ok && !open) {
      svg << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
      open = true;
    }
    if (ok) svg << fmt(sx(xs[i])) << "," << fmt(sy(ys[i])) << " ";
    if (!ok && open) {
      svg << "\"/>\n";
      open = false;
    }
  }
  if (open) svg << "\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace starfan
