#include "jnrange/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "jnrange/io.hpp"

namespace jnrange {

namespace {

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

SvgFigure::SvgFigure(std::string title, double width_px, double height_px)
    : title_(std::move(title)), width_(width_px), height_(height_px) {}

void SvgFigure::add_closed_curve(std::vector<Complex> points, std::string color, std::string label) {
  curves_.push_back({std::move(points), std::move(color), std::move(label)});
}

void SvgFigure::add_star(Complex at, std::string color, std::string label) {
  markers_.push_back({at, std::move(color), std::move(label)});
}

// Plotted coordinates are the raw data values (y flipped by the group transform), printed
// with the same 17-digit formatting as the CSV files.
std::string SvgFigure::render() const {
  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -xmin;
  double ymin = xmin;
  double ymax = -xmin;
  auto extend = [&](Complex z) {
    xmin = std::min(xmin, z.real());
    xmax = std::max(xmax, z.real());
    ymin = std::min(ymin, z.imag());
    ymax = std::max(ymax, z.imag());
  };
  for (const auto& c : curves_) std::for_each(c.points.begin(), c.points.end(), extend);
  for (const auto& m : markers_) extend(m.at);
  if (!std::isfinite(xmin)) xmin = xmax = ymin = ymax = 0.0;

  const double span = std::max({xmax - xmin, ymax - ymin, 1e-6});
  const double margin = 0.15 * span;
  const double legend = 0.08 * span * static_cast<double>(curves_.size() + markers_.size());
  const double vx = xmin - margin;
  const double vy = -ymax - margin;
  const double vw = (xmax - xmin) + 2 * margin;
  const double vh = (ymax - ymin) + 2 * margin + legend;
  const double font = 0.05 * span;
  const double star = 0.03 * span;

  using io::format_double;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_ << "\" height=\""
      << height_ << "\" viewBox=\"" << format_double(vx) << ' ' << format_double(vy) << ' '
      << format_double(vw) << ' ' << format_double(vh) << "\">\n";
  svg << "<title>" << escape(title_) << "</title>\n";
  svg << "<defs><path id=\"star\" d=\"";
  for (int k = 0; k < 10; ++k) {
    const double r = (k % 2 == 0 ? 1.0 : 0.4) * star;
    const double a = std::numbers::pi / 2 + k * std::numbers::pi / 5;
    svg << (k == 0 ? 'M' : 'L') << format_double(r * std::cos(a)) << ' '
        << format_double(-r * std::sin(a)) << ' ';
  }
  svg << "Z\"/></defs>\n";

  svg << "<g transform=\"scale(1,-1)\" fill=\"none\">\n";
  svg << "<line x1=\"" << format_double(vx) << "\" y1=\"0\" x2=\"" << format_double(vx + vw)
      << "\" y2=\"0\" stroke=\"#bbbbbb\" vector-effect=\"non-scaling-stroke\"/>\n";
  svg << "<line x1=\"0\" y1=\"" << format_double(-(vy + vh)) << "\" x2=\"0\" y2=\""
      << format_double(-vy) << "\" stroke=\"#bbbbbb\" vector-effect=\"non-scaling-stroke\"/>\n";
  for (const auto& c : curves_) {
    svg << "<polygon stroke=\"" << c.color
        << "\" stroke-width=\"1.5\" vector-effect=\"non-scaling-stroke\" points=\"";
    for (std::size_t i = 0; i < c.points.size(); ++i) {
      if (i > 0) svg << ' ';
      svg << format_double(c.points[i].real()) << ',' << format_double(c.points[i].imag());
    }
    svg << "\"/>\n";
  }
  for (const auto& m : markers_) {
    svg << "<use href=\"#star\" fill=\"" << m.color << "\" transform=\"translate("
        << format_double(m.at.real()) << ',' << format_double(m.at.imag()) << ")\"/>\n";
  }
  svg << "</g>\n";

  double y = -ymin + margin * 0.5 + font;
  for (const auto& c : curves_) {
    svg << "<text x=\"" << format_double(vx + margin * 0.2) << "\" y=\"" << format_double(y)
        << "\" font-size=\"" << format_double(font) << "\" fill=\"" << c.color << "\">"
        << escape(c.label) << "</text>\n";
    y += 1.6 * font;
  }
  for (const auto& m : markers_) {
    svg << "<text x=\"" << format_double(vx + margin * 0.2) << "\" y=\"" << format_double(y)
        << "\" font-size=\"" << format_double(font) << "\" fill=\"" << m.color << "\">* "
        << escape(m.label) << "</text>\n";
    y += 1.6 * font;
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace jnrange
