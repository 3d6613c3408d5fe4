#pragma once

#include <string>
#include <vector>

#include "jnrange/linalg.hpp"

namespace jnrange {

/// Minimal SVG scatter/outline figure in data coordinates with equal aspect ratio.
class SvgFigure {
 public:
  explicit SvgFigure(std::string title, double width_px = 480.0, double height_px = 480.0);

  void add_closed_curve(std::vector<Complex> points, std::string color, std::string label);
  /// Star-shaped marker, used for barycenters.
  void add_star(Complex at, std::string color, std::string label);

  std::string render() const;

 private:
  struct Curve {
    std::vector<Complex> points;
    std::string color;
    std::string label;
  };
  struct Marker {
    Complex at;
    std::string color;
    std::string label;
  };

  std::string title_;
  double width_;
  double height_;
  std::vector<Curve> curves_;
  std::vector<Marker> markers_;
};

}  // namespace jnrange
