#include "jnrange/demos.hpp"

#include "jnrange/errors.hpp"
#include "jnrange/svg.hpp"

namespace jnrange {

DemoName demo_from_string(const std::string& name) {
  if (name == "fig1a") return DemoName::fig1a;
  if (name == "fig1b") return DemoName::fig1b;
  if (name == "fig2") return DemoName::fig2;
  throw ParseError("unknown demo '" + name + "' (expected fig1a, fig1b or fig2)");
}

std::string to_string(DemoName name) {
  switch (name) {
    case DemoName::fig1a: return "fig1a";
    case DemoName::fig1b: return "fig1b";
    case DemoName::fig2: return "fig2";
  }
  return {};
}

KrausChannel demo_channel(DemoName name) {
  switch (name) {
    case DemoName::fig1a: return decaying_channel(0.5);
    case DemoName::fig1b: return phase_flip_channel(0.25);
    case DemoName::fig2: return double_flip_channel(0.5, 0.4);
  }
  throw ParseError("unknown demo");
}

ComplexMatrix demo_start(DemoName name) {
  if (name == DemoName::fig2) {
    return ComplexMatrix{{0, 1, 0}, {0, 1, 0}, {0, 0, Complex(0, 2)}};
  }
  return ComplexMatrix{{0, 1}, {0, 0}};
}

Demo run_demo(DemoName name, std::size_t iterates, std::size_t num_angles) {
  Demo demo{name, demo_channel(name), {}};
  const char prefix = name == DemoName::fig1a ? 'A' : name == DemoName::fig1b ? 'B' : 'C';
  ComplexMatrix current = demo_start(name);
  for (std::size_t j = 1; j <= iterates; ++j) {
    if (j > 1) current = apply(demo.channel, current);
    DemoIterate it;
    it.label = std::string(1, prefix) + std::to_string(j);
    it.matrix = current;
    it.barycenter = trace(current) / static_cast<double>(current.rows());
    it.boundary = boundary(current, num_angles);
    demo.iterates.push_back(std::move(it));
  }
  return demo;
}

std::string demo_svg(const Demo& demo) {
  static const char* const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
  SvgFigure fig("Numerical ranges, " + to_string(demo.name));
  for (std::size_t j = 0; j < demo.iterates.size(); ++j) {
    const auto& it = demo.iterates[j];
    fig.add_closed_curve(it.boundary.boundary_points, kColors[j % 5], "W(" + it.label + ")");
  }
  if (!demo.iterates.empty()) {
    fig.add_star(demo.iterates.front().barycenter, "#000000", "barycenter");
  }
  return fig.render();
}

}  // namespace jnrange
