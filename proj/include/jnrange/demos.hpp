#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "jnrange/channels.hpp"
#include "jnrange/linalg.hpp"
#include "jnrange/numrange.hpp"

namespace jnrange {

/// Iterated example dynamics:
///   fig1a  decaying channel, p = 0.5, starting from [[0, 1], [0, 0]]
///   fig1b  phase-flip channel, p = 0.25, same starting matrix
///   fig2   double-flip qutrit channel, p = 0.5, q = 0.4, starting from
///          [[0, 1, 0], [0, 1, 0], [0, 0, 2i]]
enum class DemoName { fig1a, fig1b, fig2 };

DemoName demo_from_string(const std::string& name);
std::string to_string(DemoName name);

struct DemoIterate {
  std::string label;      // e.g. "C2"
  ComplexMatrix matrix;   // Phi^{j-1}(start)
  Complex barycenter;     // tr / N
  RangeBoundary boundary;
};

struct Demo {
  DemoName name;
  KrausChannel channel;
  std::vector<DemoIterate> iterates;
};

KrausChannel demo_channel(DemoName name);
ComplexMatrix demo_start(DemoName name);

Demo run_demo(DemoName name, std::size_t iterates = 3, std::size_t num_angles = kDefaultNumAngles);

/// Combined figure: one outline per iterate plus the barycenter star.
std::string demo_svg(const Demo& demo);

}  // namespace jnrange
