#pragma once

#include <string>

#include "towertab/core.hpp"
#include "towertab/rothe.hpp"
#include "towertab/slide.hpp"

// ASCII rendering of diagrams, tableaux, Rothe diagrams and complete tower
// tableaux. Grids are drawn with row/column rules and a middle dot for empty
// positions inside the bounding box.

namespace towertab {

std::string render_diagram(const TowerDiagram&);
std::string render_tableau(const TowerTableau&);
std::string render_sliding(const SlidingTableau&);
// Marks the flight path on its diagram, cells numbered in flight order
// starting from the flying cell; other diagram cells show '#'.
std::string render_flight(const TowerDiagram&, const FlightPath&);
// Draws at least a `dimension` x `dimension` array (the permutation's
// support square); grows as needed to fit the cells.
std::string render_rothe(const RotheDiagram&, int dimension = 0);

// Upper tableau above a horizontal rule, virtual rows below it, extending
// left from the shared vertical border; labels right-aligned per cell.
std::string render_complete(const CompleteTowerTableau&);

}  // namespace towertab
