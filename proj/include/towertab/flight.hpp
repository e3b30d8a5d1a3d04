#pragma once

#include <optional>
#include <vector>

#include "towertab/core.hpp"

// Flight paths, flight numbers and corner cells of a tower diagram.

namespace towertab {

// Flight path of a cell of the diagram, or nullopt when the cell has none.
// Querying a cell that is not in the diagram is a contract violation and
// throws std::invalid_argument.
std::optional<FlightPath> flight_path(const TowerDiagram&, Cell);

// Diagonal of the lexicographically minimal cell of the flight path;
// equals diagonal(cell) minus the number of zigzag steps.
std::optional<int> flight_number(const TowerDiagram&, Cell);

// Tower-top cells that have a flight path, sorted by column.
std::vector<Cell> corner_cells(const TowerDiagram&);

// Removes a corner cell; rejects cells that are not corners.
TowerDiagram remove_corner(const TowerDiagram&, Cell);

}  // namespace towertab
