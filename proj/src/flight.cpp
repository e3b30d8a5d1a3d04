#include "towertab/flight.hpp"

#include <algorithm>

namespace towertab {

namespace {

// Rightmost cell of the diagram strictly left of `column` on diagonal `d`.
std::optional<Cell> rightmost_on_diagonal(const TowerDiagram& t, int column, int d) {
    for (int c = std::min(column - 1, d); c >= 1; --c) {
        Cell probe{c, d - c};
        if (t.contains(probe)) return probe;
    }
    return std::nullopt;
}

}  // namespace

std::optional<FlightPath> flight_path(const TowerDiagram& t, Cell cell) {
    if (!t.contains(cell))
        throw std::invalid_argument("cell " + to_string(cell) + " is not in the diagram");
    // Leftward scan, one diagonal at a time; equivalent to the recursive
    // direct/zigzag definition but needs no stack on wide diagrams.
    FlightPath path{{cell}};
    Cell cur = cell;
    for (;;) {
        auto hit = rightmost_on_diagonal(t, cur.column, cur.diagonal() - 1);
        if (!hit) return path;  // direct flight from `cur`
        Cell above{hit->column, hit->height + 1};
        if (!t.contains(above)) return std::nullopt;  // zigzag blocked, no direct flight
        path.cells.push_back(above);
        path.cells.push_back(*hit);
        cur = *hit;
    }
}

std::optional<int> flight_number(const TowerDiagram& t, Cell cell) {
    auto path = flight_path(t, cell);
    if (!path) return std::nullopt;
    return path->flight_number();
}

std::vector<Cell> corner_cells(const TowerDiagram& t) {
    std::vector<Cell> out;
    for (int c = 1; c <= t.width(); ++c) {
        if (t.height(c) == 0) continue;
        Cell top{c, t.height(c) - 1};
        if (flight_path(t, top)) out.push_back(top);
    }
    return out;
}

TowerDiagram remove_corner(const TowerDiagram& t, Cell cell) {
    if (!t.contains(cell) || cell.height != t.height(cell.column) - 1 ||
        !flight_path(t, cell))
        throw std::invalid_argument("cell " + to_string(cell) + " is not a corner cell");
    return t.with_top_removed(cell.column);
}

}  // namespace towertab
