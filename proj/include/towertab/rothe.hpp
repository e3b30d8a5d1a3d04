#pragma once

#include <utility>
#include <vector>

#include "towertab/core.hpp"
#include "towertab/perm.hpp"

// Rothe diagrams and their correspondence with tower diagrams: the s_i action
// on Rothe diagrams, column counts, virtual tower diagrams, complete tower
// tableaux and Rothification.

namespace towertab {

// Cells (row, col) of an n x n array, row 1 at top; sorted row-major.
class RotheDiagram {
  public:
    using RC = std::pair<int, int>;

    RotheDiagram() = default;
    explicit RotheDiagram(std::vector<RC> cells);

    const std::vector<RC>& cells() const { return cells_; }
    int size() const { return static_cast<int>(cells_.size()); }
    bool contains(RC rc) const;

    bool operator==(const RotheDiagram&) const = default;

  private:
    std::vector<RC> cells_;
};

std::string format_rothe(const RotheDiagram&);

// Cells {(i,j) : j < w(i) and i < w^-1(j)}; exactly coxeter_length(w) many.
RotheDiagram rothe_diagram(const Permutation&);

// Rothe diagram of p * s_i, produced by the row transformation (remove a
// cell then swap rows, or swap rows then add a cell, depending on whether
// s_i shortens p) and checked against the direct definition. A mismatch
// between the two routes throws std::logic_error.
RotheDiagram rothe_right_action(const Permutation&, int i);

// Tower heights = per-column cell counts of the Rothe diagram; equals
// shape_of(p).
TowerDiagram tower_from_rothe(const Permutation&);

// Rows below the x-axis, lengths measured leftward from the vertical border:
// virtual cell (row, offset) exists iff offset < row_length(row). Obtained
// by reflecting the tower diagram of the reversed word along y = -x.
class VirtualTowerDiagram {
  public:
    VirtualTowerDiagram() = default;
    explicit VirtualTowerDiagram(std::vector<int> row_lengths);

    int row_length(int row) const {
        return row >= 1 && row <= depth() ? rows_[row - 1] : 0;
    }
    int depth() const { return static_cast<int>(rows_.size()); }
    int size() const;
    const std::vector<int>& row_lengths() const { return rows_; }
    bool contains(int row, int offset) const { return offset < row_length(row); }

    bool operator==(const VirtualTowerDiagram&) const = default;

  private:
    std::vector<int> rows_;
};

// Virtual tower diagram of a reduced word; rejects words the sliding
// algorithm terminates on.
VirtualTowerDiagram virtual_diagram(const Word&);

// Natural labelling of the complete tower diagram of a permutation. The
// virtual half is stored reflected: virtual cell (row r, offset c) is cell
// (column r, height c) of `virtual_reflected`, the recording tableau of the
// reversed natural word.
struct CompleteTowerTableau {
    TowerTableau upper;
    TowerTableau virtual_reflected;

    VirtualTowerDiagram virtual_shape() const;
    int virtual_label(int row, int offset) const {
        return virtual_reflected.label({row, offset});
    }
};

CompleteTowerTableau complete_tableau(const Permutation&);

// Rothification: pairs the upper label-k cell with the virtual label-(l+1-k)
// cell and emits (virtual row, upper column). Recovers rothe_diagram(p) by a
// route independent of the inversion sets.
RotheDiagram rothify(const Permutation&);

}  // namespace towertab
