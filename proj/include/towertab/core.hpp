#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

// Core value types shared by all modules: cells, tower diagrams, words and
// labelled tower tableaux, plus their text codecs. All types are immutable
// after construction and safe to share between threads.

namespace towertab {

// Unit square in column `column` (1-based) at height `height` (0 = bottom).
// The cell lies on the diagonal x+y = column+height.
struct Cell {
    int column = 1;
    int height = 0;

    int diagonal() const { return column + height; }
    auto operator<=>(const Cell&) const = default;  // lexicographic
};

std::string to_string(Cell c);

// A finite sequence of tower heights in normal form (no trailing zeros).
// Equality is equality of normal forms; the empty diagram has width 0.
class TowerDiagram {
  public:
    TowerDiagram() = default;
    explicit TowerDiagram(std::vector<int> heights);

    // Height of the tower in `column` (1-based); 0 beyond the width.
    int height(int column) const {
        return column >= 1 && column <= width() ? heights_[column - 1] : 0;
    }
    int width() const { return static_cast<int>(heights_.size()); }
    int size() const;
    bool empty() const { return heights_.empty(); }

    bool contains(Cell c) const { return c.height < height(c.column); }

    // All cells, column-major, bottom to top.
    std::vector<Cell> cells() const;

    const std::vector<int>& heights() const { return heights_; }

    // New diagram with one cell added on top of tower `c.column`; the cell
    // must sit exactly at the current top (c.height == height(c.column)).
    TowerDiagram with_cell_added(Cell c) const;
    // New diagram with the top cell of `column` removed.
    TowerDiagram with_top_removed(int column) const;

    bool operator==(const TowerDiagram&) const = default;
    auto operator<=>(const TowerDiagram&) const = default;

  private:
    std::vector<int> heights_;
};

TowerDiagram diagram_from_heights(std::span<const int> heights);

// A finite word over the positive integers.
class Word {
  public:
    Word() = default;
    explicit Word(std::vector<int> letters);

    int length() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    int letter(int k) const { return letters_[k - 1]; }  // 1-based
    const std::vector<int>& letters() const { return letters_; }
    Word reversed() const;

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

  private:
    std::vector<int> letters_;
};

// A tower diagram of size n whose cells carry a bijective labelling by 1..n.
class TowerTableau {
  public:
    TowerTableau() = default;
    // labels[c-1][j] is the label of cell (c, j); the outer vector must match
    // the shape heights and the labels must be a bijection onto 1..n.
    TowerTableau(TowerDiagram shape, std::vector<std::vector<int>> labels);

    const TowerDiagram& shape() const { return shape_; }
    int size() const { return shape_.size(); }

    int label(Cell c) const;
    Cell cell_of(int label) const;
    const std::vector<std::vector<int>>& labels() const { return labels_; }

    bool operator==(const TowerTableau& o) const {
        return shape_ == o.shape_ && labels_ == o.labels_;
    }
    auto operator<=>(const TowerTableau& o) const {
        return std::tie(shape_, labels_) <=> std::tie(o.shape_, o.labels_);
    }

  private:
    TowerDiagram shape_;
    std::vector<std::vector<int>> labels_;
    std::vector<Cell> cell_by_label_;  // index = label-1
};

// Flight path of a cell: first entry is the cell itself, last entry is the
// lexicographically minimal cell. Each zigzag step contributes two cells, so
// the diagonals run d, d, d-1, d-1, ..., f.
struct FlightPath {
    std::vector<Cell> cells;

    int flight_number() const { return cells.back().diagonal(); }
    int zigzag_steps() const { return static_cast<int>(cells.size()) / 2; }
};

// Raised by the text parsers; positions are 1-based.
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, int column, const std::string& reason);
    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_;
    int column_;
};

// Raised when an enumeration would exceed its result cap.
class CapExceeded : public std::runtime_error {
  public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Text codecs. All formats are ASCII and newline-terminated; parse accepts
// exactly what format emits (plus insignificant extra spaces).
std::string format_diagram(const TowerDiagram&);
std::string format_word(const Word&);
std::string format_tableau(const TowerTableau&);
TowerDiagram parse_diagram(std::string_view text);
Word parse_word(std::string_view text);
TowerTableau parse_tableau(std::string_view text);

}  // namespace towertab
