#include "towertab/render.hpp"

#include <algorithm>
#include <functional>

namespace towertab {

namespace {

constexpr const char* kDot = "\xC2\xB7";  // U+00B7, display width 1

int display_width(const std::string& s) {
    int w = 0;
    for (char ch : s)
        if ((ch & 0xC0) != 0x80) ++w;  // count non-continuation bytes
    return w;
}

std::string pad_left(const std::string& s, int width) {
    return std::string(std::max(0, width - display_width(s)), ' ') + s;
}

// Boxed grid. `content(col, row)` returns the cell text ('row' meaning is up
// to the caller); empty string renders as a dot. Row headers go in a left
// gutter, column headers in a footer.
std::string boxed_grid(int cols, int rows, const std::function<std::string(int, int)>& content,
                       const std::function<std::string(int)>& row_header,
                       const std::function<std::string(int)>& col_header) {
    if (static_cast<long long>(cols) * rows > 4'000'000)
        throw std::invalid_argument("grid too large to render");
    int cell_w = 1;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            cell_w = std::max(cell_w, display_width(content(c, r)));
    for (int c = 0; c < cols; ++c)
        cell_w = std::max(cell_w, display_width(col_header(c)));
    int gutter_w = 0;
    for (int r = 0; r < rows; ++r)
        gutter_w = std::max(gutter_w, display_width(row_header(r)));

    std::string rule = std::string(gutter_w, ' ') + "+";
    for (int c = 0; c < cols; ++c) rule += std::string(cell_w + 2, '-') + "+";
    rule += "\n";

    std::string out;
    for (int r = 0; r < rows; ++r) {
        out += rule;
        out += pad_left(row_header(r), gutter_w) + "|";
        for (int c = 0; c < cols; ++c) {
            std::string text = content(c, r);
            if (text.empty()) text = kDot;
            out += " " + pad_left(text, cell_w) + " |";
        }
        out += "\n";
    }
    out += rule;
    out += std::string(gutter_w, ' ') + " ";
    for (int c = 0; c < cols; ++c) out += " " + pad_left(col_header(c), cell_w) + "  ";
    out += "\n";
    return out;
}

std::string grid_for_shape(const TowerDiagram& shape,
                           const std::function<std::string(Cell)>& cell_text) {
    if (shape.empty()) return "(empty)\n";
    int maxh = *std::max_element(shape.heights().begin(), shape.heights().end());
    return boxed_grid(
        shape.width(), maxh,
        [&](int c, int r) {
            Cell cell{c + 1, maxh - 1 - r};
            return shape.contains(cell) ? cell_text(cell) : std::string();
        },
        [&](int r) { return std::to_string(maxh - 1 - r); },
        [&](int c) { return std::to_string(c + 1); });
}

}  // namespace

std::string render_diagram(const TowerDiagram& d) {
    return grid_for_shape(d, [](Cell) { return std::string("#"); });
}

std::string render_tableau(const TowerTableau& t) {
    return grid_for_shape(t.shape(), [&](Cell c) { return std::to_string(t.label(c)); });
}

std::string render_sliding(const SlidingTableau& t) {
    return grid_for_shape(t.shape, [&](Cell c) { return std::to_string(t.label(c)); });
}

std::string render_flight(const TowerDiagram& d, const FlightPath& path) {
    return grid_for_shape(d, [&](Cell c) {
        for (std::size_t k = 0; k < path.cells.size(); ++k)
            if (path.cells[k] == c) return std::to_string(k + 1);
        return std::string("#");
    });
}

std::string render_rothe(const RotheDiagram& d, int dimension) {
    int n = dimension;
    for (auto [r, c] : d.cells()) n = std::max({n, r, c});
    if (n == 0) return "(empty)\n";
    return boxed_grid(
        n, n,
        [&](int c, int r) {
            return d.contains({r + 1, c + 1}) ? std::string("o") : std::string();
        },
        [&](int r) { return std::to_string(r + 1); },
        [&](int c) { return std::to_string(c + 1); });
}

std::string render_complete(const CompleteTowerTableau& ct) {
    const TowerDiagram& upper = ct.upper.shape();
    VirtualTowerDiagram lower = ct.virtual_shape();
    if (upper.empty() && lower.depth() == 0) return "(empty)\n";

    int cell_w = 1;
    for (Cell c : upper.cells())
        cell_w = std::max(cell_w, display_width(std::to_string(ct.upper.label(c))));
    for (int r = 1; r <= lower.depth(); ++r)
        for (int off = 0; off < lower.row_length(r); ++off)
            cell_w = std::max(cell_w, display_width(std::to_string(ct.virtual_label(r, off))));

    int max_off = 0;
    for (int len : lower.row_lengths()) max_off = std::max(max_off, len);
    const int left_w = max_off * (cell_w + 1);

    auto slot = [&](const std::string& s) { return " " + pad_left(s, cell_w); };
    std::string out;

    int maxh = 0;
    for (int h : upper.heights()) maxh = std::max(maxh, h);
    for (int j = maxh - 1; j >= 0; --j) {
        std::string line(left_w, ' ');
        line += "|";
        for (int c = 1; c <= upper.width(); ++c)
            line += slot(upper.contains({c, j}) ? std::to_string(ct.upper.label({c, j})) : kDot);
        out += line + "\n";
    }
    out += std::string(left_w, '-') + "+" +
           std::string(upper.width() * (cell_w + 1), '-') + "\n";
    for (int r = 1; r <= lower.depth(); ++r) {
        std::string line;
        for (int off = max_off - 1; off >= 0; --off)
            line += slot(lower.contains(r, off) ? std::to_string(ct.virtual_label(r, off))
                                                : std::string(kDot));
        out += line + "|\n";
    }
    return out;
}

}  // namespace towertab
