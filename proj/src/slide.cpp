#include "towertab/slide.hpp"

#include <algorithm>

namespace towertab {

SlideResult slide(const TowerDiagram& input, int value) {
    if (value < 1) throw std::invalid_argument("slide value must be positive");
    // Scan state: v is the value currently sliding, m the first column the
    // suffix recursion may still touch. Each deflection moves m strictly
    // right, so the loop ends at the latest when m passes the diagram width.
    int v = value;
    int m = 1;
    for (;;) {
        // First tower in columns m..v-1 holding a cell on diagonal v-1.
        int col = 0;
        const int limit = std::min(v - 1, input.width());
        for (int c = m; c <= limit; ++c) {
            if (input.height(c) >= v - c) {
                col = c;
                break;
            }
        }
        if (col != 0) {
            const int h = input.height(col);
            if (h == v - col)  // lands on top of the hit tower
                return {input.with_cell_added({col, v - col}), Cell{col, v - col}};
            if (h == v - col + 1) return {input, std::nullopt};
            v += 1;  // deflect past the hit tower
            m = col + 1;
        } else {
            // No cell on diagonal v-1 right of m, so the only possible cell
            // on diagonal v is (v,0) and the slide resolves at column v.
            const int h = input.height(v);
            if (h == 0) return {input.with_cell_added({v, 0}), Cell{v, 0}};
            if (h == 1) return {input, std::nullopt};
            m = v + 1;
            v += 1;
        }
    }
}

int SlidingTableau::label(Cell c) const {
    if (!shape.contains(c))
        throw std::invalid_argument("cell " + to_string(c) + " is not in the tableau");
    return c.diagonal();
}

std::vector<std::vector<int>> SlidingTableau::labels() const {
    std::vector<std::vector<int>> out(shape.width());
    for (int c = 1; c <= shape.width(); ++c)
        for (int j = 0; j < shape.height(c); ++j) out[c - 1].push_back(c + j);
    return out;
}

std::string format_sliding(const SlidingTableau& t) {
    std::string s = format_diagram(t.shape);
    auto labels = t.labels();
    for (int c = 1; c <= t.shape.width(); ++c) {
        if (t.shape.height(c) == 0) continue;
        s += std::to_string(c) + ":";
        for (int lab : labels[c - 1]) s += " " + std::to_string(lab);
        s += "\n";
    }
    return s;
}

SRResult sr_algorithm(const Word& word) {
    TowerDiagram shape;
    std::vector<Cell> landing;  // landing[k-1] = cell created by letter k
    landing.reserve(word.length());
    for (int k = 1; k <= word.length(); ++k) {
        SlideResult r = slide(shape, word.letter(k));
        if (r.terminated()) return {std::nullopt, k};
        landing.push_back(*r.landed);
        shape = std::move(r.diagram);
    }
    std::vector<std::vector<int>> recording(shape.width());
    for (int c = 1; c <= shape.width(); ++c) recording[c - 1].resize(shape.height(c));
    for (int k = 1; k <= word.length(); ++k) {
        Cell c = landing[k - 1];
        recording[c.column - 1][c.height] = k;
    }
    return {SRPair{SlidingTableau{shape}, TowerTableau(shape, std::move(recording))}, 0};
}

bool is_reduced_by_sliding(const Word& word) { return sr_algorithm(word).ok(); }

}  // namespace towertab
