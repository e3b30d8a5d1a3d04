#include "towertab/rothe.hpp"

#include <algorithm>

#include "towertab/enumerate.hpp"
#include "towertab/natural.hpp"
#include "towertab/slide.hpp"

namespace towertab {

RotheDiagram::RotheDiagram(std::vector<RC> cells) : cells_(std::move(cells)) {
    for (auto [r, c] : cells_)
        if (r < 1 || c < 1) throw std::invalid_argument("Rothe cells are positive pairs");
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool RotheDiagram::contains(RC rc) const {
    return std::binary_search(cells_.begin(), cells_.end(), rc);
}

std::string format_rothe(const RotheDiagram& d) {
    std::string s;
    for (auto [r, c] : d.cells())
        s += std::to_string(r) + " " + std::to_string(c) + "\n";
    return s;
}

RotheDiagram rothe_diagram(const Permutation& p) {
    const Permutation inv = p.inverse();
    std::vector<RotheDiagram::RC> cells;
    for (int i = 1; i <= p.degree(); ++i)
        for (int j = 1; j < p.apply(i); ++j)
            if (i < inv.apply(j)) cells.emplace_back(i, j);
    return RotheDiagram(std::move(cells));
}

RotheDiagram rothe_right_action(const Permutation& p, int i) {
    if (i < 1) throw std::invalid_argument("transposition index must be positive");
    std::vector<RotheDiagram::RC> cells = rothe_diagram(p).cells();
    auto swap_rows = [&] {
        for (auto& [r, c] : cells) {
            if (r == i)
                r = i + 1;
            else if (r == i + 1)
                r = i;
        }
    };
    if (p.apply(i) > p.apply(i + 1)) {
        std::erase(cells, RotheDiagram::RC{i, p.apply(i + 1)});
        swap_rows();
    } else {
        swap_rows();
        cells.emplace_back(i, p.apply(i));
    }
    RotheDiagram transformed{std::move(cells)};
    if (transformed != rothe_diagram(p.times_transposition(i)))
        throw std::logic_error("Rothe row transformation disagrees with the definition");
    return transformed;
}

TowerDiagram tower_from_rothe(const Permutation& p) {
    RotheDiagram d = rothe_diagram(p);
    int width = 0;
    for (auto [r, c] : d.cells()) width = std::max(width, c);
    std::vector<int> heights(width, 0);
    for (auto [r, c] : d.cells()) ++heights[c - 1];
    return TowerDiagram(std::move(heights));
}

VirtualTowerDiagram::VirtualTowerDiagram(std::vector<int> row_lengths)
    : rows_(std::move(row_lengths)) {
    for (int len : rows_)
        if (len < 0) throw std::invalid_argument("row length must be non-negative");
    while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
}

int VirtualTowerDiagram::size() const {
    int n = 0;
    for (int len : rows_) n += len;
    return n;
}

VirtualTowerDiagram virtual_diagram(const Word& w) {
    SRResult forward = sr_algorithm(w);
    if (!forward.ok())
        throw std::invalid_argument("word is not reduced: sliding terminates at letter " +
                                    std::to_string(forward.terminated_at));
    SRResult rev = sr_algorithm(w.reversed());
    if (!rev.ok()) throw std::logic_error("sliding rejected the reverse of a reduced word");
    return VirtualTowerDiagram(rev.pair->recording.shape().heights());
}

VirtualTowerDiagram CompleteTowerTableau::virtual_shape() const {
    return VirtualTowerDiagram(virtual_reflected.shape().heights());
}

CompleteTowerTableau complete_tableau(const Permutation& p) {
    TowerDiagram shape = shape_of(p);
    TowerTableau upper = natural_labelling(shape);
    SRResult rev = sr_algorithm(natural_word(shape).reversed());
    if (!rev.ok()) throw std::logic_error("sliding rejected the reverse of a natural word");
    return {std::move(upper), rev.pair->recording};
}

RotheDiagram rothify(const Permutation& p) {
    CompleteTowerTableau ct = complete_tableau(p);
    const int l = ct.upper.size();
    std::vector<RotheDiagram::RC> cells;
    cells.reserve(l);
    for (int k = 1; k <= l; ++k) {
        Cell u = ct.upper.cell_of(k);
        Cell v = ct.virtual_reflected.cell_of(l + 1 - k);  // reflected: column = row
        cells.emplace_back(v.column, u.column);
    }
    return RotheDiagram(std::move(cells));
}

}  // namespace towertab
