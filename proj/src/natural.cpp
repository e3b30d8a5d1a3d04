#include "towertab/natural.hpp"

#include "towertab/read.hpp"

namespace towertab {

TowerTableau natural_labelling(const TowerDiagram& shape) {
    std::vector<std::vector<int>> labels(shape.width());
    int next = 1;
    for (int c = shape.width(); c >= 1; --c)
        for (int j = 0; j < shape.height(c); ++j) labels[c - 1].push_back(next++);
    return TowerTableau(shape, std::move(labels));
}

Word natural_word(const TowerDiagram& shape) {
    return reading_word(natural_labelling(shape));
}

Word natural_word_runs(const TowerDiagram& shape) {
    std::vector<int> letters;
    letters.reserve(shape.size());
    for (int c = shape.width(); c >= 1; --c)
        for (int j = 0; j < shape.height(c); ++j) letters.push_back(c + j);
    return Word(std::move(letters));
}

bool is_natural_word(const Word& w) {
    const auto& xs = w.letters();
    // Greedy maximal ascending runs of consecutive integers.
    int prev_start = 0;
    std::size_t i = 0;
    while (i < xs.size()) {
        int start = xs[i];
        if (prev_start != 0 && start >= prev_start) return false;
        prev_start = start;
        ++i;
        while (i < xs.size() && xs[i] == xs[i - 1] + 1) ++i;
    }
    return true;
}

}  // namespace towertab
