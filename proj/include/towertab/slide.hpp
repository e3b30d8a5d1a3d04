#pragma once

#include <optional>

#include "towertab/core.hpp"

// Sliding a positive integer into a tower diagram, and the sliding-and-
// recording algorithm over words. The slide either lands, adding exactly one
// tower-top cell, or terminates leaving the diagram unchanged; termination is
// a normal result, not an error.

namespace towertab {

struct SlideResult {
    TowerDiagram diagram;        // enlarged on landing, the input otherwise
    std::optional<Cell> landed;  // nullopt means the slide terminated

    bool terminated() const { return !landed.has_value(); }
};

SlideResult slide(const TowerDiagram&, int value);

// The sliding tableau is canonically determined by its shape: cell (i,j)
// carries label i+j. The labels repeat, so this is not a TowerTableau.
struct SlidingTableau {
    TowerDiagram shape;

    int label(Cell c) const;
    std::vector<std::vector<int>> labels() const;
};

std::string format_sliding(const SlidingTableau&);

struct SRPair {
    SlidingTableau sliding;
    TowerTableau recording;  // cell created by the k-th letter carries label k
};

struct SRResult {
    std::optional<SRPair> pair;
    int terminated_at = 0;  // 1-based index of the fatal letter; 0 on success

    bool ok() const { return pair.has_value(); }
};

SRResult sr_algorithm(const Word&);

// True iff the SR algorithm accepts the word, which happens exactly for
// reduced words.
bool is_reduced_by_sliding(const Word&);

}  // namespace towertab
