#pragma once

#include "towertab/core.hpp"

// The natural labelling and natural word of a tower diagram: the canonical
// standard labelling obtained by numbering the rightmost tower bottom to top
// first, then moving left tower by tower.

namespace towertab {

TowerTableau natural_labelling(const TowerDiagram&);

// Reading word of the natural labelling.
Word natural_word(const TowerDiagram&);

// Closed form of the same word: over nonempty towers right to left, the run
// i, i+1, ..., i+height-1. Agrees with natural_word on every diagram.
Word natural_word_runs(const TowerDiagram&);

// True iff the word factors into maximal runs of consecutive increasing
// integers whose initial terms are strictly decreasing. Each permutation has
// exactly one such reduced word.
bool is_natural_word(const Word&);

}  // namespace towertab
