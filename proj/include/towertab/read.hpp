#pragma once

#include "towertab/core.hpp"

// Standardness of tower tableaux and the reading function from standard
// tableaux to words.

namespace towertab {

// Smallest label a for which the cells labelled 1..a fail to form a tower
// diagram with the label-a cell a corner of it; 0 when the tableau is
// standard.
int first_nonstandard_label(const TowerTableau&);

bool is_standard(const TowerTableau&);

// Word whose k-th letter is the flight number of the label-k cell inside the
// prefix shape of labels <= k. Rejects non-standard tableaux, naming the
// offending label.
Word reading_word(const TowerTableau&);

}  // namespace towertab
