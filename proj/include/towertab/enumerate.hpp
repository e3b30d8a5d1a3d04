#pragma once

#include <cstddef>
#include <vector>

#include "towertab/core.hpp"
#include "towertab/perm.hpp"

// Enumeration of all standard tower tableaux of a shape by corner removal,
// and through it the reduced words of a permutation.

namespace towertab {

// All standard tableaux of the shape, built by choosing a corner for the top
// label and recursing on the reduced diagram. Sub-shapes recur across
// branches, so results are memoized on the height sequence. Output is sorted
// by the label-position sequence; throws CapExceeded past `cap` tableaux.
std::vector<TowerTableau> enumerate_stt(const TowerDiagram&, std::size_t cap = 1'000'000);

// Reading words of enumerate_stt(shape_of(p)), in the same order.
std::vector<Word> reduced_words(const Permutation&, std::size_t cap = 1'000'000);

// The tower diagram of the permutation: the SR shape of any reduced word.
TowerDiagram shape_of(const Permutation&);

}  // namespace towertab
