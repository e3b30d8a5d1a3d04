#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "towertab/core.hpp"

// Finite permutations (the direct limit of all symmetric groups) in one-line
// notation, together with the inversion-count length and a brute-force
// reduced-word search that serves as an independent oracle for the sliding
// machinery.

namespace towertab {

class Permutation {
  public:
    Permutation() = default;  // identity
    // One-line notation; must be a permutation of 1..m. Trailing fixed
    // points are trimmed, so permutations of different nominal degrees
    // compare equal when they agree.
    explicit Permutation(std::vector<int> one_line);

    int apply(int x) const;  // image of x, identity beyond the support
    int degree() const { return static_cast<int>(one_line_.size()); }
    bool is_identity() const { return one_line_.empty(); }
    const std::vector<int>& one_line() const { return one_line_; }

    Permutation inverse() const;
    // Right multiplication by the adjacent transposition s_i: swaps the
    // one-line entries at positions i and i+1.
    Permutation times_transposition(int i) const;
    // Position i is a descent when apply(i) > apply(i+1), i.e. multiplying
    // by s_i shortens the permutation.
    bool is_descent(int i) const { return apply(i) > apply(i + 1); }

    bool operator==(const Permutation&) const = default;

  private:
    std::vector<int> one_line_;
};

// Evaluates s_{a1} s_{a2} ... s_{an} left to right by swapping one-line
// positions (right multiplication).
Permutation word_to_permutation(const Word&);

// Number of inversions of the one-line form; the Coxeter length.
int coxeter_length(const Permutation&);

// Length-based reducedness test, independent of the sliding algorithm.
bool is_reduced_oracle(const Word&);

// All reduced words of p, found by depth-first search over descents; sorted
// lexicographically. Throws CapExceeded if there are more than `cap`.
std::vector<Word> reduced_words_oracle(const Permutation&, std::size_t cap = 1'000'000);

// One reduced word of p (the lexicographic descent walk).
Word any_reduced_word(const Permutation&);

std::string format_permutation(const Permutation&);
Permutation parse_permutation(std::string_view text);

}  // namespace towertab
