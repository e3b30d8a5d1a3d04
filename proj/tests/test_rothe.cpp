#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "testutil.hpp"
#include "towertab/enumerate.hpp"
#include "towertab/natural.hpp"
#include "towertab/read.hpp"
#include "towertab/rothe.hpp"
#include "towertab/slide.hpp"

using namespace towertab;

namespace {

std::vector<Permutation> symmetric_group(int n) {
    std::vector<int> base(n);
    for (int i = 0; i < n; ++i) base[i] = i + 1;
    std::vector<Permutation> out;
    do {
        out.emplace_back(std::vector<int>(base));
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

using RC = RotheDiagram::RC;

}  // namespace

TEST_CASE("rothe diagrams") {
    CHECK(rothe_diagram(Permutation({2, 1, 4, 6, 3, 5})).cells() ==
          std::vector<RC>{{1, 1}, {3, 3}, {4, 3}, {4, 5}});
    CHECK(rothe_diagram(Permutation()).cells().empty());
    CHECK(rothe_diagram(Permutation({4, 5, 1, 2, 6, 3})).cells() ==
          std::vector<RC>{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {5, 3}});
}

TEST_CASE("rothe size equals coxeter length") {
    std::mt19937 rng(81);
    for (int trial = 0; trial < 2000; ++trial) {
        Permutation p{testutil::random_one_line(rng, 8)};
        CHECK(rothe_diagram(p).size() == coxeter_length(p));
    }
}

TEST_CASE("row transformation under right multiplication") {
    // increasing case grows the diagram by one cell
    Permutation p({2, 1, 4, 6, 3, 5});
    CHECK(rothe_right_action(p, 3).size() == rothe_diagram(p).size() + 1);

    CHECK(rothe_right_action(Permutation(), 1).cells() == std::vector<RC>{{1, 1}});

    // decreasing case: 4321 * s_1 has length 5
    CHECK(rothe_right_action(Permutation({4, 3, 2, 1}), 1).size() == 5);

    // the transformation self-checks against the definition on every call
    std::mt19937 rng(82);
    for (int trial = 0; trial < 3000; ++trial) {
        Permutation q{testutil::random_one_line(rng, 7)};
        std::uniform_int_distribution<int> idx(1, 8);
        int i = idx(rng);
        CHECK_NOTHROW(rothe_right_action(q, i));
    }
}

TEST_CASE("tower heights are rothe column counts") {
    CHECK(tower_from_rothe(Permutation({4, 5, 1, 2, 6, 3})) == TowerDiagram({2, 2, 3}));
    CHECK(tower_from_rothe(Permutation()) == TowerDiagram());
    CHECK(tower_from_rothe(Permutation({2, 1, 4, 6, 3, 5})) == TowerDiagram({1, 0, 2, 0, 1}));

    for (const Permutation& p : symmetric_group(5))
        CHECK(tower_from_rothe(p) == shape_of(p));
}

TEST_CASE("virtual tower diagrams") {
    CHECK(virtual_diagram(Word({3, 4, 5, 2, 3, 1, 2})) ==
          VirtualTowerDiagram({3, 3, 0, 0, 1}));
    for (int k = 1; k <= 5; ++k) {
        std::vector<int> rows(k, 0);
        rows[k - 1] = 1;
        CHECK(virtual_diagram(Word({k})) == VirtualTowerDiagram(rows));
    }
    CHECK(virtual_diagram(Word({3, 2, 1, 3, 2, 3})) == VirtualTowerDiagram({3, 2, 1}));
    CHECK_THROWS_AS(virtual_diagram(Word({1, 1})), std::invalid_argument);
}

TEST_CASE("virtual diagram does not depend on the reduced word") {
    std::mt19937 rng(83);
    for (int trial = 0; trial < 20; ++trial) {
        Permutation p{testutil::random_one_line(rng, 5)};
        std::vector<Word> words = reduced_words_oracle(p);
        VirtualTowerDiagram first = virtual_diagram(words.front());
        for (const Word& w : words) CHECK(virtual_diagram(w) == first);
    }
}

TEST_CASE("complete tableau of the running permutation") {
    CompleteTowerTableau ct = complete_tableau(Permutation({4, 5, 1, 2, 6, 3}));
    CHECK(ct.upper == natural_labelling(TowerDiagram({2, 2, 3})));
    CHECK(ct.virtual_shape() == VirtualTowerDiagram({3, 3, 0, 0, 1}));
    CHECK(ct.virtual_label(1, 0) == 2);
    CHECK(ct.virtual_label(1, 1) == 4);
    CHECK(ct.virtual_label(1, 2) == 7);
    CHECK(ct.virtual_label(2, 0) == 1);
    CHECK(ct.virtual_label(2, 1) == 3);
    CHECK(ct.virtual_label(2, 2) == 6);
    CHECK(ct.virtual_label(5, 0) == 5);
}

TEST_CASE("complete tableau edge cases") {
    CompleteTowerTableau empty = complete_tableau(Permutation());
    CHECK(empty.upper.size() == 0);
    CHECK(empty.virtual_shape().depth() == 0);

    // the virtual labels of the longest element come from R(reverse(323123))
    CompleteTowerTableau longest = complete_tableau(Permutation({4, 3, 2, 1}));
    SRResult r = sr_algorithm(Word({3, 2, 3, 1, 2, 3}).reversed());
    REQUIRE(r.ok());
    CHECK(longest.virtual_reflected == r.pair->recording);
}

TEST_CASE("the reflected virtual reading word is the reverse of the upper one") {
    std::mt19937 rng(84);
    for (int trial = 0; trial < 500; ++trial) {
        Permutation p{testutil::random_one_line(rng, 6)};
        CompleteTowerTableau ct = complete_tableau(p);
        CHECK(reading_word(ct.virtual_reflected) == reading_word(ct.upper).reversed());
    }
}

TEST_CASE("rothification") {
    CHECK(rothify(Permutation({4, 5, 1, 2, 6, 3})) ==
          rothe_diagram(Permutation({4, 5, 1, 2, 6, 3})));
    CHECK(rothify(Permutation({4, 5, 1, 2, 6, 3})).cells() ==
          std::vector<RC>{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {5, 3}});
    CHECK(rothify(Permutation()).cells().empty());

    for (const Permutation& p : symmetric_group(5)) CHECK(rothify(p) == rothe_diagram(p));
}

TEST_CASE("the row below the virtual label-1 cell is empty") {
    for (const Permutation& p : symmetric_group(5)) {
        if (p.is_identity()) continue;
        CompleteTowerTableau ct = complete_tableau(p);
        Cell c1 = ct.virtual_reflected.cell_of(1);  // (column r, height 0)
        CHECK(c1.height == 0);
        CHECK(ct.virtual_shape().row_length(c1.column + 1) == 0);
    }
}

// Dropping the last letter of the natural word removes the upper label-l
// cell, removes the virtual label-1 cell, and slides the rest of its row one
// row deeper (re-anchored at the border), with virtual labels shifted by one.
TEST_CASE("complete tableau transformation under the last natural letter") {
    for (const Permutation& p : symmetric_group(5)) {
        if (p.is_identity()) continue;
        CompleteTowerTableau ct = complete_tableau(p);
        const int l = ct.upper.size();
        Word eta = natural_word(shape_of(p));
        Permutation shorter = p.times_transposition(eta.letter(l));
        CompleteTowerTableau fresh = complete_tableau(shorter);

        // upper: natural labelling minus the label-l cell
        Cell top = ct.upper.cell_of(l);
        CHECK(fresh.upper.shape() == ct.upper.shape().with_top_removed(top.column));
        for (int k = 1; k < l; ++k) CHECK(fresh.upper.cell_of(k) == ct.upper.cell_of(k));

        // virtual: remove label 1 at (row r, offset 0); the rest of row r
        // moves to row r+1 with offsets shifted down; labels decrement
        Cell c1 = ct.virtual_reflected.cell_of(1);
        const int r = c1.column;
        for (int k = 2; k <= l; ++k) {
            Cell old = ct.virtual_reflected.cell_of(k);
            Cell expected = old.column == r ? Cell{r + 1, old.height - 1} : old;
            CHECK(fresh.virtual_reflected.cell_of(k - 1) == expected);
        }
    }
}

TEST_CASE("rothe text format") {
    CHECK(format_rothe(rothe_diagram(Permutation({2, 1, 4, 6, 3, 5}))) ==
          "1 1\n3 3\n4 3\n4 5\n");
    CHECK(format_rothe(RotheDiagram()).empty());
}
