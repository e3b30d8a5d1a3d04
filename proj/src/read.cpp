#include "towertab/read.hpp"

#include "towertab/flight.hpp"

namespace towertab {

namespace {

// Walks the labels in order, growing the prefix diagram one cell at a time.
// `out`, when non-null, collects the flight numbers. Returns the smallest
// label violating standardness, 0 if none.
int scan(const TowerTableau& t, std::vector<int>* out) {
    TowerDiagram prefix;
    for (int a = 1; a <= t.size(); ++a) {
        Cell c = t.cell_of(a);
        // The new cell must extend its tower exactly at the top, otherwise
        // the prefix is not a tower diagram.
        if (c.height != prefix.height(c.column)) return a;
        prefix = prefix.with_cell_added(c);
        auto f = flight_number(prefix, c);
        if (!f) return a;  // top cell but no flight path, so not a corner
        if (out) out->push_back(*f);
    }
    return 0;
}

}  // namespace

int first_nonstandard_label(const TowerTableau& t) { return scan(t, nullptr); }

bool is_standard(const TowerTableau& t) { return first_nonstandard_label(t) == 0; }

Word reading_word(const TowerTableau& t) {
    std::vector<int> letters;
    letters.reserve(t.size());
    int bad = scan(t, &letters);
    if (bad != 0)
        throw std::invalid_argument("tableau is not standard: label " + std::to_string(bad) +
                                    " is not a corner of its prefix shape");
    return Word(std::move(letters));
}

}  // namespace towertab
