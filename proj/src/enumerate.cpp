#include "towertab/enumerate.hpp"

#include <algorithm>
#include <map>

#include "towertab/flight.hpp"
#include "towertab/read.hpp"
#include "towertab/slide.hpp"

namespace towertab {

namespace {

// A standard tableau as the sequence of its cells in label order.
using CellSeq = std::vector<Cell>;

class SttEnumerator {
  public:
    explicit SttEnumerator(std::size_t cap) : cap_(cap) {}

    const std::vector<CellSeq>& run(const TowerDiagram& shape) {
        auto [it, fresh] = memo_.try_emplace(shape.heights());
        if (!fresh) return it->second;
        std::vector<CellSeq> out;
        if (shape.size() == 0) {
            out.push_back({});
        } else {
            for (Cell c : corner_cells(shape)) {
                for (const CellSeq& seq : run(shape.with_top_removed(c.column))) {
                    CellSeq grown = seq;
                    grown.push_back(c);
                    out.push_back(std::move(grown));
                    if (out.size() > cap_)
                        throw CapExceeded("shape has more than " + std::to_string(cap_) +
                                          " standard tableaux");
                }
            }
        }
        it->second = std::move(out);  // map iterators stay valid across the recursion
        return it->second;
    }

  private:
    std::size_t cap_;
    std::map<std::vector<int>, std::vector<CellSeq>> memo_;
};

TowerTableau tableau_from_seq(const TowerDiagram& shape, const CellSeq& seq) {
    std::vector<std::vector<int>> labels(shape.width());
    for (int c = 1; c <= shape.width(); ++c) labels[c - 1].resize(shape.height(c));
    for (std::size_t k = 0; k < seq.size(); ++k)
        labels[seq[k].column - 1][seq[k].height] = static_cast<int>(k) + 1;
    return TowerTableau(shape, std::move(labels));
}

}  // namespace

std::vector<TowerTableau> enumerate_stt(const TowerDiagram& shape, std::size_t cap) {
    SttEnumerator enumerator(cap);
    std::vector<CellSeq> seqs = enumerator.run(shape);
    std::sort(seqs.begin(), seqs.end());
    std::vector<TowerTableau> out;
    out.reserve(seqs.size());
    for (const CellSeq& seq : seqs) out.push_back(tableau_from_seq(shape, seq));
    return out;
}

std::vector<Word> reduced_words(const Permutation& p, std::size_t cap) {
    std::vector<Word> out;
    for (const TowerTableau& t : enumerate_stt(shape_of(p), cap))
        out.push_back(reading_word(t));
    return out;
}

TowerDiagram shape_of(const Permutation& p) {
    if (p.is_identity()) return TowerDiagram();
    SRResult r = sr_algorithm(any_reduced_word(p));
    if (!r.ok()) throw std::logic_error("sliding rejected a reduced word");
    return r.pair->recording.shape();
}

}  // namespace towertab
