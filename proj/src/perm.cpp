#include "towertab/perm.hpp"

#include <algorithm>

namespace towertab {

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
    const int m = static_cast<int>(one_line_.size());
    std::vector<bool> seen(m, false);
    for (int v : one_line_) {
        if (v < 1 || v > m || seen[v - 1])
            throw std::invalid_argument("not a permutation of 1.." + std::to_string(m));
        seen[v - 1] = true;
    }
    while (!one_line_.empty() && one_line_.back() == static_cast<int>(one_line_.size()))
        one_line_.pop_back();
}

int Permutation::apply(int x) const {
    if (x < 1) throw std::invalid_argument("permutations act on positive integers");
    return x <= degree() ? one_line_[x - 1] : x;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(degree());
    for (int i = 1; i <= degree(); ++i) inv[one_line_[i - 1] - 1] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::times_transposition(int i) const {
    if (i < 1) throw std::invalid_argument("transposition index must be positive");
    std::vector<int> lin = one_line_;
    if (static_cast<int>(lin.size()) < i + 1) {
        int old = static_cast<int>(lin.size());
        lin.resize(i + 1);
        for (int k = old; k < i + 1; ++k) lin[k] = k + 1;
    }
    std::swap(lin[i - 1], lin[i]);
    return Permutation(std::move(lin));
}

Permutation word_to_permutation(const Word& w) {
    Permutation p;
    for (int a : w.letters()) p = p.times_transposition(a);
    return p;
}

int coxeter_length(const Permutation& p) {
    const auto& lin = p.one_line();
    int inv = 0;
    for (std::size_t a = 0; a < lin.size(); ++a)
        for (std::size_t b = a + 1; b < lin.size(); ++b)
            if (lin[a] > lin[b]) ++inv;
    return inv;
}

bool is_reduced_oracle(const Word& w) {
    return coxeter_length(word_to_permutation(w)) == w.length();
}

namespace {

void search(const Permutation& p, std::vector<int>& tail, std::vector<Word>& out,
            std::size_t cap) {
    if (p.is_identity()) {
        // `tail` holds the word back to front.
        out.emplace_back(std::vector<int>(tail.rbegin(), tail.rend()));
        if (out.size() > cap) throw CapExceeded("more than " + std::to_string(cap) +
                                                " reduced words");
        return;
    }
    for (int i = 1; i < p.degree(); ++i) {
        if (!p.is_descent(i)) continue;
        tail.push_back(i);
        search(p.times_transposition(i), tail, out, cap);
        tail.pop_back();
    }
}

}  // namespace

std::vector<Word> reduced_words_oracle(const Permutation& p, std::size_t cap) {
    std::vector<Word> out;
    std::vector<int> tail;
    search(p, tail, out, cap);
    std::sort(out.begin(), out.end());
    return out;
}

Word any_reduced_word(const Permutation& p) {
    std::vector<int> tail;
    Permutation q = p;
    while (!q.is_identity()) {
        for (int i = 1; i < q.degree(); ++i) {
            if (q.is_descent(i)) {
                tail.push_back(i);
                q = q.times_transposition(i);
                break;
            }
        }
    }
    return Word(std::vector<int>(tail.rbegin(), tail.rend()));
}

std::string format_permutation(const Permutation& p) {
    std::string s;
    for (std::size_t i = 0; i < p.one_line().size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(p.one_line()[i]);
    }
    return s + "\n";
}

Permutation parse_permutation(std::string_view text) {
    Word raw = parse_word(text);
    try {
        return Permutation(raw.letters());
    } catch (const std::invalid_argument& e) {
        throw ParseError(1, 1, e.what());
    }
}

}  // namespace towertab
