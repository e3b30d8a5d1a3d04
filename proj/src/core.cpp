#include "towertab/core.hpp"

#include <charconv>
#include <numeric>

namespace towertab {

std::string to_string(Cell c) {
    return "(" + std::to_string(c.column) + "," + std::to_string(c.height) + ")";
}

TowerDiagram::TowerDiagram(std::vector<int> heights) : heights_(std::move(heights)) {
    for (int h : heights_)
        if (h < 0) throw std::invalid_argument("tower height must be non-negative");
    while (!heights_.empty() && heights_.back() == 0) heights_.pop_back();
}

int TowerDiagram::size() const {
    return std::accumulate(heights_.begin(), heights_.end(), 0);
}

std::vector<Cell> TowerDiagram::cells() const {
    std::vector<Cell> out;
    out.reserve(size());
    for (int c = 1; c <= width(); ++c)
        for (int j = 0; j < heights_[c - 1]; ++j) out.push_back({c, j});
    return out;
}

TowerDiagram TowerDiagram::with_cell_added(Cell c) const {
    if (c.height != height(c.column))
        throw std::invalid_argument("cell " + to_string(c) + " is not on top of its tower");
    std::vector<int> h = heights_;
    if (c.column > width()) h.resize(c.column, 0);
    ++h[c.column - 1];
    return TowerDiagram(std::move(h));
}

TowerDiagram TowerDiagram::with_top_removed(int column) const {
    if (height(column) == 0)
        throw std::invalid_argument("tower " + std::to_string(column) + " is empty");
    std::vector<int> h = heights_;
    --h[column - 1];
    return TowerDiagram(std::move(h));
}

TowerDiagram diagram_from_heights(std::span<const int> heights) {
    return TowerDiagram(std::vector<int>(heights.begin(), heights.end()));
}

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
    for (int a : letters_)
        if (a < 1) throw std::invalid_argument("word letters must be positive");
}

Word Word::reversed() const {
    return Word(std::vector<int>(letters_.rbegin(), letters_.rend()));
}

TowerTableau::TowerTableau(TowerDiagram shape, std::vector<std::vector<int>> labels)
    : shape_(std::move(shape)), labels_(std::move(labels)) {
    for (std::size_t c = shape_.width(); c < labels_.size(); ++c)
        if (!labels_[c].empty())
            throw std::invalid_argument("labels given for tower " + std::to_string(c + 1) +
                                        " beyond the shape");
    labels_.resize(shape_.width());
    // Validate the column sizes before sizing anything by shape_.size().
    for (int c = 1; c <= shape_.width(); ++c)
        if (static_cast<int>(labels_[c - 1].size()) != shape_.height(c))
            throw std::invalid_argument("label column " + std::to_string(c) +
                                        " does not match the shape height");
    const int n = shape_.size();
    cell_by_label_.assign(n, Cell{});
    std::vector<bool> seen(n, false);
    for (int c = 1; c <= shape_.width(); ++c) {
        for (int j = 0; j < shape_.height(c); ++j) {
            int lab = labels_[c - 1][j];
            if (lab < 1 || lab > n || seen[lab - 1])
                throw std::invalid_argument("labels are not a bijection onto 1.." +
                                            std::to_string(n));
            seen[lab - 1] = true;
            cell_by_label_[lab - 1] = Cell{c, j};
        }
    }
}

int TowerTableau::label(Cell c) const {
    if (!shape_.contains(c))
        throw std::invalid_argument("cell " + to_string(c) + " is not in the tableau");
    return labels_[c.column - 1][c.height];
}

Cell TowerTableau::cell_of(int label) const {
    if (label < 1 || label > size())
        throw std::invalid_argument("label " + std::to_string(label) + " out of range");
    return cell_by_label_[label - 1];
}

ParseError::ParseError(int line, int column, const std::string& reason)
    : std::runtime_error("parse error at line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + reason),
      line_(line),
      column_(column) {}

namespace {

// Splits `text` into lines without their terminators. A single trailing
// newline does not create an extra empty line.
std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

// Parses a line of integers; `line_no` is used for error reporting only.
std::vector<int> parse_int_line(std::string_view line, int line_no) {
    std::vector<int> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        int value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
        if (ec != std::errc() || ptr == line.data() + i)
            throw ParseError(line_no, static_cast<int>(i) + 1, "expected an integer");
        i = static_cast<std::size_t>(ptr - line.data());
        out.push_back(value);
    }
    return out;
}

std::string join(const std::vector<int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(xs[i]);
    }
    return s;
}

}  // namespace

std::string format_diagram(const TowerDiagram& d) { return join(d.heights()) + "\n"; }

std::string format_word(const Word& w) { return join(w.letters()) + "\n"; }

std::string format_tableau(const TowerTableau& t) {
    std::string s = format_diagram(t.shape());
    for (int c = 1; c <= t.shape().width(); ++c) {
        if (t.shape().height(c) == 0) continue;
        s += std::to_string(c) + ": " + join(t.labels()[c - 1]) + "\n";
    }
    return s;
}

TowerDiagram parse_diagram(std::string_view text) {
    auto lines = split_lines(text);
    if (lines.size() > 1) throw ParseError(2, 1, "a tower diagram is a single line of heights");
    std::vector<int> h = lines.empty() ? std::vector<int>{} : parse_int_line(lines[0], 1);
    for (std::size_t i = 0; i < h.size(); ++i)
        if (h[i] < 0) throw ParseError(1, 1, "negative tower height " + std::to_string(h[i]));
    return TowerDiagram(std::move(h));
}

Word parse_word(std::string_view text) {
    auto lines = split_lines(text);
    if (lines.size() > 1) throw ParseError(2, 1, "a word is a single line of letters");
    std::vector<int> xs = lines.empty() ? std::vector<int>{} : parse_int_line(lines[0], 1);
    for (int a : xs)
        if (a < 1) throw ParseError(1, 1, "word letter " + std::to_string(a) + " is not positive");
    return Word(std::move(xs));
}

TowerTableau parse_tableau(std::string_view text) {
    auto lines = split_lines(text);
    if (lines.empty()) return TowerTableau(TowerDiagram(), {});
    TowerDiagram shape = parse_diagram(std::string(lines[0]) + "\n");
    std::vector<std::vector<int>> labels(shape.width());
    std::size_t next = 1;
    for (int c = 1; c <= shape.width(); ++c) {
        if (shape.height(c) == 0) continue;
        if (next >= lines.size())
            throw ParseError(static_cast<int>(next) + 1, 1,
                             "missing label line for tower " + std::to_string(c));
        std::string_view line = lines[next];
        std::size_t colon = line.find(':');
        if (colon == std::string_view::npos)
            throw ParseError(static_cast<int>(next) + 1, 1, "expected \"column: labels\"");
        std::vector<int> head = parse_int_line(line.substr(0, colon), static_cast<int>(next) + 1);
        if (head.size() != 1 || head[0] != c)
            throw ParseError(static_cast<int>(next) + 1, 1,
                             "expected labels for tower " + std::to_string(c));
        labels[c - 1] = parse_int_line(line.substr(colon + 1), static_cast<int>(next) + 1);
        ++next;
    }
    if (next != lines.size())
        throw ParseError(static_cast<int>(next) + 1, 1, "unexpected trailing line");
    try {
        return TowerTableau(std::move(shape), std::move(labels));
    } catch (const std::invalid_argument& e) {
        throw ParseError(1, 1, e.what());
    }
}

}  // namespace towertab
