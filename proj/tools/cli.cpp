#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "towertab/core.hpp"
#include "towertab/enumerate.hpp"
#include "towertab/flight.hpp"
#include "towertab/natural.hpp"
#include "towertab/perm.hpp"
#include "towertab/read.hpp"
#include "towertab/render.hpp"
#include "towertab/rothe.hpp"
#include "towertab/slide.hpp"

namespace towertab::cli {

namespace {

// Joins positional tokens into one input line; a single "-" token means
// "read the line from stdin" instead.
std::string gather(const std::vector<std::string>& tokens, std::istream& in) {
    if (tokens.size() == 1 && tokens[0] == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    std::string s;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) s += ' ';
        s += tokens[i];
    }
    return s + "\n";
}

int parse_int(const std::string& token) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw std::invalid_argument("expected an integer, got \"" + token + "\"");
    return value;
}

std::string slurp(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int cmd_check(const Word& w, std::ostream& out, std::ostream& err) {
    SRResult r = sr_algorithm(w);
    if (r.ok() != is_reduced_oracle(w)) {
        err << "internal error: sliding and the inversion oracle disagree\n";
        return 3;
    }
    if (r.ok()) {
        out << "REDUCED\n";
        return 0;
    }
    out << "NOT-REDUCED at index " << r.terminated_at << "\n";
    return 1;
}

int cmd_sr(const Word& w, std::ostream& out) {
    SRResult r = sr_algorithm(w);
    if (!r.ok()) {
        out << "NOT-REDUCED at index " << r.terminated_at << "\n";
        return 1;
    }
    out << "S:\n" << format_sliding(r.pair->sliding);
    out << "R:\n" << format_tableau(r.pair->recording);
    return 0;
}

std::string one_line_tableau(const TowerTableau& t) {
    std::string s;
    for (int c = 1; c <= t.shape().width(); ++c) {
        if (t.shape().height(c) == 0) continue;
        if (!s.empty()) s += ' ';
        s += std::to_string(c) + ":";
        const auto& col = t.labels()[c - 1];
        for (std::size_t j = 0; j < col.size(); ++j) {
            if (j) s += ',';
            s += std::to_string(col[j]);
        }
    }
    return s;
}

int cmd_enumerate(const TowerDiagram& shape, std::size_t cap, const std::string& fmt,
                  std::ostream& out) {
    std::vector<TowerTableau> ts = enumerate_stt(shape, cap);
    if (fmt == "lines") {
        for (const TowerTableau& t : ts) {
            Word w = reading_word(t);
            std::string ws;
            for (std::size_t i = 0; i < w.letters().size(); ++i) {
                if (i) ws += ' ';
                ws += std::to_string(w.letters()[i]);
            }
            out << ws << " | " << one_line_tableau(t) << "\n";
        }
    } else {
        for (const TowerTableau& t : ts) {
            out << format_tableau(t);
            out << "word: " << format_word(reading_word(t));
            out << "\n";
        }
        out << "count: " << ts.size() << "\n";
    }
    return 0;
}

int cmd_render(const std::string& kind, const std::vector<std::string>& rest,
               std::istream& in, std::ostream& out) {
    if (kind == "diagram") {
        out << render_diagram(parse_diagram(gather(rest, in)));
    } else if (kind == "flight") {
        // render flight COLUMN HEIGHT heights..., heights from stdin with -
        if (rest.size() < 3)
            throw CLI::ValidationError("render flight takes COLUMN HEIGHT then the heights");
        Cell cell{parse_int(rest[0]), parse_int(rest[1])};
        if (cell.column < 1 || cell.height < 0)
            throw std::invalid_argument("cell " + to_string(cell) + " is out of range");
        TowerDiagram d = parse_diagram(gather({rest.begin() + 2, rest.end()}, in));
        auto path = flight_path(d, cell);
        if (!path) {
            out << "NO-FLIGHT-PATH\n";
            return 1;
        }
        out << render_flight(d, *path);
    } else if (kind == "tableau") {
        if (rest.size() != 1) throw CLI::ValidationError("render tableau takes a file or -");
        out << render_tableau(parse_tableau(slurp(rest[0], in)));
    } else if (kind == "word") {
        SRResult r = sr_algorithm(parse_word(gather(rest, in)));
        if (!r.ok()) {
            out << "NOT-REDUCED at index " << r.terminated_at << "\n";
            return 1;
        }
        out << "S:\n" << render_sliding(r.pair->sliding);
        out << "R:\n" << render_tableau(r.pair->recording);
    } else if (kind == "rothe") {
        Permutation p = parse_permutation(gather(rest, in));
        out << render_rothe(rothe_diagram(p), p.degree());
    } else if (kind == "complete") {
        out << render_complete(complete_tableau(parse_permutation(gather(rest, in))));
    } else {
        throw CLI::ValidationError("unknown render kind: " + kind +
                                   " (expected diagram|flight|tableau|word|rothe|complete)");
    }
    return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"tower diagram calculus for reduced words of permutations"};
    app.require_subcommand(1);

    std::vector<std::string> tokens;
    std::vector<int> shape_heights, perm_line;
    std::size_t cap = 1'000'000;
    std::string format = "plain";
    std::string render_kind;

    auto* check = app.add_subcommand("check", "test a word for reducedness by sliding");
    check->add_option("letters", tokens, "word letters, or - for stdin")->required();

    auto* sr = app.add_subcommand("sr", "sliding and recording tableaux of a word");
    sr->add_option("letters", tokens, "word letters, or - for stdin")->required();

    auto* read = app.add_subcommand("read", "reading word of a standard tower tableau");
    read->add_option("file", tokens, "tableau file, or - for stdin")->required();

    auto* shape = app.add_subcommand("shape", "tower diagram of a reduced word");
    shape->add_option("letters", tokens, "word letters, or - for stdin")->required();

    auto* enumerate =
        app.add_subcommand("enumerate", "all standard tableaux of a shape and their words");
    auto* en_shape = enumerate->add_option("--shape", shape_heights, "tower heights");
    auto* en_perm = enumerate->add_option("--perm", perm_line, "permutation one-line form");
    enumerate->add_option("--cap", cap, "largest tableau count to enumerate");
    enumerate->add_option("--format", format, "plain|lines")
        ->check(CLI::IsMember({"plain", "lines"}));
    en_shape->excludes(en_perm);

    auto* natural = app.add_subcommand("natural", "natural word of a shape or permutation");
    auto* na_shape = natural->add_option("--shape", shape_heights, "tower heights");
    auto* na_perm = natural->add_option("--perm", perm_line, "permutation one-line form");
    na_shape->excludes(na_perm);

    auto* rothe = app.add_subcommand("rothe", "Rothe diagram of a permutation");
    rothe->add_option("perm", tokens, "one-line form, or - for stdin")->required();

    auto* rothify_cmd = app.add_subcommand("rothify", "Rothe diagram via the complete tableau");
    rothify_cmd->add_option("perm", tokens, "one-line form, or - for stdin")->required();

    auto* render = app.add_subcommand("render", "ASCII grid of an object");
    render->add_option("kind", render_kind, "diagram|flight|tableau|word|rothe|complete")
        ->required();
    render->add_option("args", tokens, "object input, or - for stdin");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));

        if (check->parsed()) return cmd_check(parse_word(gather(tokens, in)), out, err);
        if (sr->parsed()) return cmd_sr(parse_word(gather(tokens, in)), out);
        if (read->parsed()) {
            out << format_word(reading_word(parse_tableau(slurp(tokens[0], in))));
            return 0;
        }
        if (shape->parsed()) {
            SRResult r = sr_algorithm(parse_word(gather(tokens, in)));
            if (!r.ok()) {
                out << "NOT-REDUCED at index " << r.terminated_at << "\n";
                return 1;
            }
            out << format_diagram(r.pair->recording.shape());
            return 0;
        }
        if (enumerate->parsed()) {
            if (en_shape->count() == en_perm->count())
                throw CLI::RequiredError("exactly one of --shape and --perm");
            TowerDiagram d = en_shape->count()
                                 ? TowerDiagram(shape_heights)
                                 : shape_of(Permutation(perm_line));
            return cmd_enumerate(d, cap, format, out);
        }
        if (natural->parsed()) {
            if (na_shape->count() == na_perm->count())
                throw CLI::RequiredError("exactly one of --shape and --perm");
            TowerDiagram d = na_shape->count()
                                 ? TowerDiagram(shape_heights)
                                 : shape_of(Permutation(perm_line));
            out << format_word(natural_word(d));
            return 0;
        }
        if (rothe->parsed()) {
            out << format_rothe(rothe_diagram(parse_permutation(gather(tokens, in))));
            return 0;
        }
        if (rothify_cmd->parsed()) {
            out << format_rothe(rothify(parse_permutation(gather(tokens, in))));
            return 0;
        }
        if (render->parsed()) return cmd_render(render_kind, tokens, in, out);
        err << "error: no command\n";
        return 2;
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;  // help goes to out and exits 0
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::runtime_error& e) {  // parse, cap, file errors
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace towertab::cli
