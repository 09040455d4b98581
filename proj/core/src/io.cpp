#include "ent/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace ent {

namespace {

struct Token {
    std::string text;
    int column; // 1-based
};

struct Line {
    int number = 0;
    std::vector<Token> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        Line line;
        line.number = number;
        std::string current;
        int start = 0;
        auto flush = [&](int end_col) {
            if (!current.empty()) {
                line.tokens.push_back({current, start});
                current.clear();
            }
            (void)end_col;
        };
        for (int i = 0; i < static_cast<int>(raw.size()); ++i) {
            const char c = raw[static_cast<std::size_t>(i)];
            if (c == '#') break;
            if (std::isspace(static_cast<unsigned char>(c))) {
                flush(i);
                continue;
            }
            if (c == '(' || c == ')' || c == '{' || c == '}' || c == ',') {
                flush(i);
                line.tokens.push_back({std::string(1, c), i + 1});
                continue;
            }
            if (current.empty()) start = i + 1;
            current.push_back(c);
        }
        flush(static_cast<int>(raw.size()));
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

class Parser {
public:
    Parser(const std::string& text, std::string filename)
        : lines_(tokenize(text)), file_(std::move(filename)) {}

    bool done() const { return pos_ >= lines_.size(); }
    const Line& peek() const { return lines_[pos_]; }
    const Line& next() { return lines_[pos_++]; }

    [[noreturn]] void fail(const Line& line, int column, const std::string& what) const {
        throw ParseError(file_, line.number, column, what);
    }

    const std::string& file() const { return file_; }

private:
    std::vector<Line> lines_;
    std::size_t pos_ = 0;
    std::string file_;
};

const Token& expect(Parser& p, const Line& line, std::size_t i, const char* what) {
    if (i >= line.tokens.size())
        p.fail(line, line.tokens.empty() ? 1 : line.tokens.back().column, std::string("expected ") + what);
    return line.tokens[i];
}

void expect_text(Parser& p, const Line& line, std::size_t i, const char* text) {
    const Token& t = expect(p, line, i, text);
    if (t.text != text)
        p.fail(line, t.column, std::string("expected '") + text + "', found '" + t.text + "'");
}

std::vector<std::string> label_list(Parser& p, const Line& line, std::size_t from, const char* what) {
    std::vector<std::string> labels;
    for (std::size_t i = from; i < line.tokens.size(); ++i) labels.push_back(line.tokens[i].text);
    if (labels.empty())
        p.fail(line, line.tokens.back().column, std::string("expected at least one ") + what);
    return labels;
}

bool starts_block(const Line& line) {
    const std::string& head = line.tokens.front().text;
    return head == "space" || head == "graph" || head == "weight" || head == "magma" ||
           head == "map";
}

// `gen (a b) (a c)` pairs, parentheses tokenized separately.
std::vector<std::pair<std::string, std::string>> pair_list(Parser& p, const Line& line,
                                                           std::size_t from) {
    std::vector<std::pair<std::string, std::string>> pairs;
    std::size_t i = from;
    while (i < line.tokens.size()) {
        expect_text(p, line, i, "(");
        const Token& a = expect(p, line, i + 1, "point label");
        const Token& b = expect(p, line, i + 2, "point label");
        expect_text(p, line, i + 3, ")");
        pairs.emplace_back(a.text, b.text);
        i += 4;
    }
    return pairs;
}

} // namespace

std::pair<long long, long long> parse_window(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw SemanticError("window '" + text + "' is not of the form lo:hi");
    try {
        const long long lo = std::stoll(text.substr(0, colon));
        const long long hi = std::stoll(text.substr(colon + 1));
        return {lo, hi};
    } catch (const std::exception&) {
        throw SemanticError("window '" + text + "' is not of the form lo:hi");
    }
}

ExtRat parse_ext_rat(const std::string& text) {
    if (text == "inf") return ExtRat::infinity();
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos) return ExtRat(Rat(std::stoll(text)));
        const long long num = std::stoll(text.substr(0, slash));
        const long long den = std::stoll(text.substr(slash + 1));
        if (den == 0) throw SemanticError("zero denominator in '" + text + "'");
        return ExtRat(Rat(num, den));
    } catch (const SemanticError&) {
        throw;
    } catch (const std::exception&) {
        throw SemanticError("'" + text + "' is not a rational value");
    }
}

void Workspace::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw SemanticError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    load_text(buffer.str(), path);
}

void Workspace::load_text(const std::string& text, const std::string& filename) {
    Parser p(text, filename);
    auto located = [&](const Line& line, const std::string& what) {
        return filename + ":" + std::to_string(line.number) + ": " + what;
    };

    while (!p.done()) {
        const Line header = p.next();
        const Token& kind = header.tokens.front();
        if (!starts_block(header))
            p.fail(header, kind.column,
                   "expected a block header (space, graph, weight, magma or map), found '" +
                       kind.text + "'");
        const std::string name = expect(p, header, 1, "block name").text;

        try {
            if (kind.text == "space") {
                const Line pts = p.next();
                expect_text(p, pts, 0, "points");
                Carrier carrier(label_list(p, pts, 1, "point label"));
                Entourage m = Entourage::diagonal(carrier);
                while (!p.done() && p.peek().tokens.front().text == "gen") {
                    const Line gen = p.next();
                    for (const auto& [a, b] : pair_list(p, gen, 1)) m.set(a, b);
                }
                if (!spaces_.emplace(name, Space(std::move(m))).second)
                    throw SemanticError("duplicate space '" + name + "'");
                space_order_.push_back(name);
            } else if (kind.text == "graph") {
                const Line vs = p.next();
                expect_text(p, vs, 0, "vertices");
                Carrier carrier(label_list(p, vs, 1, "vertex label"));
                Entourage edges(carrier);
                while (!p.done() && p.peek().tokens.front().text == "edge") {
                    const Line e = p.next();
                    const std::string a = expect(p, e, 1, "vertex label").text;
                    const std::string b = expect(p, e, 2, "vertex label").text;
                    edges.set(a, b);
                }
                if (!graphs_.emplace(name, DiGraph(carrier, std::move(edges))).second)
                    throw SemanticError("duplicate graph '" + name + "'");
                graph_order_.push_back(name);
            } else if (kind.text == "weight") {
                const Line pts = p.next();
                expect_text(p, pts, 0, "points");
                Carrier carrier(label_list(p, pts, 1, "point label"));
                const std::size_t n = carrier.size();
                std::vector<ExtRat> values(n * n, ExtRat::infinity());
                for (std::size_t i = 0; i < n; ++i) values[i * n + i] = ExtRat(0);
                while (!p.done() && p.peek().tokens.front().text == "d") {
                    const Line d = p.next();
                    const std::string a = expect(p, d, 1, "point label").text;
                    const std::string b = expect(p, d, 2, "point label").text;
                    expect_text(p, d, 3, "=");
                    const std::string v = expect(p, d, 4, "value").text;
                    values[carrier.index(a) * n + carrier.index(b)] = parse_ext_rat(v);
                }
                if (!weights_.emplace(name, WeightTable(carrier, std::move(values))).second)
                    throw SemanticError("duplicate weight '" + name + "'");
                weight_order_.push_back(name);
            } else if (kind.text == "magma") {
                const Line el = p.next();
                expect_text(p, el, 0, "elems");
                Carrier carrier(label_list(p, el, 1, "element label"));
                const std::size_t n = carrier.size();
                const Line tbl = p.next();
                expect_text(p, tbl, 0, "table");
                std::vector<std::size_t> op(n * n);
                for (std::size_t i = 0; i < n; ++i) {
                    if (p.done())
                        p.fail(tbl, 1, "truncated multiplication table");
                    const Line row = p.next();
                    if (row.tokens.size() != n)
                        p.fail(row, row.tokens.front().column,
                               "table row needs exactly " + std::to_string(n) + " entries");
                    for (std::size_t j = 0; j < n; ++j)
                        op[i * n + j] = carrier.index(row.tokens[j].text);
                }
                if (!magmas_.emplace(name, MagmaTable(carrier, std::move(op))).second)
                    throw SemanticError("duplicate magma '" + name + "'");
                magma_order_.push_back(name);
                while (!p.done() && p.peek().tokens.front().text == "ideal") {
                    const Line id = p.next();
                    const std::string ideal_name = expect(p, id, 1, "ideal name").text;
                    expect_text(p, id, 2, "=");
                    expect_text(p, id, 3, "{");
                    std::vector<std::string> members;
                    std::size_t i = 4;
                    while (i < id.tokens.size() && id.tokens[i].text != "}") {
                        if (id.tokens[i].text != ",") {
                            carrier.index(id.tokens[i].text); // unknown label check
                            members.push_back(id.tokens[i].text);
                        }
                        ++i;
                    }
                    expect_text(p, id, i, "}");
                    if (!ideals_[name].emplace(ideal_name, std::move(members)).second)
                        throw SemanticError("duplicate ideal '" + ideal_name + "' on magma '" +
                                            name + "'");
                }
            } else { // map
                expect_text(p, header, 2, ":");
                const std::string src = expect(p, header, 3, "source space name").text;
                expect_text(p, header, 4, "->");
                const std::string dst = expect(p, header, 5, "target space name").text;
                RawMap raw{src, dst, {}};
                while (!p.done() && !starts_block(p.peek())) {
                    const Line a = p.next();
                    const std::string from = expect(p, a, 0, "point label").text;
                    expect_text(p, a, 1, "->");
                    const std::string to = expect(p, a, 2, "point label").text;
                    raw.assignments.emplace_back(from, to);
                }
                if (!maps_.emplace(name, std::move(raw)).second)
                    throw SemanticError("duplicate map '" + name + "'");
                map_order_.push_back(name);
            }
        } catch (const SemanticError& err) {
            throw SemanticError(located(header, err.what()));
        } catch (const CapError& err) {
            throw CapError(located(header, err.what()));
        }
    }
}

namespace {

template <typename M>
const typename M::mapped_type& lookup(const M& m, const std::string& name, const char* kind) {
    auto it = m.find(name);
    if (it == m.end())
        throw SemanticError(std::string("unknown ") + kind + " '" + name + "'");
    return it->second;
}

const std::string& first_of(const std::vector<std::string>& order, const char* kind) {
    if (order.empty())
        throw SemanticError(std::string("no ") + kind + " was loaded");
    return order.front();
}

} // namespace

const Space& Workspace::space(const std::string& name) const { return lookup(spaces_, name, "space"); }
const WeightTable& Workspace::weight(const std::string& name) const { return lookup(weights_, name, "weight"); }
const DiGraph& Workspace::graph(const std::string& name) const { return lookup(graphs_, name, "graph"); }
const MagmaTable& Workspace::magma(const std::string& name) const { return lookup(magmas_, name, "magma"); }
const Workspace::RawMap& Workspace::raw_map(const std::string& name) const { return lookup(maps_, name, "map"); }

PointSet Workspace::ideal(const std::string& magma_name, const std::string& ideal_name) const {
    const MagmaTable& m = magma(magma_name);
    auto it = ideals_.find(magma_name);
    if (it == ideals_.end())
        throw SemanticError("magma '" + magma_name + "' has no ideals");
    return {m.carrier(), lookup(it->second, ideal_name, "ideal")};
}

SpaceMap Workspace::map(const std::string& name) const {
    const RawMap& raw = raw_map(name);
    return SpaceMap::from_labels(space(raw.src), space(raw.dst), raw.assignments);
}

std::string Workspace::first_space() const { return first_of(space_order_, "space"); }
std::string Workspace::first_map() const { return first_of(map_order_, "map"); }
std::string Workspace::first_magma() const { return first_of(magma_order_, "magma"); }
std::string Workspace::first_graph() const { return first_of(graph_order_, "graph"); }
std::string Workspace::first_weight() const { return first_of(weight_order_, "weight"); }

std::string serialize_space(const std::string& name, const Space& space) {
    std::ostringstream out;
    out << "space " << name << "\npoints";
    for (const auto& l : space.carrier().labels()) out << ' ' << l;
    out << '\n';
    const std::size_t n = space.carrier().size();
    for (std::size_t i = 0; i < n; ++i) {
        std::string line;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !space.max_ent().contains(i, j)) continue;
            line += " (" + space.carrier().label(i) + " " + space.carrier().label(j) + ")";
        }
        if (!line.empty()) out << "gen" << line << '\n';
    }
    return out.str();
}

std::string serialize_graph(const std::string& name, const DiGraph& graph) {
    std::ostringstream out;
    out << "graph " << name << "\nvertices";
    for (const auto& l : graph.vertices.labels()) out << ' ' << l;
    out << '\n';
    for (auto [i, j] : graph.edges.pairs())
        out << "edge " << graph.vertices.label(i) << ' ' << graph.vertices.label(j) << '\n';
    return out.str();
}

std::string serialize_weight(const std::string& name, const WeightTable& weight) {
    std::ostringstream out;
    out << "weight " << name << "\npoints";
    for (const auto& l : weight.carrier().labels()) out << ' ' << l;
    out << '\n';
    const std::size_t n = weight.carrier().size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || weight.at(i, j).is_inf()) continue;
            out << "d " << weight.carrier().label(i) << ' ' << weight.carrier().label(j)
                << " = " << to_string(weight.at(i, j)) << '\n';
        }
    return out.str();
}

std::string serialize_map(const std::string& name, const std::string& src,
                          const std::string& dst, const SpaceMap& map) {
    std::ostringstream out;
    out << "map " << name << " : " << src << " -> " << dst << '\n';
    for (std::size_t i = 0; i < map.src().carrier().size(); ++i)
        out << map.src().carrier().label(i) << " -> "
            << map.dst().carrier().label(map.apply(i)) << '\n';
    return out.str();
}

std::string dot_relation(const std::string& name, const Carrier& carrier, const Entourage& rel) {
    std::ostringstream out;
    out << "digraph \"" << name << "\" {\n";
    for (const auto& l : carrier.labels()) out << "  \"" << l << "\";\n";
    for (auto [i, j] : rel.pairs())
        out << "  \"" << carrier.label(i) << "\" -> \"" << carrier.label(j) << "\";\n";
    out << "}\n";
    return out.str();
}

std::string dot_graph(const std::string& name, const DiGraph& graph) {
    return dot_relation(name, graph.vertices, graph.edges);
}

} // namespace ent
