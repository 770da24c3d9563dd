#include "potc/diagram.hpp"

#include <algorithm>
#include <sstream>

namespace potc {

std::optional<int> Block::position_of(VertexId v) const {
    for (size_t i = 0; i < boundary.size(); ++i)
        if (boundary[i] == v) return static_cast<int>(i);
    return std::nullopt;
}

bool Block::is_boundary_pair(EdgeKey e) const {
    auto pu = position_of(e.u);
    auto pv = position_of(e.v);
    if (!pu || !pv) return false;
    int m = size();
    if (m < 2) return false;
    int d = std::abs(*pu - *pv);
    return d == 1 || d == m - 1;
}

std::vector<EdgeKey> Block::chords() const {
    std::vector<EdgeKey> out;
    for (const EdgeKey& e : edges)
        if (!is_boundary_pair(e)) out.push_back(e);
    return out;
}

std::vector<EdgeKey> Diagram::all_edges() const {
    std::vector<EdgeKey> out;
    for (const Block& b : blocks) out.insert(out.end(), b.edges.begin(), b.edges.end());
    std::sort(out.begin(), out.end());
    return out;
}

const char* to_string(IntervalClass c) {
    switch (c) {
        case IntervalClass::NonEdge: return "non-edge";
        case IntervalClass::Path: return "path";
        case IntervalClass::Subpath: return "subpath";
    }
    return "?";
}

// ---------------------------------------------------------------- parsing

namespace {

std::vector<std::pair<int, std::string>> logical_lines(std::istream& in) {
    std::vector<std::pair<int, std::string>> out;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::string piece;
        std::stringstream parts(raw);
        while (std::getline(parts, piece, ';')) {
            if (piece.find_first_not_of(" \t\r") == std::string::npos) continue;
            out.emplace_back(line_no, piece);
        }
    }
    return out;
}

struct Tokens {
    int line;
    std::vector<std::string> toks;
    const std::string& keyword() const { return toks[0]; }
    int expect_int(size_t idx, const char* what) const {
        if (idx >= toks.size()) throw ParseError(line, std::string("missing ") + what);
        try {
            size_t used = 0;
            int v = std::stoi(toks[idx], &used);
            if (used != toks[idx].size()) throw std::invalid_argument("");
            return v;
        } catch (const std::exception&) {
            throw ParseError(line, std::string("expected integer for ") + what + ", got '" + toks[idx] + "'");
        }
    }
};

Tokens tokenize(int line, const std::string& text) {
    Tokens t{line, {}};
    std::stringstream ss(text);
    std::string tok;
    while (ss >> tok) t.toks.push_back(tok);
    return t;
}

}  // namespace

Diagram parse_diagram(std::istream& in) {
    auto lines = logical_lines(in);
    if (lines.empty()) throw ParseError(1, "empty input, expected 'pod 1' header");
    size_t idx = 0;
    auto next = [&]() -> Tokens { return tokenize(lines[idx].first, lines[idx].second); };

    Tokens header = next();
    if (header.toks.size() != 2 || header.keyword() != "pod" || header.toks[1] != "1")
        throw ParseError(header.line, "expected 'pod 1' header");
    ++idx;
    if (idx >= lines.size()) throw ParseError(header.line, "missing 'vertices <n>' line");
    Tokens vline = next();
    if (vline.keyword() != "vertices" || vline.toks.size() != 2)
        throw ParseError(vline.line, "expected 'vertices <n>'");
    int n = vline.expect_int(1, "vertex count");
    if (n < 0) throw ParseError(vline.line, "vertex count must be non-negative");
    ++idx;

    Diagram d;
    d.n_vertices = n;
    struct PendingEdge {
        int line;
        EdgeKey e;
        int inblock;  // -1 when unspecified
    };
    std::vector<PendingEdge> pending;

    for (; idx < lines.size(); ++idx) {
        Tokens t = next();
        if (t.keyword() == "block") {
            int k = t.expect_int(1, "boundary length");
            if (k < 1) throw ParseError(t.line, "block boundary must have at least one vertex");
            if (t.toks.size() != static_cast<size_t>(k) + 2)
                throw ParseError(t.line, "block declares " + std::to_string(k) + " boundary vertices but lists " +
                                             std::to_string(static_cast<int>(t.toks.size()) - 2));
            Block b;
            b.id = static_cast<int>(d.blocks.size());
            std::set<VertexId> seen;
            for (int i = 0; i < k; ++i) {
                int v = t.expect_int(static_cast<size_t>(i) + 2, "boundary vertex");
                if (v < 0 || v >= n) throw ParseError(t.line, "vertex id " + std::to_string(v) + " out of range");
                if (!seen.insert(v).second)
                    throw ParseError(t.line, "repeated vertex " + std::to_string(v) + " on block boundary");
                b.boundary.push_back(v);
            }
            d.blocks.push_back(std::move(b));
        } else if (t.keyword() == "edge") {
            if (t.toks.size() != 3 && !(t.toks.size() == 5 && t.toks[3] == "inblock"))
                throw ParseError(t.line, "expected 'edge <u> <v>' or 'edge <u> <v> inblock <b>'");
            int u = t.expect_int(1, "edge endpoint");
            int v = t.expect_int(2, "edge endpoint");
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw ParseError(t.line, "edge endpoint out of range");
            if (u == v) throw ParseError(t.line, "self-loop rejected");
            int inblock = -1;
            if (t.toks.size() == 5) inblock = t.expect_int(4, "block index");
            pending.push_back({t.line, make_edge(u, v), inblock});
        } else {
            throw ParseError(t.line, "unknown directive '" + t.keyword() + "'");
        }
    }

    std::set<EdgeKey> placed;
    for (const PendingEdge& pe : pending) {
        if (!placed.insert(pe.e).second)
            throw ParseError(pe.line, "duplicate edge " + std::to_string(pe.e.u) + " " + std::to_string(pe.e.v));
        std::vector<int> hosts;
        for (const Block& b : d.blocks)
            if (b.position_of(pe.e.u) && b.position_of(pe.e.v)) hosts.push_back(b.id);
        if (pe.inblock >= 0) {
            if (pe.inblock >= static_cast<int>(d.blocks.size()))
                throw ParseError(pe.line, "inblock index out of range");
            if (std::find(hosts.begin(), hosts.end(), pe.inblock) == hosts.end())
                throw ParseError(pe.line, "edge endpoints are not on the boundary of block " +
                                              std::to_string(pe.inblock));
            d.blocks[static_cast<size_t>(pe.inblock)].edges.insert(pe.e);
        } else if (hosts.empty()) {
            throw ParseError(pe.line, "edge endpoints lie on no common block boundary");
        } else if (hosts.size() > 1) {
            throw ParseError(pe.line, "edge endpoints shared by several blocks, add 'inblock <b>'");
        } else {
            d.blocks[static_cast<size_t>(hosts[0])].edges.insert(pe.e);
        }
    }
    return d;
}

Diagram parse_diagram(const std::string& text) {
    std::istringstream ss(text);
    return parse_diagram(ss);
}

// ---------------------------------------------------------- canonical form

namespace {

std::vector<VertexId> canonical_boundary(const std::vector<VertexId>& boundary) {
    int m = static_cast<int>(boundary.size());
    if (m <= 1) return boundary;
    int least = 0;
    for (int i = 1; i < m; ++i)
        if (boundary[static_cast<size_t>(i)] < boundary[static_cast<size_t>(least)]) least = i;
    std::vector<VertexId> fwd(static_cast<size_t>(m)), rev(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        fwd[static_cast<size_t>(i)] = boundary[static_cast<size_t>((least + i) % m)];
        rev[static_cast<size_t>(i)] = boundary[static_cast<size_t>(((least - i) % m + m) % m)];
    }
    return rev < fwd ? rev : fwd;
}

}  // namespace

Diagram canonical_diagram(const Diagram& d) {
    Diagram out;
    out.n_vertices = d.n_vertices;
    out.blocks = d.blocks;
    for (Block& b : out.blocks) b.boundary = canonical_boundary(b.boundary);
    std::sort(out.blocks.begin(), out.blocks.end(), [](const Block& a, const Block& b) {
        return a.boundary < b.boundary;
    });
    for (size_t i = 0; i < out.blocks.size(); ++i) out.blocks[i].id = static_cast<int>(i);
    return out;
}

std::string print_diagram(const Diagram& d) {
    Diagram c = canonical_diagram(d);
    std::ostringstream out;
    out << "pod 1\n";
    out << "vertices " << c.n_vertices << "\n";
    for (const Block& b : c.blocks) {
        out << "block " << b.size();
        for (VertexId v : b.boundary) out << " " << v;
        out << "\n";
    }
    std::vector<std::pair<EdgeKey, int>> edges;
    for (const Block& b : c.blocks)
        for (const EdgeKey& e : b.edges) edges.emplace_back(e, b.id);
    std::sort(edges.begin(), edges.end());
    for (const auto& [e, block_id] : edges) {
        out << "edge " << e.u << " " << e.v;
        int hosts = 0;
        for (const Block& b : c.blocks)
            if (b.position_of(e.u) && b.position_of(e.v)) ++hosts;
        if (hosts > 1) out << " inblock " << block_id;
        out << "\n";
    }
    return out.str();
}

// ------------------------------------------------------------- operations

bool chords_cross(const Block& b, EdgeKey e1, EdgeKey e2) {
    if (!b.has_edge(e1) || !b.has_edge(e2)) throw std::invalid_argument("edge not in block");
    if (e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v) return false;
    int m = b.size();
    auto pos = [&](VertexId v) {
        auto p = b.position_of(v);
        if (!p) throw std::invalid_argument("edge endpoint not on boundary");
        return *p;
    };
    int a = pos(e1.u), c = pos(e1.v);
    if (a > c) std::swap(a, c);
    // count endpoints of e2 strictly inside the clockwise walk a -> c.
    int inside = 0;
    for (int p : {pos(e2.u), pos(e2.v)}) {
        (void)m;
        if (p > a && p < c) ++inside;
    }
    return inside == 1;
}

ValidationReport validate_diagram(const Diagram& d) {
    ValidationReport rep;
    auto problem = [&](const std::string& msg) { rep.problems.push_back(msg); };

    std::map<EdgeKey, int> owners;
    for (const Block& b : d.blocks) {
        std::set<VertexId> seen;
        for (VertexId v : b.boundary) {
            if (v < 0 || v >= d.n_vertices)
                problem("block " + std::to_string(b.id) + ": vertex " + std::to_string(v) + " out of range");
            if (!seen.insert(v).second)
                problem("block " + std::to_string(b.id) + ": repeated boundary vertex " + std::to_string(v));
        }
        for (const EdgeKey& e : b.edges) {
            if (!b.position_of(e.u) || !b.position_of(e.v))
                problem("block " + std::to_string(b.id) + ": edge " + std::to_string(e.u) + "-" +
                        std::to_string(e.v) + " has an endpoint off the boundary");
            owners[e] += 1;
        }
    }
    for (const auto& [e, count] : owners)
        if (count > 1)
            problem("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " appears in " +
                    std::to_string(count) + " blocks");

    for (size_t i = 0; i < d.blocks.size(); ++i) {
        for (size_t j = i + 1; j < d.blocks.size(); ++j) {
            std::set<VertexId> bi(d.blocks[i].boundary.begin(), d.blocks[i].boundary.end());
            int shared = 0;
            for (VertexId v : d.blocks[j].boundary) shared += bi.count(v) ? 1 : 0;
            if (shared > 1)
                problem("blocks " + std::to_string(d.blocks[i].id) + " and " + std::to_string(d.blocks[j].id) +
                        " share " + std::to_string(shared) + " vertices");
        }
    }

    for (const Block& b : d.blocks) {
        std::vector<EdgeKey> ch = b.chords();
        std::map<EdgeKey, int> counts;
        for (const EdgeKey& e : b.edges) counts[e] = 0;
        for (size_t i = 0; i < ch.size(); ++i) {
            for (size_t j = i + 1; j < ch.size(); ++j) {
                if (chords_cross(b, ch[i], ch[j])) {
                    counts[ch[i]] += 1;
                    counts[ch[j]] += 1;
                }
            }
        }
        for (const auto& [e, c] : counts) {
            rep.crossing_counts[e] = c;
            if (c > 1)
                problem("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " crossed " +
                        std::to_string(c) + " times in block " + std::to_string(b.id));
        }
    }

    rep.valid = rep.problems.empty();
    return rep;
}

Graph to_graph(const Diagram& d) {
    Graph g(d.n_vertices);
    for (const EdgeKey& e : d.all_edges()) g.add_edge(e.u, e.v);
    return g;
}

IntervalClass classify_interval(const Block& b, int i, int j) {
    int m = b.size();
    if (i < 0 || j < 0 || i >= m || j >= m) throw std::out_of_range("boundary position out of range");
    if (i == j) throw std::invalid_argument("interval endpoints must differ");
    auto step_edge = [&](int p) {
        return make_edge(b.boundary[static_cast<size_t>(p)], b.boundary[static_cast<size_t>((p + 1) % m)]);
    };
    int len = ((j - i) % m + m) % m;
    if (len == 1) return b.has_edge(step_edge(i)) ? IntervalClass::Path : IntervalClass::NonEdge;
    for (int k = 0; k < len; ++k)
        if (!b.has_edge(step_edge((i + k) % m))) return IntervalClass::Subpath;
    return IntervalClass::Path;
}

bool chord_contained(const Block& b, EdgeKey outer, EdgeKey inner) {
    auto span = [&](EdgeKey e) {
        if (!b.has_edge(e)) throw std::invalid_argument("not a chord of the block");
        int a = *b.position_of(e.u);
        int c = *b.position_of(e.v);
        if (a > c) std::swap(a, c);
        // containment is positional: only consecutive stored positions are
        // excluded, so the wrap pair counts as a chord here
        if (c - a == 1) throw std::invalid_argument("not a chord of the block");
        return std::pair<int, int>{a, c};
    };
    auto [i, j] = span(outer);
    auto [k, l] = span(inner);
    return i <= k && k <= l && l <= j;
}

}  // namespace potc
