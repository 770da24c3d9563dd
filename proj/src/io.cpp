#include "potc/io.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace potc {

ListAssignment parse_lists(std::istream& in, const Graph& g) {
    ListAssignment L;
    int palette = 0;
    int fallback = 0;
    std::string raw;
    int line_no = 0;
    bool header_seen = false;

    auto parse_colors = [&](std::istringstream& ss) {
        ColorSet cs;
        Color c;
        while (ss >> c) {
            if (c < 1) throw ParseError(line_no, "colors must be positive");
            if (palette > 0 && c > palette) throw ParseError(line_no, "color exceeds declared palette");
            set_insert(cs, c);
        }
        if (cs.empty()) throw ParseError(line_no, "empty color list");
        return cs;
    };

    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ss(raw);
        std::string kw;
        if (!(ss >> kw)) continue;
        if (!header_seen) {
            std::string ver;
            if (kw != "lst" || !(ss >> ver) || ver != "1") throw ParseError(line_no, "expected 'lst 1' header");
            header_seen = true;
            continue;
        }
        if (kw == "palette") {
            if (!(ss >> palette) || palette < 1) throw ParseError(line_no, "expected 'palette <m>'");
        } else if (kw == "default") {
            if (!(ss >> fallback) || fallback < 1) throw ParseError(line_no, "expected 'default <k>'");
        } else if (kw == "v") {
            int id;
            if (!(ss >> id)) throw ParseError(line_no, "expected 'v <id> <colors...>'");
            if (id < 0 || id >= g.n_vertices()) throw ParseError(line_no, "vertex id out of range");
            Element x = Element::vertex(id);
            if (L.has(x)) throw ParseError(line_no, "duplicate list for " + x.to_string());
            L.lists[x] = parse_colors(ss);
        } else if (kw == "e") {
            int u, v;
            if (!(ss >> u >> v)) throw ParseError(line_no, "expected 'e <u> <v> <colors...>'");
            if (!g.has_edge(u, v)) throw ParseError(line_no, "edge not present in the diagram");
            Element x = Element::edge(u, v);
            if (L.has(x)) throw ParseError(line_no, "duplicate list for " + x.to_string());
            L.lists[x] = parse_colors(ss);
        } else {
            throw ParseError(line_no, "unknown directive '" + kw + "'");
        }
    }
    if (!header_seen) throw ParseError(1, "empty input, expected 'lst 1' header");

    if (fallback > 0) {
        ColorSet def = color_range(1, fallback);
        for (const Element& x : all_elements(g))
            if (!L.has(x)) L.lists[x] = def;
    }
    return L;
}

ListAssignment parse_lists(const std::string& text, const Graph& g) {
    std::istringstream ss(text);
    return parse_lists(ss, g);
}

std::string print_lists(const ListAssignment& L, int palette) {
    std::ostringstream out;
    out << "lst 1\n";
    if (palette > 0) out << "palette " << palette << "\n";
    for (const auto& [x, cs] : L.lists) {
        if (x.is_vertex())
            out << "v " << x.v;
        else
            out << "e " << x.e.u << " " << x.e.v;
        for (Color c : cs) out << " " << c;
        out << "\n";
    }
    return out.str();
}

std::string coloring_to_json(const PartialColoring& phi, bool valid, const std::vector<TraceEntry>& trace) {
    nlohmann::json j;
    for (const auto& [x, c] : phi.assigned) j[x.to_string()] = c;
    j["valid"] = valid;
    nlohmann::json arr = nlohmann::json::array();
    for (const TraceEntry& t : trace) {
        nlohmann::json rec;
        rec["tag"] = t.tag;
        nlohmann::json b;
        for (const auto& [role, v] : t.bindings) b[role] = v;
        rec["bindings"] = std::move(b);
        arr.push_back(std::move(rec));
    }
    j["algorithm_trace"] = std::move(arr);
    return j.dump(2) + "\n";
}

PartialColoring coloring_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    PartialColoring phi;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        if (key.rfind("v:", 0) == 0) {
            phi.set(Element::vertex(std::stoi(key.substr(2))), it.value().get<Color>());
        } else if (key.rfind("e:", 0) == 0) {
            auto dash = key.find('-', 2);
            if (dash == std::string::npos) throw std::invalid_argument("bad edge key: " + key);
            int u = std::stoi(key.substr(2, dash - 2));
            int v = std::stoi(key.substr(dash + 1));
            phi.set(Element::edge(u, v), it.value().get<Color>());
        }
        // "valid" and "algorithm_trace" are advisory on input
    }
    return phi;
}

std::string export_dot(const Diagram& d, const PartialColoring* coloring) {
    Diagram c = canonical_diagram(d);
    std::ostringstream out;
    out << "graph pod {\n";
    out << "  layout=neato;\n";
    out << "  node [shape=circle];\n";
    std::vector<char> placed(static_cast<size_t>(c.n_vertices), 0);
    double cx = 0.0;
    for (const Block& b : c.blocks) {
        int m = b.size();
        for (int i = 0; i < m; ++i) {
            VertexId v = b.boundary[static_cast<size_t>(i)];
            if (placed[static_cast<size_t>(v)]) continue;
            placed[static_cast<size_t>(v)] = 1;
            double ang = 2.0 * M_PI * i / std::max(1, m);
            double x = cx + std::cos(ang);
            double y = std::sin(ang);
            out << "  \"" << v << "\" [pos=\"" << x << "," << y << "!\"";
            if (coloring && coloring->has(Element::vertex(v)))
                out << ", label=\"" << v << " (" << coloring->at(Element::vertex(v)) << ")\"";
            out << "];\n";
        }
        cx += 2.6;
    }
    for (VertexId v = 0; v < c.n_vertices; ++v)
        if (!placed[static_cast<size_t>(v)]) out << "  \"" << v << "\";\n";
    for (const EdgeKey& e : c.all_edges()) {
        out << "  \"" << e.u << "\" -- \"" << e.v << "\"";
        if (coloring && coloring->has(Element::edge(e)))
            out << " [label=\"" << coloring->at(Element::edge(e)) << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace potc
