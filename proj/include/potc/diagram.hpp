#pragma once

#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "potc/graph.hpp"

namespace potc {

// One embedding unit of a pseudo-outerplanar diagram: a clockwise boundary
// sequence plus the edges drawn inside its disk.
struct Block {
    int id{};
    std::vector<VertexId> boundary;
    std::set<EdgeKey> edges;

    int size() const { return static_cast<int>(boundary.size()); }
    std::optional<int> position_of(VertexId v) const;
    bool has_edge(EdgeKey e) const { return edges.count(e) > 0; }
    // True iff the endpoints sit on cyclically adjacent boundary positions.
    bool is_boundary_pair(EdgeKey e) const;
    bool is_chord(EdgeKey e) const { return has_edge(e) && !is_boundary_pair(e); }
    std::vector<EdgeKey> chords() const;
};

struct Diagram {
    int n_vertices{};
    std::vector<Block> blocks;
    std::vector<EdgeKey> all_edges() const;
};

enum class IntervalClass { NonEdge, Path, Subpath };
const char* to_string(IntervalClass c);

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

// POD format, line oriented. ';' is accepted as a line separator so a whole
// diagram can travel on one line. '#' starts a comment.
Diagram parse_diagram(std::istream& in);
Diagram parse_diagram(const std::string& text);

// Canonical serialization: blocks sorted by least boundary id, boundaries
// rotated/oriented canonically, edges sorted.
Diagram canonical_diagram(const Diagram& d);
std::string print_diagram(const Diagram& d);

// Crossing of two chords by cyclic interleaving of their boundary positions.
bool chords_cross(const Block& b, EdgeKey e1, EdgeKey e2);

struct ValidationReport {
    bool valid{false};
    std::vector<std::string> problems;
    std::map<EdgeKey, int> crossing_counts;
};
ValidationReport validate_diagram(const Diagram& d);

Graph to_graph(const Diagram& d);

// Classify the boundary interval from position i to position j (clockwise).
IntervalClass classify_interval(const Block& b, int i, int j);

// Containment of chords per positions on the stored boundary order:
// outer (i,j) contains inner (k,l) iff i <= k <= l <= j.
bool chord_contained(const Block& b, EdgeKey outer, EdgeKey inner);

}  // namespace potc
