#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "potc/diagram.hpp"
#include "potc/graph.hpp"

namespace potc {

enum class ConfigTag { A, B, C, D, E, F, G };
const char* to_string(ConfigTag t);

// One of the seven reducible local patterns, with concrete vertex bindings.
// Role names per tag:
//   A: u, v            B: v1,u1,v2,u2,v3,u3,v4   C/D: u1,u2,u3,u4
//   E/G: u1,u2,u3,u4,v F: u1,u2,u3,u4,v,x
struct Configuration {
    ConfigTag tag{};
    std::map<std::string, VertexId> bindings;

    VertexId at(const std::string& role) const { return bindings.at(role); }
    // Binding values in sorted-role order; comparison key within a tag.
    std::vector<VertexId> binding_tuple() const;
};

bool operator<(const Configuration& a, const Configuration& b);

// Direct pattern search. Returns the lexicographically least configuration
// under (tag, binding tuple), or absent if none matches.
std::optional<Configuration> find_configuration(const Graph& g);

// Re-checks every invariant of c.tag against g, independent of the search.
bool verify_configuration(const Graph& g, const Configuration& c);

// All co-crossed chord pairs: crossing chords on four consecutive boundary
// positions whose three connecting boundary edges are present.
std::vector<std::pair<EdgeKey, EdgeKey>> find_co_crossed_chords(const Diagram& d);

}  // namespace potc
