#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "potc/coloring.hpp"
#include "potc/diagram.hpp"

namespace potc {

struct InfeasibleParams : std::runtime_error {
    explicit InfeasibleParams(const std::string& what) : std::runtime_error(what) {}
};

struct GenParams {
    int n_vertices = 8;
    int n_blocks = 1;
    double chord_density = 0.5;
    double crossing_density = 0.5;
    double boundary_edge_density = 0.9;
    bool ensure_min_degree_2 = false;
    std::uint64_t seed = 0;
};

// Valid-by-construction random diagram: blocks glued at cut vertices, chords
// inserted one at a time so every edge stays crossed at most once.
Diagram gen_random_diagram(const GenParams& p);

// All single-block diagrams on boundary (0..n-1), deduplicated up to
// rotation/reflection of the boundary. n <= 9 enforced.
void enumerate_diagrams(int n, bool min_degree_2_only, const std::function<void(const Diagram&)>& yield);
std::vector<Diagram> enumerate_diagrams(int n, bool min_degree_2_only);

// Independent uniform k-subsets of {1..palette} per element.
ListAssignment gen_random_lists(const Graph& g, int k, int palette, std::uint64_t seed);

}  // namespace potc
