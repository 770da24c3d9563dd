#pragma once

#include <istream>
#include <string>

#include "potc/coloring.hpp"
#include "potc/diagram.hpp"

namespace potc {

// LST list file. Unlisted elements fall back to {1..k} when a 'default k'
// line is present; otherwise they stay unlisted (callers check coverage).
ListAssignment parse_lists(std::istream& in, const Graph& g);
ListAssignment parse_lists(const std::string& text, const Graph& g);
std::string print_lists(const ListAssignment& L, int palette);

// Coloring JSON: "v:<id>" / "e:<u>-<v>" keys, a "valid" flag and the
// reduction trace. Keys come out sorted, so output is byte-stable.
std::string coloring_to_json(const PartialColoring& phi, bool valid, const std::vector<TraceEntry>& trace);
PartialColoring coloring_from_json(const std::string& text);

// DOT export with boundary vertices pinned on one circle per block.
std::string export_dot(const Diagram& d, const PartialColoring* coloring);

}  // namespace potc
