#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "potc/diagram.hpp"
#include "potc/graph.hpp"
#include "potc/structure.hpp"

namespace potc {

using Color = int;

// Sorted, duplicate-free color set.
using ColorSet = std::vector<Color>;

ColorSet make_color_set(std::initializer_list<Color> cs);
ColorSet color_range(Color lo, Color hi);  // {lo, ..., hi}
bool set_contains(const ColorSet& s, Color c);
void set_insert(ColorSet& s, Color c);
void set_erase(ColorSet& s, Color c);
ColorSet set_minus(const ColorSet& a, const ColorSet& b);
ColorSet set_intersect(const ColorSet& a, const ColorSet& b);

// A member of VE(G): either a vertex or a (canonical) edge.
struct Element {
    enum class Kind { Vertex, Edge };
    Kind kind{Kind::Vertex};
    VertexId v{};
    EdgeKey e{};

    static Element vertex(VertexId v) { return Element{Kind::Vertex, v, {}}; }
    static Element edge(EdgeKey e) { return Element{Kind::Edge, 0, e}; }
    static Element edge(VertexId a, VertexId b) { return edge(make_edge(a, b)); }
    bool is_vertex() const { return kind == Kind::Vertex; }
    bool is_edge() const { return kind == Kind::Edge; }
    auto operator<=>(const Element&) const = default;
    std::string to_string() const;
};

std::vector<Element> all_elements(const Graph& g);  // vertices then edges, canonical order

struct ListAssignment {
    std::map<Element, ColorSet> lists;

    const ColorSet& at(Element x) const;
    bool has(Element x) const { return lists.count(x) > 0; }
    // least list size over VE(g); throws if an element has no list
    int min_list_size(const Graph& g) const;
    bool covers(const Graph& g) const;
};

ListAssignment uniform_lists(const Graph& g, int k);  // every list = {1..k}

struct PartialColoring {
    std::map<Element, Color> assigned;

    bool has(Element x) const { return assigned.count(x) > 0; }
    Color at(Element x) const { return assigned.at(x); }
    void set(Element x, Color c) { assigned[x] = c; }
    void erase(Element x) { assigned.erase(x); }
    size_t size() const { return assigned.size(); }
};

// L(x) minus the colors of assigned elements adjacent or incident to x.
ColorSet available_list(const Graph& g, const ListAssignment& L, const PartialColoring& phi, Element x);

struct VerifyReport {
    std::vector<Element> missing;                        // totality failures
    std::vector<std::pair<Element, Element>> conflicts;  // properness violations
    std::vector<Element> off_list;                       // colored outside the list
    bool valid{false};
};
VerifyReport verify_total_coloring(const Graph& g, const ListAssignment& L, const PartialColoring& phi);

// ------------------------------------------------------------------ errors

struct HypothesisViolation : std::runtime_error {
    explicit HypothesisViolation(const std::string& what) : std::runtime_error(what) {}
};
struct GadgetTooLarge : std::runtime_error {
    explicit GadgetTooLarge(const std::string& what) : std::runtime_error(what) {}
};
struct InternalInvariantError : std::runtime_error {
    explicit InternalInvariantError(const std::string& what) : std::runtime_error(what) {}
};

// ------------------------------------------------------------------ gadgets

inline constexpr size_t kMaxGadgetElements = 16;

struct GadgetProblem {
    std::vector<Element> uncolored;                       // canonical order
    std::map<Element, ColorSet> avail;                    // precomputed available lists
    std::vector<std::pair<Element, Element>> conflicts;   // both-uncolored pairs
};

// Conflict pairs (adjacent/incident in g) among the given uncolored elements.
std::vector<std::pair<Element, Element>> conflicts_for_uncolored(const Graph& g,
                                                                 const std::vector<Element>& uncolored);

GadgetProblem gadget_from_graph(const Graph& g, const ListAssignment& L, const PartialColoring& phi,
                                const std::vector<Element>& uncolored);

// Exhaustive backtracking with most-constrained-element-first ordering and
// forward checking. Deterministic; colors tried in ascending order.
std::optional<std::map<Element, Color>> solve_gadget(const GadgetProblem& p);

// Proper list edge coloring of a 4-cycle whose edges carry lists of size >= 2
// (even cycles are 2-edge-choosable). cycle[i] is adjacent to cycle[(i+1)%4].
std::map<EdgeKey, Color> color_cycle_edges_2lists(const std::vector<EdgeKey>& cycle,
                                                  const std::map<EdgeKey, ColorSet>& avail);

// -------------------------------------------------- extension hypotheses

// Available lists for the uncolored elements of each extension gadget,
// named by role. A checker returns the failing bound, or nullopt.
struct LemmaBLists {
    ColorSet u1v1, u3v4, v1v2, v3v4, v2, v3, v2v3, u1v2, u2v2, u2v3, u3v3;
};
std::optional<std::string> lemma_b_hypothesis_failure(const LemmaBLists& l);

struct LemmaDLists {
    ColorSet u2u4, u2, u4, u1u2, u2u3, u3u4, u1u4;
};
std::optional<std::string> lemma_d_hypothesis_failure(const LemmaDLists& l);

struct LemmaFLists {
    ColorSet u2u4, u2, u4, u2u3, u3u4, u1u2, u1u4, u3v, u3, v;
};
std::optional<std::string> lemma_f_hypothesis_failure(const LemmaFLists& l);

struct LemmaGLists {
    ColorSet u2, u4, u2u4, u1u2, u2u3, u3u4, u1u4, u1, u3, u1u3;
};
std::optional<std::string> lemma_g_hypothesis_failure(const LemmaGLists& l);

// ------------------------------------------------------------- extenders
//
// Each extends phi over the elements re-opened by its reduction, leaving all
// other colors untouched. g is the graph with the configuration present; phi
// colors everything outside the gadget. Throws HypothesisViolation when the
// stated bounds fail.

void extend_low_degree(const Graph& g, const ListAssignment& L, PartialColoring& phi, VertexId v);
void extend_config_a(const Graph& g, const ListAssignment& L, PartialColoring& phi, const Configuration& c);
void extend_config_b(const Graph& g, const ListAssignment& L, PartialColoring& phi, const Configuration& c);
void extend_config_c(const Graph& g, const ListAssignment& L, PartialColoring& phi, const Configuration& c);
void extend_config_d(const Graph& g, const ListAssignment& L, PartialColoring& phi, const Configuration& c);
void extend_config_e(const Graph& g, const ListAssignment& L, PartialColoring& phi, const Configuration& c);
void extend_config_f(const Graph& g, const ListAssignment& L, PartialColoring& phi, const Configuration& c);
void extend_config_g(const Graph& g, const ListAssignment& L, PartialColoring& phi, const Configuration& c);

// ---------------------------------------------------------------- engine

struct TraceEntry {
    std::string tag;  // "A".."G", "low-degree", "oracle-base", "oracle-full"
    std::map<std::string, VertexId> bindings;
};

struct EngineOptions {
    bool force_oracle_when_undersized = false;
    // Oracle fallback bound when find_configuration comes up empty on a
    // min-degree-2 remainder (non-PO input).
    int not_reducible_oracle_max_vertices = 10;
    std::uint64_t oracle_budget = 20'000'000;
};

struct ColoringOutcome {
    enum class Status { Success, UndersizedLists, NotColorable, NotReducible, BudgetExhausted, InternalError };
    Status status{Status::InternalError};
    PartialColoring coloring;
    std::vector<TraceEntry> trace;
    std::string message;
    std::vector<VertexId> irreducible;  // witness for NotReducible

    bool ok() const { return status == Status::Success; }
};

const char* to_string(ColoringOutcome::Status s);

ColoringOutcome color_list_total(const Graph& g, const ListAssignment& L, const EngineOptions& opt = {});
ColoringOutcome color_list_total(const Diagram& d, const ListAssignment& L, const EngineOptions& opt = {});

}  // namespace potc
