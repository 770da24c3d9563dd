#pragma once

#include <cstdint>

#include "potc/coloring.hpp"
#include "potc/graph.hpp"

namespace potc {

struct OracleBudget {
    std::uint64_t max_nodes = 20'000'000;
    double timeout_hint_seconds = 0.0;  // advisory only
};

// Exact reference search: plain chronological backtracking over VE(G) in
// canonical order (vertices then edges), colors tried ascending, with
// forward checking. Deterministic.
struct OracleResult {
    enum class Status { Found, NotColorable, BudgetExhausted };
    Status status{Status::NotColorable};
    PartialColoring coloring;  // populated when Found
    std::uint64_t nodes{0};
};
OracleResult brute_force_l_total(const Graph& g, const ListAssignment& L, OracleBudget b = {});

struct ChiResult {
    enum class Status { Ok, BudgetExhausted };
    Status status{Status::Ok};
    int chi{0};
    std::uint64_t nodes{0};
};
// Least k with a total coloring from {1..k}; search starts at Delta+1.
ChiResult total_chromatic_number(const Graph& g, OracleBudget b = {});

struct ChoosabilityResult {
    enum class Verdict { NoCounterexampleFound, CounterexampleFound, BudgetExhausted };
    Verdict verdict{Verdict::NoCounterexampleFound};
    int failing_trial{-1};
    ListAssignment counterexample;  // populated when a trial refutes
};
// Samples seeded random k-lists (per-trial seed = seed + trial index) and
// hunts for a refutation; never attempts exhaustive list enumeration.
ChoosabilityResult sample_choosability(const Graph& g, int k, int trials, int palette, std::uint64_t seed,
                                       OracleBudget b = {});

}  // namespace potc
