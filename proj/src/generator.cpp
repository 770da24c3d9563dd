#include "potc/generator.hpp"

#include <algorithm>

#include "potc/rng.hpp"

namespace potc {

namespace {

// Position pair interleaving on a cycle of length m; shared endpoints never cross.
bool positions_cross(std::pair<int, int> a, std::pair<int, int> b) {
    if (a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second) return false;
    auto inside = [&](int p) { return p > a.first && p < a.second; };
    return inside(b.first) != inside(b.second);
}

std::vector<std::pair<int, int>> chord_candidates(int m) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < m; ++i)
        for (int j = i + 2; j < m; ++j) {
            if (i == 0 && j == m - 1) continue;  // cyclically adjacent
            out.emplace_back(i, j);
        }
    return out;
}

}  // namespace

Diagram gen_random_diagram(const GenParams& p) {
    if (p.n_vertices < 1) throw InfeasibleParams("need at least one vertex");
    if (p.n_blocks < 1) throw InfeasibleParams("need at least one block");
    for (double d : {p.chord_density, p.crossing_density, p.boundary_edge_density})
        if (d < 0.0 || d > 1.0) throw InfeasibleParams("densities must lie in [0,1]");

    Rng rng(p.seed);
    int n = p.n_vertices;
    int b = p.n_blocks;
    int min_size = p.ensure_min_degree_2 ? 3 : 2;

    Diagram d;
    d.n_vertices = n;

    if (n == 1) {
        if (b != 1 || p.ensure_min_degree_2) throw InfeasibleParams("a single vertex admits one edgeless block");
        Block blk;
        blk.id = 0;
        blk.boundary = {0};
        d.blocks.push_back(blk);
        return d;
    }
    if (b > 1 && (n - 1) / (min_size - 1) < b)
        throw InfeasibleParams("too many blocks for " + std::to_string(n) + " vertices");
    if (n < min_size) throw InfeasibleParams("too few vertices for the requested minimum degree");

    std::vector<int> sizes(static_cast<size_t>(b), min_size);
    int extra = (n - 1 + b) - min_size * b;
    if (extra < 0) throw InfeasibleParams("too many blocks for " + std::to_string(n) + " vertices");
    for (int i = 0; i < extra; ++i) sizes[static_cast<size_t>(rng.below(b))] += 1;

    int next_id = 0;
    for (int bi = 0; bi < b; ++bi) {
        Block blk;
        blk.id = bi;
        int m = sizes[static_cast<size_t>(bi)];
        if (bi == 0) {
            for (int i = 0; i < m; ++i) blk.boundary.push_back(next_id++);
        } else {
            blk.boundary.push_back(rng.below(next_id));  // glue at a cut vertex
            for (int i = 1; i < m; ++i) blk.boundary.push_back(next_id++);
        }

        if (m == 2) {
            blk.edges.insert(make_edge(blk.boundary[0], blk.boundary[1]));
        } else {
            for (int i = 0; i < m; ++i) {
                if (!rng.chance(p.boundary_edge_density)) continue;
                blk.edges.insert(make_edge(blk.boundary[static_cast<size_t>(i)],
                                           blk.boundary[static_cast<size_t>((i + 1) % m)]));
            }
            if (m >= 4) {
                auto candidates = chord_candidates(m);
                rng.shuffle(candidates);
                std::vector<std::pair<int, int>> chords;
                std::vector<int> crossings;
                for (const auto& cand : candidates) {
                    if (!rng.chance(p.chord_density)) continue;
                    std::vector<size_t> hit;
                    for (size_t i = 0; i < chords.size(); ++i)
                        if (positions_cross(cand, chords[i])) hit.push_back(i);
                    bool ok = false;
                    if (hit.empty()) {
                        ok = true;
                    } else if (hit.size() == 1 && crossings[hit[0]] == 0 && rng.chance(p.crossing_density)) {
                        crossings[hit[0]] = 1;
                        ok = true;
                    }
                    if (ok) {
                        chords.push_back(cand);
                        crossings.push_back(hit.empty() ? 0 : 1);
                    }
                }
                for (const auto& [i, j] : chords)
                    blk.edges.insert(make_edge(blk.boundary[static_cast<size_t>(i)],
                                               blk.boundary[static_cast<size_t>(j)]));
            }
        }
        d.blocks.push_back(std::move(blk));
    }

    if (p.ensure_min_degree_2) {
        std::vector<int> deg(static_cast<size_t>(n), 0);
        for (const EdgeKey& e : d.all_edges()) {
            deg[static_cast<size_t>(e.u)] += 1;
            deg[static_cast<size_t>(e.v)] += 1;
        }
        for (Block& blk : d.blocks) {
            int m = blk.size();
            if (m < 3) continue;
            for (int i = 0; i < m; ++i) {
                VertexId v = blk.boundary[static_cast<size_t>(i)];
                for (int side : {-1, 1}) {
                    if (deg[static_cast<size_t>(v)] >= 2) break;
                    VertexId w = blk.boundary[static_cast<size_t>(((i + side) % m + m) % m)];
                    EdgeKey e = make_edge(v, w);
                    if (blk.edges.insert(e).second) {
                        deg[static_cast<size_t>(e.u)] += 1;
                        deg[static_cast<size_t>(e.v)] += 1;
                    }
                }
            }
        }
    }

    if (!validate_diagram(d).valid) throw std::logic_error("generator produced an invalid diagram");
    return d;
}

namespace {

using PosEdge = std::pair<int, int>;

struct Enumerator {
    int n;
    bool min_deg2;
    const std::function<void(const Diagram&)>& yield;
    std::vector<PosEdge> candidates;
    std::vector<PosEdge> chosen;
    std::vector<int> crossings;

    // lexicographically least encoding over the dihedral group fixes the
    // canonical representative of each rotation/reflection orbit
    bool is_canonical(std::vector<PosEdge> all_edges) const {
        std::sort(all_edges.begin(), all_edges.end());
        for (int refl = 0; refl < 2; ++refl) {
            for (int rot = 0; rot < n; ++rot) {
                if (refl == 0 && rot == 0) continue;
                std::vector<PosEdge> mapped;
                mapped.reserve(all_edges.size());
                for (const auto& [a, b] : all_edges) {
                    int x = refl ? ((n - a) % n + rot) % n : (a + rot) % n;
                    int y = refl ? ((n - b) % n + rot) % n : (b + rot) % n;
                    mapped.emplace_back(std::min(x, y), std::max(x, y));
                }
                std::sort(mapped.begin(), mapped.end());
                if (mapped < all_edges) return false;
            }
        }
        return true;
    }

    void emit_with_boundary() {
        int n_bedges = n >= 3 ? n : (n == 2 ? 1 : 0);
        for (int mask = 0; mask < (1 << n_bedges); ++mask) {
            std::vector<PosEdge> all_edges = chosen;
            for (int i = 0; i < n_bedges; ++i)
                if (mask & (1 << i)) all_edges.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
            if (min_deg2) {
                std::vector<int> deg(static_cast<size_t>(n), 0);
                for (const auto& [a, b] : all_edges) {
                    deg[static_cast<size_t>(a)] += 1;
                    deg[static_cast<size_t>(b)] += 1;
                }
                if (*std::min_element(deg.begin(), deg.end()) < 2) continue;
            }
            if (!is_canonical(all_edges)) continue;
            Diagram d;
            d.n_vertices = n;
            Block blk;
            blk.id = 0;
            for (int v = 0; v < n; ++v) blk.boundary.push_back(v);
            for (const auto& [a, b] : all_edges) blk.edges.insert(make_edge(a, b));
            d.blocks.push_back(std::move(blk));
            yield(d);
        }
    }

    void recurse(size_t idx) {
        if (idx == candidates.size()) {
            emit_with_boundary();
            return;
        }
        recurse(idx + 1);
        const PosEdge& cand = candidates[idx];
        std::vector<size_t> hit;
        for (size_t i = 0; i < chosen.size(); ++i)
            if (positions_cross(cand, chosen[i])) hit.push_back(i);
        bool legal = hit.empty() || (hit.size() == 1 && crossings[hit[0]] == 0);
        if (!legal) return;
        chosen.push_back(cand);
        crossings.push_back(hit.empty() ? 0 : 1);
        if (!hit.empty()) crossings[hit[0]] = 1;
        recurse(idx + 1);
        if (!hit.empty()) crossings[hit[0]] = 0;
        chosen.pop_back();
        crossings.pop_back();
    }
};

}  // namespace

void enumerate_diagrams(int n, bool min_degree_2_only, const std::function<void(const Diagram&)>& yield) {
    if (n < 1 || n > 9) throw std::invalid_argument("enumeration supports 1 <= n <= 9");
    Enumerator en{n, min_degree_2_only, yield, chord_candidates(n), {}, {}};
    if (n < 4) en.candidates.clear();  // no chords exist below 4 boundary vertices
    en.recurse(0);
}

std::vector<Diagram> enumerate_diagrams(int n, bool min_degree_2_only) {
    std::vector<Diagram> out;
    enumerate_diagrams(n, min_degree_2_only, [&](const Diagram& d) { out.push_back(d); });
    return out;
}

ListAssignment gen_random_lists(const Graph& g, int k, int palette, std::uint64_t seed) {
    if (k < 1 || palette < k) throw std::invalid_argument("palette must be at least k >= 1");
    Rng rng(seed);
    ListAssignment L;
    for (const Element& x : all_elements(g)) L.lists[x] = rng.k_subset(k, palette);
    return L;
}

}  // namespace potc
