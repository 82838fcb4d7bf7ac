#pragma once

#include <optional>
#include <vector>

#include "coveralg/exact_linear.hpp"

namespace coveralg {

/// A clutter on vertices 1..n: nonempty edges, none contained in another,
/// each edge sorted ascending, edges sorted lexicographically. Build through
/// normalize_clutter; direct construction is for already-canonical data.
struct Hypergraph {
    int n = 0;
    std::vector<std::vector<int>> edges;

    std::size_t edge_count() const { return edges.size(); }
    bool operator==(const Hypergraph&) const = default;
};

/// Positive integer weight per edge, aligned with the canonical edge order.
struct WeightFunction {
    std::vector<Int> weights;

    bool operator==(const WeightFunction&) const = default;
};

WeightFunction unit_weights(const Hypergraph& h);

/// Throws unless w has one entry >= 1 per edge of h.
void check_aligned(const Hypergraph& h, const WeightFunction& w);

/// Deduplicates, drops edges that contain another edge, sorts canonically.
/// Idempotent and insensitive to input order. Rejects empty edges,
/// out-of-range vertices and n < 1.
Hypergraph normalize_clutter(std::vector<std::vector<int>> raw_edges, int n);

/// Rows = edges (canonical order), columns = vertices 1..n. An edgeless
/// hypergraph yields a 0 x n matrix.
IntegerMatrix incidence_matrix(const Hypergraph& h);

/// The clutter of inclusion-minimal vertex covers, on the same vertex set.
/// Exhaustive subset enumeration; the blocker of an edgeless hypergraph is
/// edgeless.
Hypergraph blocker(const Hypergraph& h);

/// Cyclic sequence v_1, F_1, v_2, ..., v_s, F_s with v_i, v_{i+1} in F_i
/// (indices mod s), all vertices and all edges distinct, s odd and >= 3.
/// Edge entries are 0-based positions in h.edges.
struct AlternatingChain {
    std::vector<int> vertices;
    std::vector<std::size_t> edge_indices;
};

/// First odd alternating chain in a deterministic depth-first scan, or
/// absent. Absence certifies unimodularity; presence certifies nothing.
std::optional<AlternatingChain> find_odd_alternating_chain(const Hypergraph& h);

/// True when the chain satisfies all the AlternatingChain conditions for h.
bool is_valid_chain(const Hypergraph& h, const AlternatingChain& chain);

/// Absent unless every edge has exactly two vertices; otherwise 2-colorability.
std::optional<bool> is_bipartite_graph(const Hypergraph& h);

}  // namespace coveralg
