#include "coveralg/hypergraph.hpp"

#include <algorithm>

namespace coveralg {

WeightFunction unit_weights(const Hypergraph& h) {
    return WeightFunction{std::vector<Int>(h.edge_count(), 1)};
}

void check_aligned(const Hypergraph& h, const WeightFunction& w) {
    if (w.weights.size() != h.edge_count())
        throw std::invalid_argument("weight function length != edge count");
    for (Int x : w.weights)
        if (x < 1) throw std::invalid_argument("weights must be positive");
}

Hypergraph normalize_clutter(std::vector<std::vector<int>> raw_edges, int n) {
    if (n < 1) throw std::invalid_argument("normalize_clutter: n must be >= 1");
    for (auto& e : raw_edges) {
        if (e.empty())
            throw std::invalid_argument("normalize_clutter: empty edge");
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        for (int v : e)
            if (v < 1 || v > n)
                throw std::invalid_argument("normalize_clutter: vertex out of range");
    }
    std::sort(raw_edges.begin(), raw_edges.end());
    raw_edges.erase(std::unique(raw_edges.begin(), raw_edges.end()), raw_edges.end());

    std::vector<std::vector<int>> kept;
    for (const auto& e : raw_edges) {
        bool contains_other = false;
        for (const auto& f : raw_edges) {
            if (&f == &e || f.size() >= e.size()) continue;
            if (std::includes(e.begin(), e.end(), f.begin(), f.end())) {
                contains_other = true;
                break;
            }
        }
        if (!contains_other) kept.push_back(e);
    }
    return Hypergraph{n, std::move(kept)};
}

IntegerMatrix incidence_matrix(const Hypergraph& h) {
    IntegerMatrix m(h.edge_count(), static_cast<std::size_t>(h.n));
    for (std::size_t r = 0; r < h.edge_count(); ++r)
        for (int v : h.edges[r]) m.at(r, static_cast<std::size_t>(v - 1)) = 1;
    return m;
}

namespace {

bool mask_meets_all(const Hypergraph& h, std::uint32_t mask) {
    for (const auto& e : h.edges) {
        bool hit = false;
        for (int v : e)
            if (mask >> (v - 1) & 1u) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

}  // namespace

Hypergraph blocker(const Hypergraph& h) {
    if (h.n > 24)
        throw SizeCapError("blocker: size cap exceeded (n > 24)");
    if (h.edges.empty()) return Hypergraph{h.n, {}};
    std::vector<std::vector<int>> minimal;
    const std::uint32_t limit = 1u << h.n;
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
        if (!mask_meets_all(h, mask)) continue;
        // minimal iff dropping any one chosen vertex breaks coverage
        bool is_minimal = true;
        for (int v = 1; v <= h.n && is_minimal; ++v)
            if (mask >> (v - 1) & 1u)
                if (mask_meets_all(h, mask & ~(1u << (v - 1)))) is_minimal = false;
        if (!is_minimal) continue;
        std::vector<int> cover;
        for (int v = 1; v <= h.n; ++v)
            if (mask >> (v - 1) & 1u) cover.push_back(v);
        minimal.push_back(std::move(cover));
    }
    std::sort(minimal.begin(), minimal.end());
    return Hypergraph{h.n, std::move(minimal)};
}

bool is_valid_chain(const Hypergraph& h, const AlternatingChain& chain) {
    const std::size_t s = chain.vertices.size();
    if (s < 3 || s % 2 == 0 || chain.edge_indices.size() != s) return false;
    std::vector<int> vs = chain.vertices;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
    std::vector<std::size_t> es = chain.edge_indices;
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end()) return false;
    for (std::size_t i = 0; i < s; ++i) {
        if (chain.edge_indices[i] >= h.edge_count()) return false;
        const auto& edge = h.edges[chain.edge_indices[i]];
        const int a = chain.vertices[i];
        const int b = chain.vertices[(i + 1) % s];
        if (!std::binary_search(edge.begin(), edge.end(), a)) return false;
        if (!std::binary_search(edge.begin(), edge.end(), b)) return false;
    }
    return true;
}

namespace {

struct ChainSearch {
    const Hypergraph& h;
    std::vector<char> vertex_used;
    std::vector<char> edge_used;
    std::vector<int> vertices;
    std::vector<std::size_t> edges;

    explicit ChainSearch(const Hypergraph& hg)
        : h(hg),
          vertex_used(static_cast<std::size_t>(hg.n) + 1, 0),
          edge_used(hg.edge_count(), 0) {}

    // Extends the chain from the current last vertex; closing is allowed
    // once the (odd) length reaches 3.
    bool extend() {
        const int cur = vertices.back();
        for (std::size_t f = 0; f < h.edge_count(); ++f) {
            if (edge_used[f]) continue;
            const auto& edge = h.edges[f];
            if (!std::binary_search(edge.begin(), edge.end(), cur)) continue;
            edge_used[f] = 1;
            edges.push_back(f);
            if (edges.size() >= 3 && edges.size() % 2 == 1 &&
                std::binary_search(edge.begin(), edge.end(), vertices.front()))
                return true;  // closed an odd chain
            for (int v : edge) {
                if (vertex_used[v]) continue;
                vertex_used[v] = 1;
                vertices.push_back(v);
                if (extend()) return true;
                vertices.pop_back();
                vertex_used[v] = 0;
            }
            edges.pop_back();
            edge_used[f] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<AlternatingChain> find_odd_alternating_chain(const Hypergraph& h) {
    if (h.edge_count() < 3) return std::nullopt;
    for (int start = 1; start <= h.n; ++start) {
        ChainSearch search(h);
        search.vertex_used[start] = 1;
        search.vertices.push_back(start);
        if (search.extend())
            return AlternatingChain{search.vertices, search.edges};
    }
    return std::nullopt;
}

std::optional<bool> is_bipartite_graph(const Hypergraph& h) {
    for (const auto& e : h.edges)
        if (e.size() != 2) return std::nullopt;
    std::vector<int> color(static_cast<std::size_t>(h.n) + 1, -1);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(h.n) + 1);
    for (const auto& e : h.edges) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    for (int s = 1; s <= h.n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[u]) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    stack.push_back(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace coveralg
