#include "coveralg/io.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <sstream>

namespace coveralg {

namespace {

std::string edge_to_string(const std::vector<int>& e) {
    std::string out;
    for (int v : e) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    }
    return out;
}

}  // namespace

ParsedInput parse_hypergraph(
    const std::string& text,
    const std::optional<std::vector<Int>>& override_weights) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<std::vector<int>> raw_edges;
    struct PendingWeight {
        int line;
        long long ordinal;
        long long value;
    };
    std::vector<PendingWeight> pending_weights;  // ordinals are 1-based input order

    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string keyword;
        if (!(ls >> keyword)) continue;

        if (keyword == "vertices") {
            if (n != -1) throw ParseError(line_no, "duplicate vertices line");
            if (!(ls >> n) || n < 1)
                throw ParseError(line_no, "vertices needs a positive count");
        } else if (keyword == "edge") {
            if (n == -1) throw ParseError(line_no, "edge before vertices line");
            std::vector<int> edge;
            int v;
            while (ls >> v) {
                if (v < 1 || v > n)
                    throw ParseError(line_no, "vertex " + std::to_string(v) +
                                                  " out of range 1.." + std::to_string(n));
                edge.push_back(v);
            }
            if (!ls.eof()) throw ParseError(line_no, "malformed vertex list");
            if (edge.empty()) throw ParseError(line_no, "empty edge");
            raw_edges.push_back(std::move(edge));
        } else if (keyword == "weight") {
            long long ordinal, value;
            if (!(ls >> ordinal >> value))
                throw ParseError(line_no, "weight needs <edge-ordinal> <value>");
            if (value < 1) throw ParseError(line_no, "weight must be positive");
            pending_weights.push_back({line_no, ordinal, value});
        } else {
            throw ParseError(line_no, "unknown keyword '" + keyword + "'");
        }
        std::string trailing;
        if (ls >> trailing) throw ParseError(line_no, "trailing tokens");
    }
    if (n == -1) throw ParseError(line_no, "missing vertices line");

    std::map<std::size_t, Int> raw_weights;  // keyed by 0-based edge input ordinal
    if (override_weights) {
        if (override_weights->size() != raw_edges.size())
            throw ParseError(line_no, "weight override has " +
                                          std::to_string(override_weights->size()) +
                                          " entries, file has " +
                                          std::to_string(raw_edges.size()) + " edges");
        for (std::size_t i = 0; i < override_weights->size(); ++i) {
            if ((*override_weights)[i] < 1)
                throw ParseError(line_no, "weight override entries must be positive");
            raw_weights[i] = (*override_weights)[i];
        }
    } else {
        for (const auto& pw : pending_weights) {
            if (pw.ordinal < 1 || pw.ordinal > static_cast<long long>(raw_edges.size()))
                throw ParseError(pw.line, "weight ordinal " + std::to_string(pw.ordinal) +
                                              " does not name an edge (file has " +
                                              std::to_string(raw_edges.size()) + ")");
            const auto key = static_cast<std::size_t>(pw.ordinal - 1);
            if (raw_weights.contains(key))
                throw ParseError(pw.line, "duplicate weight line for edge ordinal " +
                                              std::to_string(pw.ordinal));
            raw_weights[key] = pw.value;
        }
    }

    ParsedInput out;
    out.explicit_weights = !raw_weights.empty();

    // Attach weights to their edges before normalization reorders things.
    // First occurrence wins for duplicate edges.
    std::map<std::vector<int>, Int> weight_of;
    std::vector<std::vector<int>> cleaned;
    for (std::size_t i = 0; i < raw_edges.size(); ++i) {
        std::vector<int> e = raw_edges[i];
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        const Int wt = raw_weights.contains(i) ? raw_weights[i] : 1;
        auto [it, inserted] = weight_of.emplace(e, wt);
        if (!inserted) {
            out.warnings.push_back("duplicate edge {" + edge_to_string(e) +
                                   "} removed; keeping the first occurrence's weight");
            if (it->second != wt)
                out.warnings.push_back("conflicting weight " + std::to_string(wt) +
                                       " for duplicate edge {" + edge_to_string(e) +
                                       "} ignored");
            continue;
        }
        cleaned.push_back(std::move(e));
    }

    out.hypergraph = normalize_clutter(cleaned, n);
    for (const auto& e : cleaned)
        if (!std::binary_search(out.hypergraph.edges.begin(),
                                out.hypergraph.edges.end(), e))
            out.warnings.push_back("edge {" + edge_to_string(e) +
                                   "} contains another edge; removed (weight dropped)");
    out.weights.weights.reserve(out.hypergraph.edge_count());
    for (const auto& e : out.hypergraph.edges)
        out.weights.weights.push_back(weight_of.at(e));
    return out;
}

std::string serialize(const Hypergraph& h, const WeightFunction& w) {
    check_aligned(h, w);
    std::string out = "vertices " + std::to_string(h.n) + "\n";
    for (const auto& e : h.edges) out += "edge " + edge_to_string(e) + "\n";
    for (std::size_t i = 0; i < w.weights.size(); ++i)
        out += "weight " + std::to_string(i + 1) + " " +
               std::to_string(w.weights[i]) + "\n";
    return out;
}

std::string input_digest(const Hypergraph& h, const WeightFunction& w) {
    const std::string text = serialize(h, w);
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char ch : text) {
        hash ^= ch;
        hash *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return std::string("fnv1a64:") + buf;
}

}  // namespace coveralg
