#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coveralg/hypergraph.hpp"

namespace coveralg {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line(line) {}

    int line;
};

struct ParsedInput {
    Hypergraph hypergraph;
    WeightFunction weights;       // defaults to 1 per edge
    bool explicit_weights = false;
    std::vector<std::string> warnings;  // normalization drops, weight conflicts
};

/// Grammar: '#' comments, one "vertices <n>" line, "edge <v1> <v2> ..."
/// lines, optional "weight <edge-ordinal> <positive-int>" lines keyed to
/// edge input order. Edges are clutter-normalized after parsing; weights of
/// removed edges are dropped with a warning. When override_weights is
/// given it replaces all file weight lines, one entry per edge in input
/// order.
ParsedInput parse_hypergraph(
    const std::string& text,
    const std::optional<std::vector<Int>>& override_weights = std::nullopt);

/// Canonical file form: vertices line, canonical edges, one weight line per
/// edge. parse(serialize(h, w)) reproduces (h, w) exactly.
std::string serialize(const Hypergraph& h, const WeightFunction& w);

/// FNV-1a 64-bit digest of the canonical serialization, "fnv1a64:<hex>".
std::string input_digest(const Hypergraph& h, const WeightFunction& w);

}  // namespace coveralg
