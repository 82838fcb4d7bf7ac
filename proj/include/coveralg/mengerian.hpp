#pragma once

#include <optional>
#include <vector>

#include "coveralg/covers.hpp"
#include "coveralg/hypergraph.hpp"

namespace coveralg {

/// min { a . c : a in N^n, M a >= 1 }. The optimum is attained at a minimal
/// 1-cover since c is nonnegative, so the search runs over those.
Int min_cover_value(const Hypergraph& h, const std::vector<Int>& c);

/// max { b . 1 : b in N^m, M^T b <= c }, by exhaustive search over the box
/// b_r <= min of c over the vertices of edge r, with pruning.
Int max_packing_value(const Hypergraph& h, const std::vector<Int>& c);

struct MengerianReport {
    bool pass = false;  // equality held for every scanned c (up to the bound only)
    Int bound = 0;
    std::optional<std::vector<Int>> witness_c;
    std::optional<Int> min_value;
    std::optional<Int> max_value;
};

/// Checks min_cover_value == max_packing_value for every c in {0..bound}^n
/// in lexicographic order; reports the first violation. A pass is evidence
/// up to the bound, never a proof.
MengerianReport is_mengerian_up_to(const Hypergraph& h, Int c_bound);

struct HhtzReport {
    GradingReport graded;        // standard gradedness of h at unit weights
    MengerianReport mengerian;   // Mengerian check of blocker(h)
    bool agreement = false;
    /// Gradedness passing while the blocker fails the Mengerian check is
    /// flagged: the Mengerian failure is definitive, so the gradedness
    /// failure must hide beyond the tested depth.
    bool hard_inconsistency = false;
    Int max_k = 0;
    Int c_bound = 0;
};

/// Cross-checks "standard graded at unit weights <=> blocker is Mengerian"
/// at bounded depth. A failing gradedness with a passing bounded Mengerian
/// check is a legal disagreement (the Mengerian sweep is one-sided).
HhtzReport hhtz_crosscheck(const Hypergraph& h, Int K, Int c_bound);

}  // namespace coveralg
