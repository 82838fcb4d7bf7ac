#pragma once

#include <optional>
#include <vector>

#include "coveralg/exact_linear.hpp"
#include "coveralg/hypergraph.hpp"

namespace coveralg {

/// A vector c in N^n together with the order k it covers at: for every edge
/// F, sum of c over F >= k * w_F. Build through make_cover.
struct CoverVector {
    std::vector<Int> c;
    Int k = 0;

    bool operator==(const CoverVector&) const = default;
};

bool is_k_cover(const Hypergraph& h, const WeightFunction& w,
                const std::vector<Int>& c, Int k);

/// Validates the cover condition; throws on violation.
CoverVector make_cover(const Hypergraph& h, const WeightFunction& w,
                       std::vector<Int> c, Int k);

/// The componentwise-minimal k-covers, in lexicographic order. Every entry
/// of a minimal k-cover is at most k * max_F w_F (and 0 on vertices in no
/// edge), which bounds the enumeration.
std::vector<CoverVector> minimal_k_covers(const Hypergraph& h,
                                          const WeightFunction& w, Int k);

/// Splits c into k many 1-covers if possible. The search strips minimal
/// 1-covers from c and recurses on the remainder, memoizing dead ends;
/// stripping minimal 1-covers only loses nothing because covers are upward
/// closed. Requires c to be a k-cover with k >= 1.
std::optional<std::vector<std::vector<Int>>> decompose(const Hypergraph& h,
                                                       const WeightFunction& w,
                                                       const std::vector<Int>& c,
                                                       Int k);

struct GradingReport {
    bool standard = false;        // every minimal k-cover, 2 <= k <= tested_up_to, splits
    Int tested_up_to = 0;
    std::optional<CoverVector> failing_cover;
};

/// Decides standard gradedness of the cover algebra up to degree K by
/// decomposing every minimal k-cover for 2 <= k <= K. Minimal covers
/// suffice: any k-cover dominates a minimal one and the slack folds into
/// one of the parts.
GradingReport is_standard_graded_up_to(const Hypergraph& h,
                                       const WeightFunction& w, Int K);

/// Generator x^c t^k of the cover algebra. Degree-0 generators (the
/// ambient variables) are implicit and never listed.
struct AlgebraGenerator {
    std::vector<Int> c;
    Int k = 0;

    bool operator==(const AlgebraGenerator&) const = default;
};

/// Degree 1: all minimal 1-covers. Degree k in 2..K: minimal k-covers that
/// are not a (1-cover) + ((k-1)-cover). The algebra is standard graded up
/// to K exactly when nothing of degree >= 2 is listed.
std::vector<AlgebraGenerator> algebra_generators_up_to(const Hypergraph& h,
                                                       const WeightFunction& w,
                                                       Int K);

/// Scales a fractional vertex a of {c >= 0 : M c >= w} by the lcm k of its
/// coordinate denominators. The result is a k-cover that admits no
/// decomposition (a vertex is not a nontrivial average of polyhedron
/// points). Rejects integral input.
CoverVector witness_from_fractional_vertex(const Hypergraph& h,
                                           const WeightFunction& w,
                                           const RationalPoint& a);

/// Smallest d <= d_max whose constant weight w == d makes the algebra
/// standard graded up to K_test; absent when none is found in range.
std::optional<Int> find_veronese_degree(const Hypergraph& h, Int K_test,
                                        Int d_max);

/// Outcome of checking "standard graded for all weights <=> incidence
/// matrix totally unimodular" on one hypergraph at bounded depth.
struct TheoremReport {
    enum class Verdict {
        AllWeightsStandardGraded,  // TU branch: every scanned weight passed
        WitnessFound,              // non-TU branch: non-decomposable cover built
        NoWitnessWithinBound,      // non-TU branch: weight scan exhausted
        Contradicted,              // a branch behaved against the prediction
    };

    bool unimodular = false;
    Verdict verdict = Verdict::NoWitnessWithinBound;
    std::optional<TUWitness> tu_witness;
    std::optional<std::vector<Int>> witness_weights;
    std::optional<RationalPoint> fractional_vertex;
    std::optional<CoverVector> witness_cover;
    Int w_bound = 0;
    Int max_k = 0;
};

/// TU branch: asserts standard gradedness up to K for every weight vector
/// with entries in 1..w_bound. Non-TU branch: searches for a fractional
/// vertex and extracts a non-decomposable cover from it.
TheoremReport verify_main_theorem(const Hypergraph& h, Int w_bound, Int K);

}  // namespace coveralg
