#include "coveralg/covers.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace coveralg {

bool is_k_cover(const Hypergraph& h, const WeightFunction& w,
                const std::vector<Int>& c, Int k) {
    check_aligned(h, w);
    if (c.size() != static_cast<std::size_t>(h.n))
        throw std::invalid_argument("is_k_cover: vector length != vertex count");
    if (k < 0) throw std::invalid_argument("is_k_cover: k must be >= 0");
    for (Int x : c)
        if (x < 0) throw std::invalid_argument("is_k_cover: negative entry");
    for (std::size_t r = 0; r < h.edge_count(); ++r) {
        Int sum = 0;
        for (int v : h.edges[r]) sum += c[static_cast<std::size_t>(v - 1)];
        if (sum < k * w.weights[r]) return false;
    }
    return true;
}

CoverVector make_cover(const Hypergraph& h, const WeightFunction& w,
                       std::vector<Int> c, Int k) {
    if (!is_k_cover(h, w, c, k))
        throw std::invalid_argument("make_cover: not a k-cover");
    return CoverVector{std::move(c), k};
}

namespace {

// Per-vertex entry bound for minimal k-covers: for every positive entry of
// a minimal cover some incident edge is tight, so c_v <= k * max w over
// edges through v; isolated vertices carry 0.
std::vector<Int> minimal_entry_bounds(const Hypergraph& h,
                                      const WeightFunction& w, Int k) {
    std::vector<Int> bound(static_cast<std::size_t>(h.n), 0);
    for (std::size_t r = 0; r < h.edge_count(); ++r)
        for (int v : h.edges[r])
            bound[v - 1] = std::max(bound[v - 1], k * w.weights[r]);
    return bound;
}

struct MinimalCoverScan {
    const Hypergraph& h;
    const WeightFunction& w;
    Int k;
    std::vector<Int> bound;
    std::vector<Int> current;
    // per edge: accumulated sum and the best still reachable from the
    // undecided coordinates
    std::vector<Int> sum;
    std::vector<Int> reachable;
    std::vector<std::vector<std::size_t>> edges_at_vertex;
    std::vector<CoverVector> out;

    MinimalCoverScan(const Hypergraph& hg, const WeightFunction& wf, Int kk)
        : h(hg), w(wf), k(kk), bound(minimal_entry_bounds(hg, wf, kk)),
          current(static_cast<std::size_t>(hg.n), 0),
          sum(hg.edge_count(), 0), reachable(hg.edge_count(), 0),
          edges_at_vertex(static_cast<std::size_t>(hg.n)) {
        for (std::size_t r = 0; r < h.edge_count(); ++r) {
            for (int v : h.edges[r]) {
                reachable[r] += bound[v - 1];
                edges_at_vertex[v - 1].push_back(r);
            }
        }
    }

    bool minimal_at_leaf() const {
        for (std::size_t v = 0; v < current.size(); ++v) {
            if (current[v] == 0) continue;
            bool some_tight = false;
            for (std::size_t r : edges_at_vertex[v])
                if (sum[r] == k * w.weights[r]) {
                    some_tight = true;
                    break;
                }
            if (!some_tight) return false;  // c - e_v still a k-cover
        }
        return true;
    }

    void visit(std::size_t v) {
        if (v == current.size()) {
            bool cover = true;
            for (std::size_t r = 0; r < h.edge_count(); ++r)
                if (sum[r] < k * w.weights[r]) {
                    cover = false;
                    break;
                }
            if (cover && minimal_at_leaf()) out.push_back(CoverVector{current, k});
            return;
        }
        for (std::size_t r : edges_at_vertex[v]) reachable[r] -= bound[v];
        for (Int x = 0; x <= bound[v]; ++x) {
            current[v] = x;
            if (x > 0)
                for (std::size_t r : edges_at_vertex[v]) ++sum[r];
            bool viable = true;
            for (std::size_t r : edges_at_vertex[v])
                if (sum[r] + reachable[r] < k * w.weights[r]) {
                    viable = false;
                    break;
                }
            if (viable) visit(v + 1);
        }
        for (std::size_t r : edges_at_vertex[v]) sum[r] -= bound[v];
        current[v] = 0;
        for (std::size_t r : edges_at_vertex[v]) reachable[r] += bound[v];
    }
};

}  // namespace

std::vector<CoverVector> minimal_k_covers(const Hypergraph& h,
                                          const WeightFunction& w, Int k) {
    check_aligned(h, w);
    if (k < 1) throw std::invalid_argument("minimal_k_covers: k must be >= 1");
    MinimalCoverScan scan(h, w, k);
    scan.visit(0);
    return std::move(scan.out);
}

namespace {

bool leq(const std::vector<Int>& a, const std::vector<Int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

struct DecomposeSearch {
    const Hypergraph& h;
    const WeightFunction& w;
    std::vector<std::vector<Int>> one_covers;  // minimal 1-covers, lex order
    std::map<std::pair<std::vector<Int>, Int>, bool> dead;

    bool run(const std::vector<Int>& c, Int k,
             std::vector<std::vector<Int>>& parts) {
        if (k == 1) {
            parts.push_back(c);
            return true;
        }
        auto key = std::make_pair(c, k);
        if (dead.contains(key)) return false;
        for (const auto& u : one_covers) {
            if (!leq(u, c)) continue;
            std::vector<Int> rest(c.size());
            for (std::size_t i = 0; i < c.size(); ++i) rest[i] = c[i] - u[i];
            if (!is_k_cover(h, w, rest, k - 1)) continue;
            parts.push_back(u);
            if (run(rest, k - 1, parts)) return true;
            parts.pop_back();
        }
        dead.emplace(std::move(key), true);
        return false;
    }
};

}  // namespace

std::optional<std::vector<std::vector<Int>>> decompose(const Hypergraph& h,
                                                       const WeightFunction& w,
                                                       const std::vector<Int>& c,
                                                       Int k) {
    if (k < 1) throw std::invalid_argument("decompose: k must be >= 1");
    if (!is_k_cover(h, w, c, k))
        throw std::invalid_argument("decompose: input is not a k-cover");
    DecomposeSearch search{h, w, {}, {}};
    for (auto& mc : minimal_k_covers(h, w, 1))
        search.one_covers.push_back(std::move(mc.c));
    std::vector<std::vector<Int>> parts;
    if (search.run(c, k, parts)) return parts;
    return std::nullopt;
}

GradingReport is_standard_graded_up_to(const Hypergraph& h,
                                       const WeightFunction& w, Int K) {
    check_aligned(h, w);
    if (K < 1) throw std::invalid_argument("is_standard_graded_up_to: K must be >= 1");
    for (Int k = 2; k <= K; ++k) {
        for (auto& cover : minimal_k_covers(h, w, k)) {
            if (!decompose(h, w, cover.c, k))
                return GradingReport{false, K, std::move(cover)};
        }
    }
    return GradingReport{true, K, std::nullopt};
}

std::vector<AlgebraGenerator> algebra_generators_up_to(const Hypergraph& h,
                                                       const WeightFunction& w,
                                                       Int K) {
    check_aligned(h, w);
    if (K < 1) throw std::invalid_argument("algebra_generators_up_to: K must be >= 1");
    std::vector<AlgebraGenerator> out;
    std::vector<std::vector<Int>> one_covers;
    for (auto& mc : minimal_k_covers(h, w, 1)) {
        out.push_back(AlgebraGenerator{mc.c, 1});
        one_covers.push_back(std::move(mc.c));
    }
    for (Int k = 2; k <= K; ++k) {
        for (auto& cover : minimal_k_covers(h, w, k)) {
            // new generator iff no split (1-cover) + ((k-1)-cover); checking
            // minimal 1-covers suffices since larger remainders stay covers
            bool splits = false;
            for (const auto& u : one_covers) {
                if (!leq(u, cover.c)) continue;
                std::vector<Int> rest(cover.c.size());
                for (std::size_t i = 0; i < rest.size(); ++i)
                    rest[i] = cover.c[i] - u[i];
                if (is_k_cover(h, w, rest, k - 1)) {
                    splits = true;
                    break;
                }
            }
            if (!splits) out.push_back(AlgebraGenerator{std::move(cover.c), k});
        }
    }
    return out;
}

CoverVector witness_from_fractional_vertex(const Hypergraph& h,
                                           const WeightFunction& w,
                                           const RationalPoint& a) {
    check_aligned(h, w);
    if (a.coordinates.size() != static_cast<std::size_t>(h.n))
        throw std::invalid_argument("witness_from_fractional_vertex: wrong dimension");
    if (a.is_integral())
        throw std::invalid_argument("witness_from_fractional_vertex: vertex is integral");
    const BigInt k_big = a.denominator_lcm();
    if (k_big > std::numeric_limits<Int>::max())
        throw std::overflow_error("witness_from_fractional_vertex: lcm overflow");
    const Int k = static_cast<Int>(k_big);
    std::vector<Int> c(a.coordinates.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Rational scaled = a.coordinates[i] * Rational(k_big);
        if (denominator(scaled) != 1)
            throw std::logic_error("witness_from_fractional_vertex: lcm scaling failed");
        c[i] = static_cast<Int>(BigInt(numerator(scaled)));
    }
    return make_cover(h, w, std::move(c), k);
}

std::optional<Int> find_veronese_degree(const Hypergraph& h, Int K_test,
                                        Int d_max) {
    if (K_test < 2) throw std::invalid_argument("find_veronese_degree: K_test must be >= 2");
    if (d_max < 1) throw std::invalid_argument("find_veronese_degree: d_max must be >= 1");
    for (Int d = 1; d <= d_max; ++d) {
        WeightFunction w{std::vector<Int>(h.edge_count(), d)};
        if (is_standard_graded_up_to(h, w, K_test).standard) return d;
    }
    return std::nullopt;
}

TheoremReport verify_main_theorem(const Hypergraph& h, Int w_bound, Int K) {
    if (w_bound < 1 || K < 1)
        throw std::invalid_argument("verify_main_theorem: bounds must be >= 1");
    TheoremReport report;
    report.w_bound = w_bound;
    report.max_k = K;
    const IntegerMatrix m = incidence_matrix(h);
    report.tu_witness = find_tu_violation(m);
    report.unimodular = !report.tu_witness.has_value();

    if (report.unimodular) {
        // every weight vector with entries in 1..w_bound must pass
        std::vector<Int> wv(h.edge_count(), 1);
        while (true) {
            auto grading = is_standard_graded_up_to(h, WeightFunction{wv}, K);
            if (!grading.standard) {
                report.verdict = TheoremReport::Verdict::Contradicted;
                report.witness_weights = wv;
                report.witness_cover = grading.failing_cover;
                return report;
            }
            std::size_t i = wv.size();
            while (i > 0 && wv[i - 1] == w_bound) wv[--i] = 1;
            if (i == 0) break;
            ++wv[i - 1];
        }
        report.verdict = TheoremReport::Verdict::AllWeightsStandardGraded;
        return report;
    }

    auto found = fractional_vertex_search(m, w_bound);
    if (!found) {
        report.verdict = TheoremReport::Verdict::NoWitnessWithinBound;
        return report;
    }
    report.witness_weights = found->weights;
    report.fractional_vertex = found->vertex;
    WeightFunction wf{found->weights};
    CoverVector cover = witness_from_fractional_vertex(h, wf, found->vertex);
    if (decompose(h, wf, cover.c, cover.k)) {
        // a fractional vertex scaled by its denominator lcm must not split
        report.verdict = TheoremReport::Verdict::Contradicted;
        report.witness_cover = std::move(cover);
        return report;
    }
    report.verdict = TheoremReport::Verdict::WitnessFound;
    report.witness_cover = std::move(cover);
    return report;
}

}  // namespace coveralg
