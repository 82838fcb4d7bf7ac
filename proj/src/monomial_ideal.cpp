#include "coveralg/monomial_ideal.hpp"

#include <algorithm>
#include <numeric>

namespace coveralg {

namespace {

bool divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Int total_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), Int(0));
}

// Keep only the divisibility-minimal monomials. Scanning by ascending total
// degree means every potential divisor of a candidate is already in `kept`.
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) {
                  const Int da = total_degree(a), db = total_degree(b);
                  return da != db ? da < db : a < b;
              });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    for (auto& g : gens) {
        bool redundant = false;
        for (const auto& k : kept)
            if (divides(k, g)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(std::move(g));
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

void check_ambient(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.ambient_vars() != J.ambient_vars())
        throw std::invalid_argument("monomial ideals live in different rings");
}

}  // namespace

MonomialIdeal MonomialIdeal::from_generators(int n, std::vector<Monomial> gens) {
    if (n < 1) throw std::invalid_argument("MonomialIdeal: n must be >= 1");
    for (const auto& g : gens) {
        if (g.size() != static_cast<std::size_t>(n))
            throw std::invalid_argument("MonomialIdeal: generator length != n");
        for (Int e : g)
            if (e < 0) throw std::invalid_argument("MonomialIdeal: negative exponent");
    }
    return MonomialIdeal(n, minimalize(std::move(gens)));
}

bool MonomialIdeal::is_unit() const {
    return gens_.size() == 1 && total_degree(gens_.front()) == 0;
}

MonomialIdeal vertex_prime(const std::vector<int>& F, int n, Int p) {
    if (F.empty()) throw std::invalid_argument("vertex_prime: empty edge");
    if (p < 1) throw std::invalid_argument("vertex_prime: power must be >= 1");
    for (int v : F)
        if (v < 1 || v > n)
            throw std::invalid_argument("vertex_prime: vertex out of range");
    // weak compositions of p over the variables of F
    std::vector<Monomial> gens;
    Monomial cur(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, std::size_t pos, Int remaining) -> void {
        if (pos + 1 == F.size()) {
            cur[F[pos] - 1] = remaining;
            gens.push_back(cur);
            cur[F[pos] - 1] = 0;
            return;
        }
        for (Int e = 0; e <= remaining; ++e) {
            cur[F[pos] - 1] = e;
            self(self, pos + 1, remaining - e);
        }
        cur[F[pos] - 1] = 0;
    };
    rec(rec, 0, p);
    return MonomialIdeal::from_generators(n, std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
    check_ambient(I, J);
    std::vector<Monomial> gens;
    gens.reserve(I.generators().size() * J.generators().size());
    for (const auto& a : I.generators()) {
        for (const auto& b : J.generators()) {
            Monomial m(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
            gens.push_back(std::move(m));
        }
    }
    return MonomialIdeal::from_generators(I.ambient_vars(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& I, Int k) {
    if (k < 0) throw std::invalid_argument("power: k must be >= 0");
    if (k == 0) return MonomialIdeal::unit(I.ambient_vars());
    if (I.is_zero()) return I;
    const auto& g = I.generators();
    std::vector<Monomial> gens;
    Monomial cur(g.front().size(), 0);
    // k-fold sums of generators, combinations with repetition
    auto rec = [&](auto&& self, std::size_t from, Int remaining) -> void {
        if (remaining == 0) {
            gens.push_back(cur);
            return;
        }
        for (std::size_t i = from; i < g.size(); ++i) {
            for (std::size_t j = 0; j < cur.size(); ++j) cur[j] += g[i][j];
            self(self, i, remaining - 1);
            for (std::size_t j = 0; j < cur.size(); ++j) cur[j] -= g[i][j];
        }
    };
    rec(rec, 0, k);
    return MonomialIdeal::from_generators(I.ambient_vars(), std::move(gens));
}

MonomialIdeal ideal_of(const Hypergraph& h, const WeightFunction& w) {
    check_aligned(h, w);
    MonomialIdeal out = MonomialIdeal::unit(h.n);
    for (std::size_t r = 0; r < h.edge_count(); ++r)
        out = intersect(out, vertex_prime(h.edges[r], h.n, w.weights[r]));
    return out;
}

MonomialIdeal symbolic_power(const Hypergraph& h, const WeightFunction& w, Int k) {
    check_aligned(h, w);
    if (k < 0) throw std::invalid_argument("symbolic_power: k must be >= 0");
    if (k == 0) return MonomialIdeal::unit(h.n);
    MonomialIdeal out = MonomialIdeal::unit(h.n);
    for (std::size_t r = 0; r < h.edge_count(); ++r)
        out = intersect(out, vertex_prime(h.edges[r], h.n, w.weights[r] * k));
    return out;
}

bool contains(const MonomialIdeal& I, const Monomial& m) {
    if (m.size() != static_cast<std::size_t>(I.ambient_vars()))
        throw std::invalid_argument("contains: monomial length != ambient n");
    for (const auto& g : I.generators())
        if (divides(g, m)) return true;
    return false;
}

bool equals(const MonomialIdeal& I, const MonomialIdeal& J) {
    check_ambient(I, J);
    return I.generators() == J.generators();
}

CorollaryReport corollary_points_check(int n, const std::vector<Int>& w, Int k) {
    if (n < 1) throw std::invalid_argument("corollary_points_check: n must be >= 1");
    if (k < 1) throw std::invalid_argument("corollary_points_check: k must be >= 1");
    if (w.size() != static_cast<std::size_t>(n) + 1)
        throw std::invalid_argument("corollary_points_check: need n+1 weights");

    // Point i in P^n has defining prime generated by the variables other
    // than x_{i+1}; as a hypergraph edge that is {1..n+1} minus {i+1}.
    std::vector<std::vector<int>> raw;
    for (int i = 0; i <= n; ++i) {
        std::vector<int> edge;
        for (int v = 1; v <= n + 1; ++v)
            if (v != i + 1) edge.push_back(v);
        raw.push_back(std::move(edge));
    }
    Hypergraph h = normalize_clutter(raw, n + 1);
    std::vector<Int> aligned(h.edge_count());
    for (int i = 0; i <= n; ++i) {
        auto it = std::find(h.edges.begin(), h.edges.end(), raw[i]);
        aligned[static_cast<std::size_t>(it - h.edges.begin())] = w[i];
    }
    WeightFunction wf{std::move(aligned)};

    CorollaryReport report;
    report.n = n;
    report.point_weights = w;
    report.k = k;
    const MonomialIdeal ordinary = power(ideal_of(h, wf), k);
    const MonomialIdeal symbolic = symbolic_power(h, wf, k);
    report.equal = equals(ordinary, symbolic);
    if (report.equal) {
        report.note = "identity (P_0^{w_0} cap...cap P_n^{w_n})^k = "
                      "P_0^{w_0 k} cap...cap P_n^{w_n k} holds at these parameters";
        return report;
    }
    report.discrepancy = true;
    for (const auto& g : symbolic.generators()) {
        if (!contains(ordinary, g)) {
            report.separating_monomial = g;
            break;
        }
    }
    report.note = "discrepancy: the identity (P_0^{w_0} cap...cap P_n^{w_n})^k = "
                  "P_0^{w_0 k} cap...cap P_n^{w_n k}, claimed for points in general "
                  "position, fails at these parameters; the hypergraph of all "
                  "n-subsets of n+1 vertices is not unimodular for n >= 2";
    return report;
}

std::string monomial_to_string(const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += "x" + std::to_string(i + 1);
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

}  // namespace coveralg
