#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coveralg/hypergraph.hpp"

namespace coveralg {

/// Exponent vector of a monomial x^c in n variables.
using Monomial = std::vector<Int>;

/// A monomial ideal given by its unique minimal generating set, kept as a
/// lexicographically sorted antichain under componentwise <=. The zero
/// ideal has no generators; the unit ideal is generated by the constant
/// monomial.
class MonomialIdeal {
public:
    static MonomialIdeal from_generators(int n, std::vector<Monomial> gens);
    static MonomialIdeal zero(int n) { return MonomialIdeal(n, {}); }
    static MonomialIdeal unit(int n) {
        return MonomialIdeal(n, {Monomial(static_cast<std::size_t>(n), 0)});
    }

    int ambient_vars() const { return n_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const;

    bool operator==(const MonomialIdeal&) const = default;

private:
    MonomialIdeal(int n, std::vector<Monomial> gens)
        : n_(n), gens_(std::move(gens)) {}

    int n_ = 0;
    std::vector<Monomial> gens_;
};

/// P_F^p: all monomials supported on the edge F of total degree p.
MonomialIdeal vertex_prime(const std::vector<int>& F, int n, Int p);

/// Minimal generators of I ∩ J via pairwise componentwise maxima.
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);

/// I^k; k = 0 gives the unit ideal.
MonomialIdeal power(const MonomialIdeal& I, Int k);

/// I(h, w) = intersection over edges F of P_F^{w_F}. With unit weights this
/// is the squarefree ideal generated by the blocker edges.
MonomialIdeal ideal_of(const Hypergraph& h, const WeightFunction& w);

/// k-th symbolic power: intersection over edges of P_F^{w_F * k}, computed
/// by the defining intersection (not through cover enumeration, so the two
/// routes stay independent).
MonomialIdeal symbolic_power(const Hypergraph& h, const WeightFunction& w, Int k);

/// Some generator divides m.
bool contains(const MonomialIdeal& I, const Monomial& m);

/// Canonical generator lists are identical.
bool equals(const MonomialIdeal& I, const MonomialIdeal& J);

/// Result of comparing (P_0^{w_0} ∩...∩ P_n^{w_n})^k against
/// P_0^{w_0 k} ∩...∩ P_n^{w_n k} for the n+1 coordinate points of P^n,
/// realized as the hypergraph of all n-subsets of n+1 vertices.
struct CorollaryReport {
    int n = 0;
    std::vector<Int> point_weights;
    Int k = 0;
    bool equal = false;
    /// First symbolic-power generator missing from the ordinary power.
    std::optional<Monomial> separating_monomial;
    /// Set when the claimed identity fails for these parameters.
    bool discrepancy = false;
    std::string note;
};

CorollaryReport corollary_points_check(int n, const std::vector<Int>& w, Int k);

/// Renders x^c as "x1^2*x3" style text; the constant monomial is "1".
std::string monomial_to_string(const Monomial& m);

}  // namespace coveralg
