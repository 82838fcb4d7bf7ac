#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace coveralg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Int = std::int64_t;

/// Thrown when an operation would exceed the exhaustive-enumeration size cap.
class SizeCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Largest min(rows, cols) accepted by the subdeterminant-enumeration
/// routines. Beyond this the scan refuses instead of silently degrading.
inline constexpr std::size_t kTuSizeCap = 12;

/// Dense matrix of exact integers, row-major. Zero rows are allowed so that
/// the incidence matrix of an edgeless hypergraph is representable; columns
/// must be positive.
class IntegerMatrix {
public:
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {
        if (cols == 0)
            throw std::invalid_argument("IntegerMatrix: column count must be positive");
    }

    static IntegerMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntegerMatrix submatrix(const std::vector<std::size_t>& row_idx,
                            const std::vector<std::size_t>& col_idx) const;

    bool operator==(const IntegerMatrix&) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<BigInt> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
/// Throws std::invalid_argument unless the matrix is square.
/// The determinant of the empty 0x0 matrix is 1.
BigInt determinant(const IntegerMatrix& m);

/// Every maximal (rows x rows) minor is 0 or +-1. Requires rows <= cols.
bool is_unimodular(const IntegerMatrix& m);

/// A square submatrix whose determinant falls outside {0, +-1}.
/// Indices are 0-based positions into the source matrix.
struct TUWitness {
    std::vector<std::size_t> row_indices;
    std::vector<std::size_t> col_indices;
    BigInt determinant;
};

/// Scans square submatrices in ascending size (lexicographic index order
/// within each size) and returns the first violation, or nullopt when the
/// matrix is totally unimodular. Throws SizeCapError when
/// min(rows, cols) > kTuSizeCap.
std::optional<TUWitness> find_tu_violation(const IntegerMatrix& m);

bool is_totally_unimodular(const IntegerMatrix& m);

/// A point with exact rational coordinates, always in lowest terms.
struct RationalPoint {
    std::vector<Rational> coordinates;

    bool is_integral() const;
    /// Least common multiple of the coordinate denominators (1 when integral).
    BigInt denominator_lcm() const;

    auto operator<=>(const RationalPoint&) const = default;
};

/// All vertices of Q = { c in R^n : c >= 0, M c >= w }, found by solving
/// every n-subset of the m+n constraint rows exactly and keeping feasible
/// solutions. Deduplicated and sorted lexicographically.
std::vector<RationalPoint> enumerate_vertices(const IntegerMatrix& m,
                                              const std::vector<Int>& w);

/// First vertex of Q with a non-integer coordinate (in enumerate_vertices
/// order), or nullopt when the polyhedron is integral.
std::optional<RationalPoint> find_fractional_vertex(const IntegerMatrix& m,
                                                    const std::vector<Int>& w);

bool is_integral_polyhedron(const IntegerMatrix& m, const std::vector<Int>& w);

struct FractionalVertexWitness {
    std::vector<Int> weights;
    RationalPoint vertex;
};

/// Scans w over {1..w_bound}^m in lexicographic order and returns the first
/// weight vector whose polyhedron has a fractional vertex, together with
/// that vertex. Absent when every scanned polyhedron is integral (guaranteed
/// when M is totally unimodular). Subject to the same size cap as
/// find_tu_violation.
std::optional<FractionalVertexWitness>
fractional_vertex_search(const IntegerMatrix& m, Int w_bound);

std::string to_string(const Rational& r);
std::string to_string(const RationalPoint& p);

}  // namespace coveralg
