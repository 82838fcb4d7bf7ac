#include "coveralg/exact_linear.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace coveralg {

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty()) return IntegerMatrix(0, 1);
    const std::size_t m = rows.size();
    const std::size_t n = rows.front().size();
    for (const auto& r : rows)
        if (r.size() != n)
            throw std::invalid_argument("IntegerMatrix: ragged row lengths");
    IntegerMatrix out(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.at(i, j) = rows[i][j];
    return out;
}

IntegerMatrix IntegerMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                                       const std::vector<std::size_t>& col_idx) const {
    IntegerMatrix out(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            out.at(i, j) = at(row_idx[i], col_idx[j]);
    return out;
}

namespace {

// Bareiss elimination: all divisions are exact, intermediate entries are
// minors of the input matrix.
template <typename T>
T bareiss_determinant(std::vector<std::vector<T>> a) {
    const std::size_t k = a.size();
    if (k == 0) return T(1);
    int sign = 1;
    T prev(1);
    for (std::size_t c = 0; c + 1 < k; ++c) {
        std::size_t pivot = c;
        while (pivot < k && a[pivot][c] == 0) ++pivot;
        if (pivot == k) return T(0);
        if (pivot != c) {
            std::swap(a[pivot], a[c]);
            sign = -sign;
        }
        for (std::size_t r = c + 1; r < k; ++r) {
            for (std::size_t j = c + 1; j < k; ++j)
                a[r][j] = (a[r][j] * a[c][c] - a[r][c] * a[c][j]) / prev;
            a[r][c] = T(0);
        }
        prev = a[c][c];
    }
    return sign > 0 ? a[k - 1][k - 1] : -a[k - 1][k - 1];
}

std::vector<std::vector<BigInt>> to_nested(const IntegerMatrix& m,
                                           const std::vector<std::size_t>& rows,
                                           const std::vector<std::size_t>& cols) {
    std::vector<std::vector<BigInt>> a(rows.size(), std::vector<BigInt>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            a[i][j] = m.at(rows[i], cols[j]);
    return a;
}

// Iterates k-subsets of {0..limit-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t limit) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] + (k - i) < limit) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    return idx;
}

}  // namespace

BigInt determinant(const IntegerMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant: matrix is not square");
    std::vector<std::size_t> all_rows = first_combination(m.rows());
    return bareiss_determinant(to_nested(m, all_rows, all_rows));
}

bool is_unimodular(const IntegerMatrix& m) {
    if (m.rows() > m.cols())
        throw std::invalid_argument("is_unimodular: requires rows <= cols");
    if (m.rows() == 0) return true;
    auto cols = first_combination(m.rows());
    auto rows = first_combination(m.rows());
    do {
        BigInt d = bareiss_determinant(to_nested(m, rows, cols));
        if (d > 1 || d < -1) return false;
    } while (next_combination(cols, m.cols()));
    return true;
}

std::optional<TUWitness> find_tu_violation(const IntegerMatrix& m) {
    if (std::min(m.rows(), m.cols()) > kTuSizeCap)
        throw SizeCapError("tu check: size cap exceeded (min(rows,cols) > " +
                           std::to_string(kTuSizeCap) + ")");
    // 1x1: any entry outside {-1,0,1} is already a witness.
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) > 1 || m.at(i, j) < -1)
                return TUWitness{{i}, {j}, m.at(i, j)};
    // All entries are now 0/+-1, so Hadamard bounds keep every subdeterminant
    // far inside int64 range up to the size cap.
    for (std::size_t k = 2; k <= std::min(m.rows(), m.cols()); ++k) {
        auto rows = first_combination(k);
        do {
            auto cols = first_combination(k);
            do {
                std::vector<std::vector<Int>> a(k, std::vector<Int>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        a[i][j] = static_cast<Int>(m.at(rows[i], cols[j]));
                Int d = bareiss_determinant(std::move(a));
                if (d > 1 || d < -1)
                    return TUWitness{rows, cols, BigInt(d)};
            } while (next_combination(cols, m.cols()));
        } while (next_combination(rows, m.rows()));
    }
    return std::nullopt;
}

bool is_totally_unimodular(const IntegerMatrix& m) {
    return !find_tu_violation(m).has_value();
}

bool RationalPoint::is_integral() const {
    for (const auto& x : coordinates)
        if (denominator(x) != 1) return false;
    return true;
}

BigInt RationalPoint::denominator_lcm() const {
    BigInt l = 1;
    for (const auto& x : coordinates) l = lcm(l, BigInt(denominator(x)));
    return l;
}

namespace {

// Gauss-Jordan over exact rationals; nullopt when the system is singular.
std::optional<std::vector<Rational>> solve_square(
    std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t k = a.size();
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t pivot = c;
        while (pivot < k && a[pivot][c] == 0) ++pivot;
        if (pivot == k) return std::nullopt;
        std::swap(a[pivot], a[c]);
        std::swap(b[pivot], b[c]);
        const Rational inv = Rational(1) / a[c][c];
        for (std::size_t j = c; j < k; ++j) a[c][j] *= inv;
        b[c] *= inv;
        for (std::size_t r = 0; r < k; ++r) {
            if (r == c || a[r][c] == 0) continue;
            const Rational f = a[r][c];
            for (std::size_t j = c; j < k; ++j) a[r][j] -= f * a[c][j];
            b[r] -= f * b[c];
        }
    }
    return b;
}

}  // namespace

std::vector<RationalPoint> enumerate_vertices(const IntegerMatrix& m,
                                              const std::vector<Int>& w) {
    const std::size_t rows = m.rows(), n = m.cols();
    if (w.size() != rows)
        throw std::invalid_argument("enumerate_vertices: weight length != row count");
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (m.at(i, j) < 0)
                throw std::invalid_argument("enumerate_vertices: negative entry");

    // Constraint system: m edge rows (M_i . c >= w_i) then n bound rows (c_j >= 0).
    const std::size_t total = rows + n;
    auto constraint_row = [&](std::size_t i) {
        std::vector<Rational> r(n);
        if (i < rows)
            for (std::size_t j = 0; j < n; ++j) r[j] = Rational(m.at(i, j));
        else
            r[i - rows] = 1;
        return r;
    };
    auto constraint_rhs = [&](std::size_t i) {
        return i < rows ? Rational(w[i]) : Rational(0);
    };

    std::set<std::vector<Rational>> seen;
    auto idx = first_combination(n);
    do {
        std::vector<std::vector<Rational>> a;
        std::vector<Rational> b;
        a.reserve(n);
        b.reserve(n);
        for (std::size_t i : idx) {
            a.push_back(constraint_row(i));
            b.push_back(constraint_rhs(i));
        }
        auto x = solve_square(std::move(a), std::move(b));
        if (!x) continue;
        bool feasible = true;
        for (std::size_t j = 0; j < n && feasible; ++j)
            if ((*x)[j] < 0) feasible = false;
        for (std::size_t i = 0; i < rows && feasible; ++i) {
            Rational s = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (m.at(i, j) != 0) s += Rational(m.at(i, j)) * (*x)[j];
            if (s < w[i]) feasible = false;
        }
        if (feasible) seen.insert(*x);
    } while (next_combination(idx, total));

    std::vector<RationalPoint> out;
    out.reserve(seen.size());
    for (auto& v : seen) out.push_back(RationalPoint{v});
    return out;
}

std::optional<RationalPoint> find_fractional_vertex(const IntegerMatrix& m,
                                                    const std::vector<Int>& w) {
    for (auto& v : enumerate_vertices(m, w))
        if (!v.is_integral()) return v;
    return std::nullopt;
}

bool is_integral_polyhedron(const IntegerMatrix& m, const std::vector<Int>& w) {
    return !find_fractional_vertex(m, w).has_value();
}

std::optional<FractionalVertexWitness>
fractional_vertex_search(const IntegerMatrix& m, Int w_bound) {
    if (std::min(m.rows(), m.cols()) > kTuSizeCap)
        throw SizeCapError("fractional vertex search: size cap exceeded");
    if (w_bound < 1)
        throw std::invalid_argument("fractional_vertex_search: w_bound must be >= 1");
    std::vector<Int> w(m.rows(), 1);
    while (true) {
        if (auto v = find_fractional_vertex(m, w))
            return FractionalVertexWitness{w, *v};
        // next w in lexicographic order over {1..w_bound}^m
        std::size_t i = m.rows();
        while (i > 0 && w[i - 1] == w_bound) w[--i] = 1;
        if (i == 0) return std::nullopt;
        ++w[i - 1];
    }
}

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

std::string to_string(const RationalPoint& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.coordinates.size(); ++i) {
        if (i) out += ", ";
        out += to_string(p.coordinates[i]);
    }
    return out + ")";
}

}  // namespace coveralg
