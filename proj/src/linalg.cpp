#include "gdbialg/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace gdbialg {

Vector Vector::basis(std::size_t dim, std::size_t i) {
    if (i >= dim) throw std::invalid_argument("Vector::basis: index out of range");
    Vector v(dim);
    v[i] = Scalar(1);
    return v;
}

bool Vector::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

Vector& Vector::operator+=(const Vector& o) {
    if (dim() != o.dim()) throw std::invalid_argument("Vector: dimension mismatch in +");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Vector& Vector::operator-=(const Vector& o) {
    if (dim() != o.dim()) throw std::invalid_argument("Vector: dimension mismatch in -");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Vector& Vector::operator*=(const Scalar& s) {
    for (auto& x : c_) x *= s;
    return *this;
}

Vector Vector::operator-() const {
    Vector v(*this);
    for (auto& x : v.c_) x = -x;
    return v;
}

std::string Vector::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ", ";
        os << c_[i];
    }
    os << ")";
    return os.str();
}

LinearMap LinearMap::identity(std::size_t n) {
    LinearMap m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

LinearMap LinearMap::from_columns(const std::vector<Vector>& cols) {
    if (cols.empty()) return LinearMap(0, 0);
    LinearMap m(cols[0].dim(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].dim() != m.rows_)
            throw std::invalid_argument("LinearMap::from_columns: ragged columns");
        for (std::size_t i = 0; i < m.rows_; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

LinearMap LinearMap::from_rows(std::initializer_list<std::initializer_list<Scalar>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.begin()->size() : 0;
    LinearMap m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("LinearMap::from_rows: ragged rows");
        std::size_t j = 0;
        for (const auto& x : row) m.at(i, j++) = x;
        ++i;
    }
    return m;
}

Vector LinearMap::apply(const Vector& v) const {
    if (v.dim() != cols_) throw std::invalid_argument("LinearMap::apply: dimension mismatch");
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Scalar acc(0);
        for (std::size_t j = 0; j < cols_; ++j) {
            if (!at(i, j).is_zero() && !v[j].is_zero()) acc += at(i, j) * v[j];
        }
        out[i] = acc;
    }
    return out;
}

Scalar LinearMap::functional(const Vector& v) const {
    if (rows_ != 1) throw std::invalid_argument("LinearMap::functional: not a 1 x n map");
    return apply(v)[0];
}

Vector LinearMap::column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

Vector LinearMap::row(std::size_t i) const {
    Vector v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

LinearMap LinearMap::compose(const LinearMap& inner) const {
    if (cols_ != inner.rows_) throw std::invalid_argument("LinearMap::compose: shape mismatch");
    LinearMap out(rows_, inner.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < inner.cols_; ++j)
                out.at(i, j) += at(i, k) * inner.at(k, j);
        }
    return out;
}

LinearMap LinearMap::scaled(const Scalar& s) const {
    LinearMap out(*this);
    for (auto& x : out.m_) x *= s;
    return out;
}

LinearMap LinearMap::plus(const LinearMap& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("LinearMap::plus: shape mismatch");
    LinearMap out(*this);
    for (std::size_t i = 0; i < m_.size(); ++i) out.m_[i] += o.m_[i];
    return out;
}

bool LinearMap::is_zero() const {
    for (const auto& x : m_)
        if (!x.is_zero()) return false;
    return true;
}

namespace {

// Gauss-Jordan on an augmented matrix (rows x (unknowns+1)).  Returns pivot
// column per row in `pivots` and the matrix in RREF.
void rref(std::vector<std::vector<Scalar>>& a, std::size_t width, std::vector<std::size_t>& pivots) {
    std::size_t row = 0;
    for (std::size_t col = 0; col < width && row < a.size(); ++col) {
        std::size_t sel = row;
        while (sel < a.size() && a[sel][col].is_zero()) ++sel;
        if (sel == a.size()) continue;
        std::swap(a[sel], a[row]);
        Scalar inv = a[row][col].reciprocal();
        for (auto& x : a[row]) x *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            Scalar f = a[r][col];
            for (std::size_t c = 0; c <= width; ++c) a[r][c] -= f * a[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
}

}  // namespace

std::optional<LinearMap> LinearMap::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    std::size_t n = rows_;
    std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = at(i, j);
        a[i][n + i] = Scalar(1);
    }
    std::size_t row = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = row;
        while (sel < n && a[sel][col].is_zero()) ++sel;
        if (sel == n) return std::nullopt;
        std::swap(a[sel], a[row]);
        Scalar inv = a[row][col].reciprocal();
        for (auto& x : a[row]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            Scalar f = a[r][col];
            for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= f * a[row][c];
        }
        ++row;
    }
    LinearMap out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = a[i][n + j];
    return out;
}

AffineSolutionSet solve_linear(const std::vector<std::pair<Vector, Scalar>>& system,
                               std::size_t unknowns) {
    std::vector<std::vector<Scalar>> a;
    a.reserve(system.size());
    for (const auto& [coeffs, rhs] : system) {
        if (coeffs.dim() != unknowns)
            throw std::invalid_argument("solve_linear: row width mismatch");
        std::vector<Scalar> row(unknowns + 1);
        for (std::size_t j = 0; j < unknowns; ++j) row[j] = coeffs[j];
        row[unknowns] = rhs;
        a.push_back(std::move(row));
    }

    std::vector<std::size_t> pivots;
    rref(a, unknowns, pivots);

    AffineSolutionSet out;
    // Inconsistent iff some row is (0 ... 0 | nonzero).
    for (const auto& row : a) {
        bool all_zero = true;
        for (std::size_t j = 0; j < unknowns; ++j)
            if (!row[j].is_zero()) { all_zero = false; break; }
        if (all_zero && !row[unknowns].is_zero()) return out;
    }
    out.consistent = true;

    std::vector<bool> is_pivot(unknowns, false);
    for (auto p : pivots) is_pivot[p] = true;

    Vector part(unknowns);
    for (std::size_t r = 0; r < pivots.size(); ++r) part[pivots[r]] = a[r][unknowns];
    out.particular = part;

    for (std::size_t free = 0; free < unknowns; ++free) {
        if (is_pivot[free]) continue;
        Vector k(unknowns);
        k[free] = Scalar(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) k[pivots[r]] = -a[r][free];
        out.kernel.push_back(std::move(k));
    }
    return out;
}

bool AffineSolutionSet::contains(const Vector& v) const {
    if (!consistent) return false;
    Vector diff = v - particular;
    return in_span(diff, kernel);
}

void LinearSystem::add(Vector coeffs, Scalar rhs) {
    if (coeffs.dim() != unknowns_)
        throw std::invalid_argument("LinearSystem::add: row width mismatch");
    rows_.emplace_back(std::move(coeffs), std::move(rhs));
}

std::size_t span_rank(const std::vector<Vector>& vectors) {
    if (vectors.empty()) return 0;
    std::size_t width = vectors[0].dim();
    std::vector<std::vector<Scalar>> a;
    for (const auto& v : vectors) {
        std::vector<Scalar> row(width + 1);
        for (std::size_t j = 0; j < width; ++j) row[j] = v[j];
        a.push_back(std::move(row));
    }
    std::vector<std::size_t> pivots;
    rref(a, width, pivots);
    return pivots.size();
}

bool in_span(const Vector& v, const std::vector<Vector>& basis) {
    if (v.is_zero()) return true;
    // Solve sum_i t_i basis_i = v for t.
    std::vector<std::pair<Vector, Scalar>> rows;
    for (std::size_t coord = 0; coord < v.dim(); ++coord) {
        Vector coeffs(basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) coeffs[i] = basis[i][coord];
        rows.emplace_back(std::move(coeffs), v[coord]);
    }
    return solve_linear(rows, basis.size()).consistent;
}

}  // namespace gdbialg
