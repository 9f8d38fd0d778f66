#pragma once

#include "gdbialg/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

namespace gdbialg {

// Coordinate vector over Q.  Length is fixed at construction.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t dim) : c_(dim) {}
    explicit Vector(std::vector<Scalar> coords) : c_(std::move(coords)) {}
    Vector(std::initializer_list<Scalar> coords) : c_(coords) {}

    static Vector basis(std::size_t dim, std::size_t i);

    std::size_t dim() const { return c_.size(); }
    const Scalar& operator[](std::size_t i) const { return c_[i]; }
    Scalar& operator[](std::size_t i) { return c_[i]; }
    const std::vector<Scalar>& coords() const { return c_; }

    bool is_zero() const;

    Vector& operator+=(const Vector& o);
    Vector& operator-=(const Vector& o);
    Vector& operator*=(const Scalar& s);
    friend Vector operator+(Vector a, const Vector& b) { a += b; return a; }
    friend Vector operator-(Vector a, const Vector& b) { a -= b; return a; }
    friend Vector operator*(const Scalar& s, Vector v) { v *= s; return v; }
    Vector operator-() const;

    friend bool operator==(const Vector& a, const Vector& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Vector& a, const Vector& b) { return !(a == b); }

    std::string str() const;  // "(a, b, ...)"

private:
    std::vector<Scalar> c_;
};

// Rectangular matrix; column j holds the image of the j-th basis vector.
class LinearMap {
public:
    LinearMap() : rows_(0), cols_(0) {}
    LinearMap(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), m_(rows * cols) {}

    static LinearMap identity(std::size_t n);
    static LinearMap zero(std::size_t rows, std::size_t cols) { return LinearMap(rows, cols); }
    static LinearMap from_columns(const std::vector<Vector>& cols);
    // Row-major entry list, e.g. {{a,b},{c,d}}.
    static LinearMap from_rows(std::initializer_list<std::initializer_list<Scalar>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Scalar& at(std::size_t r, std::size_t c) const { return m_[r * cols_ + c]; }
    Scalar& at(std::size_t r, std::size_t c) { return m_[r * cols_ + c]; }

    Vector apply(const Vector& v) const;
    // For 1 x n functionals: the single coordinate of apply(v).
    Scalar functional(const Vector& v) const;
    Vector column(std::size_t j) const;
    Vector row(std::size_t i) const;

    LinearMap compose(const LinearMap& inner) const;  // (*this) o inner
    LinearMap scaled(const Scalar& s) const;
    LinearMap plus(const LinearMap& o) const;
    std::optional<LinearMap> inverse() const;

    bool is_zero() const;
    friend bool operator==(const LinearMap& a, const LinearMap& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.m_ == b.m_;
    }
    friend bool operator!=(const LinearMap& a, const LinearMap& b) { return !(a == b); }

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> m_;
};

// Full affine solution set of a linear system: particular + span(kernel).
// Inconsistency is a value, not an error.
struct AffineSolutionSet {
    bool consistent = false;
    Vector particular;             // defined iff consistent
    std::vector<Vector> kernel;    // basis of the homogeneous solutions

    std::size_t degrees_of_freedom() const { return kernel.size(); }
    bool contains(const Vector& v) const;
};

// One equation per row: coeffs . x = rhs.
AffineSolutionSet solve_linear(const std::vector<std::pair<Vector, Scalar>>& system,
                               std::size_t unknowns);

// Incremental builder for the same.
class LinearSystem {
public:
    explicit LinearSystem(std::size_t unknowns) : unknowns_(unknowns) {}
    void add(Vector coeffs, Scalar rhs);
    std::size_t unknowns() const { return unknowns_; }
    AffineSolutionSet solve() const { return solve_linear(rows_, unknowns_); }

private:
    std::size_t unknowns_;
    std::vector<std::pair<Vector, Scalar>> rows_;
};

// Rank of the span of a family of vectors.
std::size_t span_rank(const std::vector<Vector>& vectors);

bool in_span(const Vector& v, const std::vector<Vector>& basis);

}  // namespace gdbialg
