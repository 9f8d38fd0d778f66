#pragma once

#include "gdbialg/algebras.hpp"

#include <map>

namespace gdbialg {

// The quadratic lambda-bracket attached to a candidate (dim, o, [.,.]):
//
//   [a_l b] = del (b o a) + l (b * a) + [b, a],   b * a := a o b + b o a,
//
// extended to K[del] V by the sesquilinearity rules [del a _l b] = -l [a_l b]
// and [a _l del b] = (l + del)[a_l b].  For the Jacobi identity, mu is a
// second commuting formal variable, not a substitution of lambda: the
// identity is checked in the three symbols del, lambda, mu, with del acting
// on coefficients through the usual additive shift (lambda + del appears in
// skew-symmetry, lambda + mu in Jacobi).
//
// Monomial exponents: (d, l, m) stands for del^d lambda^l mu^m.
struct ConformalMonomial {
    unsigned d = 0, l = 0, m = 0;
    friend auto operator<=>(const ConformalMonomial&, const ConformalMonomial&) = default;
    std::string str() const;
};

// Polynomial in del, lambda, mu with exact rational coefficients.
class PolyScalar {
public:
    static PolyScalar zero() { return {}; }
    static PolyScalar constant(const Scalar& c);
    static PolyScalar partial();  // del
    static PolyScalar lambda();
    static PolyScalar mu();

    void add_term(const ConformalMonomial& mono, const Scalar& c);
    bool is_zero() const { return terms_.empty(); }
    const std::map<ConformalMonomial, Scalar>& terms() const { return terms_; }

    PolyScalar operator+(const PolyScalar& o) const;
    PolyScalar operator-(const PolyScalar& o) const;
    PolyScalar operator*(const PolyScalar& o) const;
    PolyScalar pow(unsigned e) const;
    PolyScalar negated() const;

    std::string str() const;

private:
    std::map<ConformalMonomial, Scalar> terms_;
};

// Element of K[del, lambda, mu] tensor V: finitely many monomials, each with
// an exact coefficient vector.
class PolyVector {
public:
    PolyVector() : dim_(0) {}
    explicit PolyVector(std::size_t dim) : dim_(dim) {}
    static PolyVector from_vector(const Vector& v);  // constant monomial

    std::size_t dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<ConformalMonomial, Vector>& terms() const { return terms_; }

    void add_term(const ConformalMonomial& mono, const Vector& v);
    PolyVector operator+(const PolyVector& o) const;
    PolyVector operator-(const PolyVector& o) const;
    PolyVector scaled(const PolyScalar& p) const;
    PolyVector apply_partial() const;  // multiply by del

    // lambda |-> -lambda - del (the shift in conformal skew-symmetry).
    PolyVector substitute_lambda_neg_shift() const;

    std::string str(const std::vector<std::string>& basis_names = {}) const;

private:
    std::size_t dim_;
    std::map<ConformalMonomial, Vector> terms_;
};

// Holds the source data (validity not required: this is the oracle used to
// cross-check candidates) and the derived symmetric part b * a = a o b + b o a.
class QuadraticLambdaBracket {
public:
    explicit QuadraticLambdaBracket(GDBialgebra source);

    const GDBialgebra& source() const { return src_; }

    // [u _x v] for a formal variable x given as a polynomial (lambda, mu, or
    // lambda + mu).  Fully sesquilinear in the del-exponents of u and v.
    PolyVector bracket(const PolyVector& u, const PolyVector& v, const PolyScalar& x) const;
    // [u _lambda v]
    PolyVector bracket_lambda(const PolyVector& u, const PolyVector& v) const;

private:
    GDBialgebra src_;
    BilinearMap star_;  // star(a, b) = b * a = a o b + b o a ... stored as (i,j) -> e_j*e_i
};

// Conformal skew-symmetry [b_l a] = -[a_{-l-del} b] on basis pairs.
ValidationReport check_conformal_skew(const QuadraticLambdaBracket& B);
ValidationReport check_conformal_skew(const GDBialgebra& A);

// Conformal Jacobi [a_l [b_m c]] = [[a_l b]_{l+m} c] + [b_m [a_l c]] on basis
// triples, as an exact polynomial identity in del, lambda, mu.
ValidationReport check_conformal_jacobi(const QuadraticLambdaBracket& B);
ValidationReport check_conformal_jacobi(const GDBialgebra& A);

}  // namespace gdbialg
