#include "gdbialg/flag.hpp"

#include <array>
#include <map>
#include <stdexcept>

namespace gdbialg {

namespace {

void record(ValidationReport& rep, const std::string& cond, std::vector<std::size_t> idx,
            Vector residual) {
    if (rep.has(cond)) return;
    rep.violations.push_back({cond, std::move(idx), std::move(residual), {}});
}

void record_scalar(ValidationReport& rep, const std::string& cond, std::vector<std::size_t> idx,
                   Scalar r) {
    record(rep, cond, std::move(idx), Vector{std::move(r)});
}

}  // namespace

NovikovFlagDatum NovikovFlagDatum::zero(std::size_t dim) {
    return {LinearMap::zero(1, dim), LinearMap::zero(1, dim), LinearMap::zero(dim, dim),
            LinearMap::zero(dim, dim), Vector(dim), Scalar(0)};
}

GDFlagDatum GDFlagDatum::zero(std::size_t dim) {
    return {NovikovFlagDatum::zero(dim), LinearMap::zero(1, dim), LinearMap::zero(dim, dim)};
}

ValidationReport check_novikov_flag(const NovikovAlgebra& A, const NovikovFlagDatum& d) {
    std::size_t n = A.dim;
    if (d.S.rows() != n || d.T.rows() != n || d.p.cols() != n || d.q.cols() != n ||
        d.a1.dim() != n)
        throw DimensionMismatchError("check_novikov_flag: shapes");
    ValidationReport rep;

    auto P = [&](const Vector& a, const Vector& b) { return A.product.eval(a, b); };
    auto S = [&](const Vector& a) { return d.S.apply(a); };
    auto T = [&](const Vector& a) { return d.T.apply(a); };
    auto p = [&](const Vector& a) { return d.p.functional(a); };
    auto q = [&](const Vector& a) { return d.q.functional(a); };
    const Vector& a1 = d.a1;
    const Scalar& k = d.k;

    for (std::size_t i = 0; i < n; ++i) {
        Vector a = Vector::basis(n, i);
        // (FN4) T^2(a) = T(S(a)) - S(T(a)) + a o a1 + (q(a) - 2p(a))a1 + kT(a)
        Vector fn4 = T.operator()(T(a)) - T(S(a)) + S(T(a)) - P(a, a1) -
                     (q(a) - Scalar(2) * p(a)) * a1 - k * T(a);
        if (!fn4.is_zero()) record(rep, "FN4", {i}, fn4);
        // (FN5) p(S(a)) - p(T(a)) = q(T(a)) + k(p(a) - q(a))
        Scalar fn5 = p(S(a)) - p(T(a)) - q(T(a)) - k * (p(a) - q(a));
        if (!fn5.is_zero()) record_scalar(rep, "FN5", {i}, fn5);
        // (FN9) T(S(a)) = a1 o a + kS(a) - q(a)a1
        Vector fn9 = T(S(a)) - P(a1, a) - k * S(a) + q(a) * a1;
        if (!fn9.is_zero()) record(rep, "FN9", {i}, fn9);
        // (FN10) p(S(a)) = 0
        Scalar fn10 = p(S(a));
        if (!fn10.is_zero()) record_scalar(rep, "FN10", {i}, fn10);

        for (std::size_t j = 0; j < n; ++j) {
            Vector b = Vector::basis(n, j);
            // (FN1) p(a o b) = p(b o a),  q(a o b) = q(a)q(b)
            Scalar fn1a = p(P(a, b)) - p(P(b, a));
            if (!fn1a.is_zero()) record_scalar(rep, "FN1", {i, j}, fn1a);
            Scalar fn1b = q(P(a, b)) - q(a) * q(b);
            if (!fn1b.is_zero()) record_scalar(rep, "FN1", {i, j}, fn1b);
            // (FN2) S(a o b) = S(a) o b + a o S(b) + (q(a) - p(a))S(b) + q(b)T(a) - T(a) o b
            Vector fn2 = S(P(a, b)) - P(S(a), b) - P(a, S(b)) - (q(a) - p(a)) * S(b) -
                         q(b) * T(a) + P(T(a), b);
            if (!fn2.is_zero()) record(rep, "FN2", {i, j}, fn2);
            // (FN3) T(a o b) - T(b o a) = p(b)T(a) - p(a)T(b) + a o T(b) - b o T(a)
            Vector fn3 = T(P(a, b)) - T(P(b, a)) - p(b) * T(a) + p(a) * T(b) - P(a, T(b)) +
                         P(b, T(a));
            if (!fn3.is_zero()) record(rep, "FN3", {i, j}, fn3);
            // (FN6) S(a) o b + q(a)S(b) = S(b) o a + q(b)S(a)
            Vector fn6 = P(S(a), b) + q(a) * S(b) - P(S(b), a) - q(b) * S(a);
            if (!fn6.is_zero()) record(rep, "FN6", {i, j}, fn6);
            // (FN7) T(a o b) = T(a) o b + p(a)S(b)
            Vector fn7 = T(P(a, b)) - P(T(a), b) - p(a) * S(b);
            if (!fn7.is_zero()) record(rep, "FN7", {i, j}, fn7);
            // (FN8) p(a o b) = p(a)q(b)
            Scalar fn8 = p(P(a, b)) - p(a) * q(b);
            if (!fn8.is_zero()) record_scalar(rep, "FN8", {i, j}, fn8);
        }
    }
    return rep;
}

ValidationReport check_gd_flag(const GDBialgebra& A, const GDFlagDatum& d) {
    std::size_t n = A.dim;
    if (d.eta.cols() != n || d.D.rows() != n)
        throw DimensionMismatchError("check_gd_flag: shapes");

    // (GF0): Novikov flag datum + twisted derivation.
    ValidationReport rep = check_novikov_flag(A.novikov(), d.nov);
    rep.merge(check_twisted_derivation(A.lie(), d.eta, d.D));

    auto P = [&](const Vector& a, const Vector& b) { return A.product.eval(a, b); };
    auto Br = [&](const Vector& a, const Vector& b) { return A.bracket.eval(a, b); };
    auto S = [&](const Vector& a) { return d.nov.S.apply(a); };
    auto T = [&](const Vector& a) { return d.nov.T.apply(a); };
    auto D = [&](const Vector& a) { return d.D.apply(a); };
    auto p = [&](const Vector& a) { return d.nov.p.functional(a); };
    auto q = [&](const Vector& a) { return d.nov.q.functional(a); };
    auto eta = [&](const Vector& a) { return d.eta.functional(a); };
    const Vector& a1 = d.nov.a1;
    const Scalar& k = d.nov.k;

    for (std::size_t i = 0; i < n; ++i) {
        Vector a = Vector::basis(n, i);
        // (GF5) [a,a1] - kD(a) - D(S(a)) + T(D(a)) + 2 eta(a) a1 + S(D(a)) = 0
        Vector gf5 = Br(a, a1) - k * D(a) - D(S(a)) + T(D(a)) + (Scalar(2) * eta(a)) * a1 +
                     S(D(a));
        if (!gf5.is_zero()) record(rep, "GF5", {i}, gf5);
        // (GF6) k eta(a) - eta(S(a)) + p(D(a)) + q(D(a)) = 0
        Scalar gf6 = k * eta(a) - eta(S(a)) + p(D(a)) + q(D(a));
        if (!gf6.is_zero()) record_scalar(rep, "GF6", {i}, gf6);

        for (std::size_t j = 0; j < n; ++j) {
            Vector b = Vector::basis(n, j);
            // (GF1) [a,T(b)] - p(b)D(a) - D(b o a) + T([b,a]) + D(b) o a
            //       + eta(b)S(a) + b o D(a) + eta(a)T(b) = 0
            Vector gf1 = Br(a, T(b)) - p(b) * D(a) - D(P(b, a)) + T(Br(b, a)) + P(D(b), a) +
                         eta(b) * S(a) + P(b, D(a)) + eta(a) * T(b);
            if (!gf1.is_zero()) record(rep, "GF1", {i, j}, gf1);
            // (GF2) p([b,a]) + eta(b)q(a) - eta(b o a) = 0
            Scalar gf2 = p(Br(b, a)) + eta(b) * q(a) - eta(P(b, a));
            if (!gf2.is_zero()) record_scalar(rep, "GF2", {i, j}, gf2);
            // (GF3) [a,S(b)] - q(b)D(a) - [b,S(a)] + q(a)D(b) + D(a) o b + eta(a)S(b)
            //       - D(b) o a - eta(b)S(a) - S([a,b]) = 0
            Vector gf3 = Br(a, S(b)) - q(b) * D(a) - Br(b, S(a)) + q(a) * D(b) + P(D(a), b) +
                         eta(a) * S(b) - P(D(b), a) - eta(b) * S(a) - S(Br(a, b));
            if (!gf3.is_zero()) record(rep, "GF3", {i, j}, gf3);
            // (GF4) q([a,b]) = 0
            Scalar gf4 = q(Br(a, b));
            if (!gf4.is_zero()) record_scalar(rep, "GF4", {i, j}, gf4);
        }
    }
    return rep;
}

GDExtendingDatum induced_extending_datum(const GDFlagDatum& d) {
    std::size_t n = d.dim();
    GDExtendingDatum e = GDExtendingDatum::zero(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        e.novikov.l_A.at(i, 0, 0) = d.nov.p.at(0, i);
        e.novikov.r_A.at(i, 0, 0) = d.nov.q.at(0, i);
        e.lie.tri_l.at(0, i, 0) = d.eta.at(0, i);
        for (std::size_t k = 0; k < n; ++k) {
            e.novikov.l_V.at(0, i, k) = d.nov.S.at(k, i);
            e.novikov.r_V.at(0, i, k) = d.nov.T.at(k, i);
            e.lie.tri_r.at(0, i, k) = d.D.at(k, i);
        }
    }
    for (std::size_t k = 0; k < n; ++k) e.novikov.f.at(0, 0, k) = d.nov.a1[k];
    e.novikov.star.at(0, 0, 0) = d.nov.k;
    return e;
}

std::optional<GDFlagDatum> flag_from_extending(const GDExtendingDatum& e) {
    if (e.dimV() != 1) return std::nullopt;
    if (!e.lie.h.is_zero() || !e.lie.curly.is_zero()) return std::nullopt;
    std::size_t n = e.dimA();
    GDFlagDatum d = GDFlagDatum::zero(n);
    for (std::size_t i = 0; i < n; ++i) {
        d.nov.p.at(0, i) = e.novikov.l_A.at(i, 0, 0);
        d.nov.q.at(0, i) = e.novikov.r_A.at(i, 0, 0);
        d.eta.at(0, i) = e.lie.tri_l.at(0, i, 0);
        for (std::size_t k = 0; k < n; ++k) {
            d.nov.S.at(k, i) = e.novikov.l_V.at(0, i, k);
            d.nov.T.at(k, i) = e.novikov.r_V.at(0, i, k);
            d.D.at(k, i) = e.lie.tri_r.at(0, i, k);
        }
    }
    for (std::size_t k = 0; k < n; ++k) d.nov.a1[k] = e.novikov.f.at(0, 0, k);
    d.nov.k = e.novikov.star.at(0, 0, 0);
    return d;
}

GDBialgebra build_flag_extension_unchecked(const GDBialgebra& A, const GDFlagDatum& d,
                                           const std::string& x_name) {
    return unified_product_unchecked(A, induced_extending_datum(d), {x_name});
}

GDBialgebra build_flag_extension(const GDBialgebra& A, const GDFlagDatum& d,
                                 const std::string& x_name) {
    ValidationReport rep = check_gd_flag(A, d);
    if (!rep.pass()) throw InvalidFlagDatumError(std::move(rep));
    return build_flag_extension_unchecked(A, d, x_name);
}

FlagEquivalenceWitness identity_flag_witness(std::size_t dim) {
    return {Vector(dim), Scalar(1)};
}

FlagEquivalenceWitness compose_flag_witnesses(const FlagEquivalenceWitness& w1,
                                              const FlagEquivalenceWitness& w2) {
    // lambda = lambda1 + lambda2 o mu1 and mu = mu2 o mu1 specialize to
    // a0 = a0_1 + beta1 a0_2, beta = beta1 beta2.
    return {w1.a0 + w1.beta * w2.a0, w1.beta * w2.beta};
}

FlagEquivalenceWitness inverse_flag_witness(const FlagEquivalenceWitness& w) {
    Scalar inv = w.beta.reciprocal();
    return {(-inv) * w.a0, inv};
}

ValidationReport check_flag_equivalence(const GDBialgebra& A, const GDFlagDatum& d,
                                        const GDFlagDatum& dp,
                                        const FlagEquivalenceWitness& w) {
    std::size_t n = A.dim;
    ValidationReport rep;
    if (w.beta.is_zero()) {
        record_scalar(rep, "beta", {}, Scalar(0));
        return rep;
    }

    for (std::size_t i = 0; i < n; ++i) {
        Scalar dp_ = d.nov.p.at(0, i) - dp.nov.p.at(0, i);
        if (!dp_.is_zero()) record_scalar(rep, "p", {i}, dp_);
        Scalar dq = d.nov.q.at(0, i) - dp.nov.q.at(0, i);
        if (!dq.is_zero()) record_scalar(rep, "q", {i}, dq);
        Scalar de = d.eta.at(0, i) - dp.eta.at(0, i);
        if (!de.is_zero()) record_scalar(rep, "eta", {i}, de);
    }

    auto P = [&](const Vector& a, const Vector& b) { return A.product.eval(a, b); };
    auto Br = [&](const Vector& a, const Vector& b) { return A.bracket.eval(a, b); };
    const Vector& a0 = w.a0;
    const Scalar& beta = w.beta;

    for (std::size_t i = 0; i < n; ++i) {
        Vector a = Vector::basis(n, i);
        // (FD1) S(a) = a0 o a + beta S'(a) - q(a) a0
        Vector fd1 = d.nov.S.apply(a) - P(a0, a) - beta * dp.nov.S.apply(a) +
                     d.nov.q.functional(a) * a0;
        if (!fd1.is_zero()) record(rep, "FD1", {i}, fd1);
        // (FD2) T(a) = a o a0 + beta T'(a) - p(a) a0
        Vector fd2 = d.nov.T.apply(a) - P(a, a0) - beta * dp.nov.T.apply(a) +
                     d.nov.p.functional(a) * a0;
        if (!fd2.is_zero()) record(rep, "FD2", {i}, fd2);
        // (FD5) D(a) = beta D'(a) + [a0, a] - eta(a) a0
        Vector fd5 = d.D.apply(a) - beta * dp.D.apply(a) - Br(a0, a) +
                     d.eta.functional(a) * a0;
        if (!fd5.is_zero()) record(rep, "FD5", {i}, fd5);
    }
    // (FD3) a1 = a0 o a0 + beta S'(a0) + beta T'(a0) + beta^2 a1' - k a0
    Vector fd3 = d.nov.a1 - P(a0, a0) - beta * dp.nov.S.apply(a0) - beta * dp.nov.T.apply(a0) -
                 (beta * beta) * dp.nov.a1 + d.nov.k * a0;
    if (!fd3.is_zero()) record(rep, "FD3", {}, fd3);
    // (FD4) k = beta k' + p(a0) + q(a0)
    Scalar fd4 = d.nov.k - beta * dp.nov.k - d.nov.p.functional(a0) - d.nov.q.functional(a0);
    if (!fd4.is_zero()) record_scalar(rep, "FD4", {}, fd4);
    return rep;
}

GDFlagDatum apply_flag_equivalence(const GDBialgebra& A, const GDFlagDatum& dp,
                                   const FlagEquivalenceWitness& w) {
    std::size_t n = A.dim;
    if (w.beta.is_zero()) throw std::invalid_argument("apply_flag_equivalence: beta = 0");
    GDFlagDatum d = GDFlagDatum::zero(n);
    d.nov.p = dp.nov.p;
    d.nov.q = dp.nov.q;
    d.eta = dp.eta;
    const Vector& a0 = w.a0;
    const Scalar& beta = w.beta;
    auto P = [&](const Vector& a, const Vector& b) { return A.product.eval(a, b); };
    auto Br = [&](const Vector& a, const Vector& b) { return A.bracket.eval(a, b); };

    std::vector<Vector> s_cols, t_cols, d_cols;
    for (std::size_t j = 0; j < n; ++j) {
        Vector a = Vector::basis(n, j);
        s_cols.push_back(P(a0, a) + beta * dp.nov.S.apply(a) - d.nov.q.functional(a) * a0);
        t_cols.push_back(P(a, a0) + beta * dp.nov.T.apply(a) - d.nov.p.functional(a) * a0);
        d_cols.push_back(beta * dp.D.apply(a) + Br(a0, a) - d.eta.functional(a) * a0);
    }
    d.nov.S = LinearMap::from_columns(s_cols);
    d.nov.T = LinearMap::from_columns(t_cols);
    d.D = LinearMap::from_columns(d_cols);
    // k before a1: FD3 references the transformed k.
    d.nov.k = beta * dp.nov.k + d.nov.p.functional(a0) + d.nov.q.functional(a0);
    d.nov.a1 = P(a0, a0) + beta * dp.nov.S.apply(a0) + beta * dp.nov.T.apply(a0) +
               (beta * beta) * dp.nov.a1 - d.nov.k * a0;
    return d;
}

// ---------------------------------------------------------------------------
// solve_flag_equivalence

namespace {

// Sparse polynomial in at most two parameters t0, t1 with exact coefficients.
struct Poly2 {
    std::map<std::array<int, 2>, Scalar> terms;

    static Poly2 constant(Scalar c) {
        Poly2 p;
        if (!c.is_zero()) p.terms[{0, 0}] = std::move(c);
        return p;
    }
    static Poly2 variable(int v) {
        Poly2 p;
        std::array<int, 2> e{0, 0};
        e[v] = 1;
        p.terms[e] = Scalar(1);
        return p;
    }
    void add_term(std::array<int, 2> e, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    Poly2 operator+(const Poly2& o) const {
        Poly2 out = *this;
        for (const auto& [e, c] : o.terms) out.add_term(e, c);
        return out;
    }
    Poly2 operator-(const Poly2& o) const {
        Poly2 out = *this;
        for (const auto& [e, c] : o.terms) out.add_term(e, -c);
        return out;
    }
    Poly2 operator*(const Poly2& o) const {
        Poly2 out;
        for (const auto& [e1, c1] : terms)
            for (const auto& [e2, c2] : o.terms)
                out.add_term({e1[0] + e2[0], e1[1] + e2[1]}, c1 * c2);
        return out;
    }
    Poly2 scaled(const Scalar& s) const {
        Poly2 out;
        for (const auto& [e, c] : terms) out.add_term(e, c * s);
        return out;
    }
    bool is_zero() const { return terms.empty(); }
    bool depends_on(int v) const {
        for (const auto& [e, c] : terms)
            if (e[v] > 0) return true;
        return false;
    }
    int degree(int v) const {
        int d = 0;
        for (const auto& [e, c] : terms) d = std::max(d, e[v]);
        return d;
    }
    Scalar eval(const Scalar& t0, const Scalar& t1) const {
        Scalar out(0);
        for (const auto& [e, c] : terms) {
            Scalar term = c;
            for (int i = 0; i < e[0]; ++i) term *= t0;
            for (int i = 0; i < e[1]; ++i) term *= t1;
            out += term;
        }
        return out;
    }
    // Substitute t0 = value, producing a polynomial in t1 only.
    Poly2 substitute0(const Scalar& value) const {
        Poly2 out;
        for (const auto& [e, c] : terms) {
            Scalar term = c;
            for (int i = 0; i < e[0]; ++i) term *= value;
            out.add_term({0, e[1]}, term);
        }
        return out;
    }
};

// All rational roots of a univariate polynomial (in variable v) of degree <= 2.
// Returns false if the polynomial is identically zero.
bool rational_roots(const Poly2& p, int v, std::vector<Scalar>& roots) {
    if (p.is_zero()) return false;
    Scalar c0(0), c1(0), c2(0);
    for (const auto& [e, c] : p.terms) {
        int d = e[v];
        if (e[1 - v] != 0) throw std::logic_error("rational_roots: polynomial not univariate");
        if (d == 0) c0 = c;
        else if (d == 1) c1 = c;
        else if (d == 2) c2 = c;
        else throw std::logic_error("rational_roots: degree > 2");
    }
    roots.clear();
    if (c2.is_zero()) {
        if (c1.is_zero()) return true;  // nonzero constant: no roots
        roots.push_back((-c0) / c1);
        return true;
    }
    Scalar disc = c1 * c1 - Scalar(4) * c2 * c0;
    Scalar r;
    if (!rational_sqrt(disc, r)) return true;  // no rational roots
    Scalar two_a = Scalar(2) * c2;
    roots.push_back(((-c1) + r) / two_a);
    if (!r.is_zero()) roots.push_back(((-c1) - r) / two_a);
    return true;
}

std::vector<Scalar> height_bounded_rationals(long long height) {
    std::vector<Scalar> out;
    out.push_back(Scalar(0));
    for (long long den = 1; den <= height; ++den)
        for (long long num = 1; num <= height; ++num) {
            if (boost::multiprecision::gcd(BigInt(num), BigInt(den)) != 1) continue;
            out.push_back(Scalar(num, den));
            out.push_back(Scalar(-num, den));
        }
    return out;
}

}  // namespace

std::optional<FlagEquivalenceWitness> solve_flag_equivalence(const GDBialgebra& A,
                                                             const GDFlagDatum& d,
                                                             const GDFlagDatum& dp,
                                                             const FlagSolveOptions& opt) {
    std::size_t n = A.dim;

    // Cheap rejection gate: the scalar functionals must agree exactly.
    if (d.nov.p != dp.nov.p || d.nov.q != dp.nov.q || d.eta != dp.eta) return std::nullopt;

    // Linear stage: FD1, FD2, FD4, FD5 are jointly linear in (a0, beta).
    // Unknowns z = (a0_0 .. a0_{n-1}, beta).
    LinearSystem sys(n + 1);
    for (std::size_t j = 0; j < n; ++j) {
        Vector ej = Vector::basis(n, j);
        Scalar qj = d.nov.q.functional(ej);
        Scalar pj = d.nov.p.functional(ej);
        Scalar etaj = d.eta.functional(ej);
        for (std::size_t t = 0; t < n; ++t) {
            // FD1 coordinate t: sum_i a0_i ((e_i o e_j)_t - q(e_j) delta_{it})
            //                   + beta S'(e_j)_t = S(e_j)_t
            Vector c1(n + 1);
            for (std::size_t i = 0; i < n; ++i) {
                c1[i] = A.product.at(i, j, t);
                if (i == t) c1[i] -= qj;
            }
            c1[n] = dp.nov.S.at(t, j);
            sys.add(std::move(c1), d.nov.S.at(t, j));
            // FD2: sum_i a0_i ((e_j o e_i)_t - p(e_j) delta_{it}) + beta T'(e_j)_t = T(e_j)_t
            Vector c2(n + 1);
            for (std::size_t i = 0; i < n; ++i) {
                c2[i] = A.product.at(j, i, t);
                if (i == t) c2[i] -= pj;
            }
            c2[n] = dp.nov.T.at(t, j);
            sys.add(std::move(c2), d.nov.T.at(t, j));
            // FD5: sum_i a0_i ([e_i, e_j]_t - eta(e_j) delta_{it}) + beta D'(e_j)_t = D(e_j)_t
            Vector c5(n + 1);
            for (std::size_t i = 0; i < n; ++i) {
                c5[i] = A.bracket.at(i, j, t);
                if (i == t) c5[i] -= etaj;
            }
            c5[n] = dp.D.at(t, j);
            sys.add(std::move(c5), d.D.at(t, j));
        }
    }
    {
        // FD4: sum_i a0_i (p(e_i) + q(e_i)) + beta k' = k
        Vector c4(n + 1);
        for (std::size_t i = 0; i < n; ++i) c4[i] = d.nov.p.at(0, i) + d.nov.q.at(0, i);
        c4[n] = dp.nov.k;
        sys.add(std::move(c4), d.nov.k);
    }

    AffineSolutionSet sol = sys.solve();
    if (!sol.consistent) return std::nullopt;  // definitive: FD1/2/4/5 are necessary

    std::size_t free_dim = sol.kernel.size();
    auto finish = [&](const Scalar& t0, const Scalar& t1) -> std::optional<FlagEquivalenceWitness> {
        Vector z = sol.particular;
        if (free_dim >= 1) z += t0 * sol.kernel[0];
        if (free_dim >= 2) z += t1 * sol.kernel[1];
        Vector a0(n);
        for (std::size_t i = 0; i < n; ++i) a0[i] = z[i];
        FlagEquivalenceWitness w{a0, z[n]};
        if (w.beta.is_zero()) return std::nullopt;
        if (!check_flag_equivalence(A, d, dp, w).pass()) return std::nullopt;
        return w;
    };

    if (free_dim > opt.max_free_dim) {
        // Last small probe before giving up.
        for (const Scalar& beta : {Scalar(1), Scalar(-1), Scalar(2), Scalar(1, 2)}) {
            FlagEquivalenceWitness w{Vector(n), beta};
            if (check_flag_equivalence(A, d, dp, w).pass()) return w;
        }
        throw SearchInconclusiveError(
            "solve_flag_equivalence: affine solution set has too many free parameters");
    }

    // Affine forms for z in the free parameters, then the FD3 residual
    // polynomials (degree <= 2).
    std::vector<Poly2> z_aff(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        Poly2 p = Poly2::constant(sol.particular[i]);
        if (free_dim >= 1) p = p + Poly2::variable(0).scaled(sol.kernel[0][i]);
        if (free_dim >= 2) p = p + Poly2::variable(1).scaled(sol.kernel[1][i]);
        z_aff[i] = p;
    }
    const Poly2& beta_aff = z_aff[n];

    std::vector<Poly2> constraints;
    // FD3 residual coordinates:
    // a1 - a0 o a0 - beta S'(a0) - beta T'(a0) - beta^2 a1' + k a0 = 0.
    for (std::size_t t = 0; t < n; ++t) {
        Poly2 r = Poly2::constant(d.nov.a1[t]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Scalar& c = A.product.at(i, j, t);
                if (!c.is_zero()) r = r - (z_aff[i] * z_aff[j]).scaled(c);
            }
        for (std::size_t j = 0; j < n; ++j) {
            Scalar c = dp.nov.S.at(t, j) + dp.nov.T.at(t, j);
            if (!c.is_zero()) r = r - (beta_aff * z_aff[j]).scaled(c);
        }
        if (!dp.nov.a1[t].is_zero()) r = r - (beta_aff * beta_aff).scaled(dp.nov.a1[t]);
        if (!d.nov.k.is_zero()) r = r + z_aff[t].scaled(d.nov.k);
        if (!r.is_zero()) constraints.push_back(std::move(r));
    }

    if (free_dim == 0) return finish(Scalar(0), Scalar(0));

    if (free_dim == 1) {
        if (constraints.empty()) {
            // Only beta != 0 is left; beta is affine in t0.
            for (const Scalar& t0 : {Scalar(0), Scalar(1), Scalar(-1), Scalar(2)}) {
                if (!beta_aff.eval(t0, Scalar(0)).is_zero())
                    if (auto w = finish(t0, Scalar(0))) return w;
            }
            return std::nullopt;
        }
        std::vector<Scalar> roots;
        if (!rational_roots(constraints[0], 0, roots))
            throw std::logic_error("solve_flag_equivalence: empty constraint kept");
        for (const Scalar& t0 : roots)
            if (auto w = finish(t0, Scalar(0))) return w;
        return std::nullopt;
    }

    // free_dim == 2.
    if (constraints.empty()) {
        for (const Scalar& t0 : {Scalar(0), Scalar(1), Scalar(-1)})
            for (const Scalar& t1 : {Scalar(0), Scalar(1), Scalar(-1)})
                if (!beta_aff.eval(t0, t1).is_zero())
                    if (auto w = finish(t0, t1)) return w;
        return std::nullopt;
    }
    // Prefer a constraint involving a single parameter: its rational roots pin
    // that parameter exactly, keeping the search complete.
    for (int v = 0; v < 2; ++v) {
        for (const Poly2& c : constraints) {
            if (!c.depends_on(v) || c.depends_on(1 - v)) continue;
            std::vector<Scalar> roots;
            rational_roots(c, v, roots);
            for (const Scalar& r : roots) {
                // Reduce to the other parameter.
                std::vector<Poly2> reduced;
                for (const Poly2& cc : constraints) {
                    Poly2 sub = (v == 0) ? cc.substitute0(r) : [&] {
                        // swap roles: substitute t1 = r
                        Poly2 out;
                        for (const auto& [e, coef] : cc.terms) {
                            Scalar term = coef;
                            for (int i = 0; i < e[1]; ++i) term *= r;
                            out.add_term({e[0], 0}, term);
                        }
                        return out;
                    }();
                    if (!sub.is_zero()) reduced.push_back(sub);
                }
                auto try_other = [&](const Scalar& other) {
                    return (v == 0) ? finish(r, other) : finish(other, r);
                };
                if (reduced.empty()) {
                    for (const Scalar& o : {Scalar(0), Scalar(1), Scalar(-1), Scalar(2)})
                        if (auto w = try_other(o)) return w;
                } else {
                    std::vector<Scalar> roots2;
                    rational_roots(reduced[0], (v == 0) ? 1 : 0, roots2);
                    for (const Scalar& o : roots2)
                        if (auto w = try_other(o)) return w;
                }
            }
            return std::nullopt;
        }
    }
    // Genuinely bivariate constraints: bounded-height scan of the first
    // parameter, exact univariate solve for the second.
    for (const Scalar& t0 : height_bounded_rationals(opt.height)) {
        std::vector<Poly2> reduced;
        bool all_zero = true;
        for (const Poly2& c : constraints) {
            Poly2 sub = c.substitute0(t0);
            if (!sub.is_zero()) { reduced.push_back(sub); all_zero = false; }
        }
        if (all_zero) {
            for (const Scalar& t1 : {Scalar(0), Scalar(1), Scalar(-1), Scalar(2)})
                if (auto w = finish(t0, t1)) return w;
            continue;
        }
        std::vector<Scalar> roots;
        rational_roots(reduced[0], 1, roots);
        for (const Scalar& t1 : roots)
            if (auto w = finish(t0, t1)) return w;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Specialized families SF1..SF5

std::string to_string(SFClass c) {
    switch (c) {
        case SFClass::SF1: return "SF1";
        case SFClass::SF2: return "SF2";
        case SFClass::SF3: return "SF3";
        case SFClass::SF4: return "SF4";
        case SFClass::SF5: return "SF5";
        default: return "general";
    }
}

SFClass check_sf_class(const GDFlagDatum& d) {
    bool p0 = d.nov.p.is_zero(), q0 = d.nov.q.is_zero(), T0 = d.nov.T.is_zero();
    bool eta0 = d.eta.is_zero(), D0 = d.D.is_zero(), a10 = d.nov.a1.is_zero();
    bool k0 = d.nov.k.is_zero();
    if (p0 && q0 && T0 && eta0 && a10) return SFClass::SF2;
    if (p0 && q0 && T0 && eta0) return SFClass::SF1;
    if (p0 && q0 && eta0 && D0 && a10) return SFClass::SF5;
    if (p0 && q0 && eta0 && D0) return SFClass::SF4;
    if (p0 && T0 && k0 && !q0) return SFClass::SF3;
    return SFClass::General;
}

ValidationReport check_sf_relation(SFClass tag, const GDBialgebra& A, const GDFlagDatum& d,
                                   const GDFlagDatum& dp, const FlagEquivalenceWitness& w) {
    std::size_t n = A.dim;
    ValidationReport rep;
    if (w.beta.is_zero()) {
        record_scalar(rep, "beta", {}, Scalar(0));
        return rep;
    }
    auto P = [&](const Vector& a, const Vector& b) { return A.product.eval(a, b); };
    auto Br = [&](const Vector& a, const Vector& b) { return A.bracket.eval(a, b); };
    const Vector& a0 = w.a0;
    const Scalar& beta = w.beta;
    auto id = [&](const char* base, int i) { return std::string(base) + "-" + std::to_string(i); };

    auto per_basis = [&](const char* base, int num,
                         const std::function<Vector(const Vector&)>& residual) {
        for (std::size_t i = 0; i < n; ++i) {
            Vector r = residual(Vector::basis(n, i));
            if (!r.is_zero()) record(rep, id(base, num), {i}, r);
        }
    };

    switch (tag) {
        case SFClass::SF1:
            per_basis("SF1", 1, [&](const Vector& a) {
                return d.nov.S.apply(a) - P(a0, a) - beta * dp.nov.S.apply(a);
            });
            per_basis("SF1", 2, [&](const Vector& a) { return P(a, a0); });
            {
                Vector r = d.nov.a1 - P(a0, a0) - beta * dp.nov.S.apply(a0) -
                           (beta * beta) * dp.nov.a1 + d.nov.k * a0;
                if (!r.is_zero()) record(rep, "SF1-3", {}, r);
                Scalar rk = d.nov.k - beta * dp.nov.k;
                if (!rk.is_zero()) record_scalar(rep, "SF1-4", {}, rk);
            }
            per_basis("SF1", 5, [&](const Vector& a) {
                return d.D.apply(a) - beta * dp.D.apply(a) - Br(a0, a);
            });
            break;
        case SFClass::SF2: {
            for (std::size_t i = 0; i < n; ++i) {
                Vector a = Vector::basis(n, i);
                Vector rs = d.nov.S.apply(a) - beta * dp.nov.S.apply(a);
                if (!rs.is_zero()) record(rep, "SF2-1", {i}, rs);
                Vector rd = d.D.apply(a) - beta * dp.D.apply(a);
                if (!rd.is_zero()) record(rep, "SF2-3", {i}, rd);
            }
            Scalar rk = d.nov.k - beta * dp.nov.k;
            if (!rk.is_zero()) record_scalar(rep, "SF2-2", {}, rk);
            break;
        }
        case SFClass::SF3: {
            for (std::size_t i = 0; i < n; ++i) {
                Scalar dq = d.nov.q.at(0, i) - dp.nov.q.at(0, i);
                if (!dq.is_zero()) record_scalar(rep, "q", {i}, dq);
                Scalar de = d.eta.at(0, i) - dp.eta.at(0, i);
                if (!de.is_zero()) record_scalar(rep, "eta", {i}, de);
            }
            per_basis("SF3", 1, [&](const Vector& a) {
                return d.nov.S.apply(a) - P(a0, a) - beta * dp.nov.S.apply(a) +
                       d.nov.q.functional(a) * a0;
            });
            per_basis("SF3", 2, [&](const Vector& a) { return P(a, a0); });
            {
                Vector r = d.nov.a1 - P(a0, a0) - beta * dp.nov.S.apply(a0) -
                           (beta * beta) * dp.nov.a1;
                if (!r.is_zero()) record(rep, "SF3-3", {}, r);
                Scalar rq = d.nov.q.functional(a0);
                if (!rq.is_zero()) record_scalar(rep, "SF3-4", {}, rq);
            }
            per_basis("SF3", 5, [&](const Vector& a) {
                return d.D.apply(a) - beta * dp.D.apply(a) - Br(a0, a) +
                       d.eta.functional(a) * a0;
            });
            break;
        }
        case SFClass::SF4:
            per_basis("SF4", 1, [&](const Vector& a) {
                return d.nov.S.apply(a) - beta * dp.nov.S.apply(a) - P(a0, a);
            });
            per_basis("SF4", 2, [&](const Vector& a) {
                return d.nov.T.apply(a) - beta * dp.nov.T.apply(a) - P(a, a0);
            });
            {
                Vector r = d.nov.a1 - P(a0, a0) - beta * dp.nov.S.apply(a0) -
                           beta * dp.nov.T.apply(a0) - (beta * beta) * dp.nov.a1 +
                           d.nov.k * a0;
                if (!r.is_zero()) record(rep, "SF4-3", {}, r);
                Scalar rk = d.nov.k - beta * dp.nov.k;
                if (!rk.is_zero()) record_scalar(rep, "SF4-4", {}, rk);
            }
            per_basis("SF4", 5, [&](const Vector& a) { return Br(a0, a); });
            break;
        case SFClass::SF5: {
            for (std::size_t i = 0; i < n; ++i) {
                Vector a = Vector::basis(n, i);
                Vector rs = d.nov.S.apply(a) - beta * dp.nov.S.apply(a);
                if (!rs.is_zero()) record(rep, "SF5-1", {i}, rs);
                Vector rt = d.nov.T.apply(a) - beta * dp.nov.T.apply(a);
                if (!rt.is_zero()) record(rep, "SF5-2", {i}, rt);
            }
            Vector ra = d.nov.a1 - (beta * beta) * dp.nov.a1;
            if (!ra.is_zero()) record(rep, "SF5-3", {}, ra);
            Scalar rk = d.nov.k - beta * dp.nov.k;
            if (!rk.is_zero()) record_scalar(rep, "SF5-4", {}, rk);
            break;
        }
        default:
            rep = check_flag_equivalence(A, d, dp, w);
            break;
    }
    return rep;
}

}  // namespace gdbialg
