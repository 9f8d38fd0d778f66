#include "gdbialg/algebras.hpp"

#include <stdexcept>

namespace gdbialg {

std::vector<std::string> default_basis_names(std::size_t dim) {
    std::vector<std::string> names;
    names.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
    return names;
}

namespace {

void require_square(const BilinearMap& m, const char* who) {
    if (m.in1() != m.in2() || m.in1() != m.out())
        throw DimensionMismatchError(std::string(who) + ": tensor is not (n,n,n)");
}

void record(ValidationReport& rep, const std::string& cond, std::vector<std::size_t> idx,
            Vector residual) {
    // keep only the minimal (first-seen) witness per condition
    if (rep.has(cond)) return;
    rep.violations.push_back({cond, std::move(idx), std::move(residual), {}});
}

}  // namespace

ValidationReport check_lie(const BilinearMap& bracket) {
    require_square(bracket, "check_lie");
    std::size_t n = bracket.in1();
    ValidationReport rep;

    // [x,x] = 0 for all x, polarized: diagonal plus symmetric part.
    for (std::size_t i = 0; i < n; ++i) {
        Vector r = bracket.basis_image(i, i);
        if (!r.is_zero()) record(rep, "alternating", {i, i}, r);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector r = bracket.basis_image(i, j) + bracket.basis_image(j, i);
            if (!r.is_zero()) record(rep, "alternating", {i, j}, r);
        }

    // [x,[y,z]] = [[x,y],z] + [y,[x,z]]
    for (std::size_t i = 0; i < n; ++i) {
        Vector x = Vector::basis(n, i);
        for (std::size_t j = 0; j < n; ++j) {
            Vector y = Vector::basis(n, j);
            for (std::size_t k = 0; k < n; ++k) {
                Vector z = Vector::basis(n, k);
                Vector r = bracket.eval(x, bracket.eval(y, z)) -
                           bracket.eval(bracket.eval(x, y), z) -
                           bracket.eval(y, bracket.eval(x, z));
                if (!r.is_zero()) record(rep, "jacobi", {i, j, k}, r);
            }
        }
    }
    return rep;
}

ValidationReport check_lie(const LieAlgebra& L) { return check_lie(L.bracket); }

ValidationReport check_novikov(const BilinearMap& product) {
    require_square(product, "check_novikov");
    std::size_t n = product.in1();
    ValidationReport rep;
    auto P = [&](const Vector& a, const Vector& b) { return product.eval(a, b); };

    for (std::size_t i = 0; i < n; ++i) {
        Vector a = Vector::basis(n, i);
        for (std::size_t j = 0; j < n; ++j) {
            Vector b = Vector::basis(n, j);
            for (std::size_t k = 0; k < n; ++k) {
                Vector c = Vector::basis(n, k);
                // (a,b,c) = (b,a,c) with (a,b,c) = (a o b) o c - a o (b o c)
                Vector left = P(P(a, b), c) - P(a, P(b, c));
                Vector right = P(P(b, a), c) - P(b, P(a, c));
                Vector r1 = left - right;
                if (!r1.is_zero()) record(rep, "left-symmetry", {i, j, k}, r1);
                // (a o b) o c = (a o c) o b
                Vector r2 = P(P(a, b), c) - P(P(a, c), b);
                if (!r2.is_zero()) record(rep, "right-commutativity", {i, j, k}, r2);
            }
        }
    }
    return rep;
}

ValidationReport check_novikov(const NovikovAlgebra& N) { return check_novikov(N.product); }

ValidationReport check_gd(const GDBialgebra& A) {
    if (A.product.in1() != A.dim || A.bracket.in1() != A.dim)
        throw DimensionMismatchError("check_gd: tensor dims do not match algebra dim");
    ValidationReport rep = check_novikov(A.product);
    rep.merge(check_lie(A.bracket));

    std::size_t n = A.dim;
    auto P = [&](const Vector& a, const Vector& b) { return A.product.eval(a, b); };
    auto Br = [&](const Vector& a, const Vector& b) { return A.bracket.eval(a, b); };
    for (std::size_t i = 0; i < n; ++i) {
        Vector a = Vector::basis(n, i);
        for (std::size_t j = 0; j < n; ++j) {
            Vector b = Vector::basis(n, j);
            for (std::size_t k = 0; k < n; ++k) {
                Vector c = Vector::basis(n, k);
                // [a, b o c] - [c, b o a] + [b,a] o c - [b,c] o a - b o [a,c]
                Vector r = Br(a, P(b, c)) - Br(c, P(b, a)) + P(Br(b, a), c) -
                           P(Br(b, c), a) - P(b, Br(a, c));
                if (!r.is_zero()) record(rep, "compatibility", {i, j, k}, r);
            }
        }
    }
    return rep;
}

LieAlgebra sub_adjacent_lie(const NovikovAlgebra& N) {
    std::size_t n = N.dim;
    BilinearMap br(n, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                br.at(i, j, k) = N.product.at(i, j, k) - N.product.at(j, i, k);
    return {n, br, N.basis_names};
}

ValidationReport check_twisted_derivation(const LieAlgebra& L, const LinearMap& lambda,
                                          const LinearMap& D) {
    std::size_t n = L.dim;
    if (lambda.rows() != 1 || lambda.cols() != n || D.rows() != n || D.cols() != n)
        throw DimensionMismatchError("check_twisted_derivation: map shapes");
    ValidationReport rep;
    auto Br = [&](const Vector& a, const Vector& b) { return L.bracket.eval(a, b); };
    for (std::size_t i = 0; i < n; ++i) {
        Vector a = Vector::basis(n, i);
        for (std::size_t j = 0; j < n; ++j) {
            Vector b = Vector::basis(n, j);
            Scalar td1 = lambda.functional(Br(a, b));
            if (!td1.is_zero()) record(rep, "TD1", {i, j}, Vector{td1});
            // D([a,b]) = [D(a),b] + [a,D(b)] + lambda(a)D(b) - lambda(b)D(a)
            Vector r = D.apply(Br(a, b)) - Br(D.apply(a), b) - Br(a, D.apply(b)) -
                       lambda.functional(a) * D.apply(b) + lambda.functional(b) * D.apply(a);
            if (!r.is_zero()) record(rep, "TD2", {i, j}, r);
        }
    }
    return rep;
}

ValidationReport check_quasicentroid(const NovikovAlgebra& N, const LinearMap& T) {
    std::size_t n = N.dim;
    if (T.rows() != n || T.cols() != n)
        throw DimensionMismatchError("check_quasicentroid: map shape");
    ValidationReport rep;
    auto P = [&](const Vector& a, const Vector& b) { return N.product.eval(a, b); };
    for (std::size_t i = 0; i < n; ++i) {
        Vector a = Vector::basis(n, i);
        for (std::size_t j = 0; j < n; ++j) {
            Vector b = Vector::basis(n, j);
            Vector r1 = T.apply(P(a, b)) - P(T.apply(a), b);
            if (!r1.is_zero()) record(rep, "QC1", {i, j}, r1);
            Vector r2 = T.apply(P(a, b)) - T.apply(P(b, a)) - P(a, T.apply(b)) + P(b, T.apply(a));
            if (!r2.is_zero()) record(rep, "QC2", {i, j}, r2);
        }
    }
    return rep;
}

std::optional<Vector> inner_quasicentroid_witness(const NovikovAlgebra& N, const LinearMap& T) {
    // Solve T(e_i) = e_i o b for b, coordinatewise linear in b.
    std::size_t n = N.dim;
    LinearSystem sys(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            Vector coeffs(n);
            for (std::size_t j = 0; j < n; ++j) coeffs[j] = N.product.at(i, j, k);
            sys.add(std::move(coeffs), T.at(k, i));
        }
    }
    auto sol = sys.solve();
    if (!sol.consistent) return std::nullopt;
    return sol.particular;
}

std::vector<LinearMap> derivation_space(const LieAlgebra& L) {
    // Unknowns: D entries, index (r,c) -> r*n + c.  D([a,b]) = [D(a),b] + [a,D(b)].
    std::size_t n = L.dim;
    LinearSystem sys(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                // coefficient of D_{r,c} in coordinate k of the residual
                Vector coeffs(n * n);
                // D([e_i,e_j])_k = sum_c bracket(i,j,c) D_{k,c}
                for (std::size_t c = 0; c < n; ++c)
                    coeffs[k * n + c] += L.bracket.at(i, j, c);
                // [D(e_i), e_j]_k = sum_r D_{r,i} bracket(r,j,k)
                for (std::size_t r = 0; r < n; ++r)
                    coeffs[r * n + i] -= L.bracket.at(r, j, k);
                // [e_i, D(e_j)]_k = sum_r D_{r,j} bracket(i,r,k)
                for (std::size_t r = 0; r < n; ++r)
                    coeffs[r * n + j] -= L.bracket.at(i, r, k);
                sys.add(std::move(coeffs), Scalar(0));
            }
    auto sol = sys.solve();
    std::vector<LinearMap> basis;
    for (const auto& v : sol.kernel) {
        LinearMap D(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) D.at(r, c) = v[r * n + c];
        basis.push_back(std::move(D));
    }
    return basis;
}

std::vector<Vector> center(const LieAlgebra& L) {
    std::size_t n = L.dim;
    LinearSystem sys(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            Vector coeffs(n);
            for (std::size_t i = 0; i < n; ++i) coeffs[i] = L.bracket.at(i, j, k);
            sys.add(std::move(coeffs), Scalar(0));
        }
    return sys.solve().kernel;
}

bool is_perfect(const LieAlgebra& L) {
    std::vector<Vector> images;
    for (std::size_t i = 0; i < L.dim; ++i)
        for (std::size_t j = 0; j < L.dim; ++j) images.push_back(L.bracket.basis_image(i, j));
    return span_rank(images) == L.dim;
}

std::vector<Vector> novikov_annihilator_right(const NovikovAlgebra& N) {
    std::size_t n = N.dim;
    LinearSystem sys(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            Vector coeffs(n);
            for (std::size_t j = 0; j < n; ++j) coeffs[j] = N.product.at(i, j, k);
            sys.add(std::move(coeffs), Scalar(0));
        }
    return sys.solve().kernel;
}

LinearMap ad(const LieAlgebra& L, const Vector& a0) {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < L.dim; ++j)
        cols.push_back(L.bracket.eval(a0, Vector::basis(L.dim, j)));
    return LinearMap::from_columns(cols);
}

LinearMap right_multiplication(const NovikovAlgebra& N, const Vector& b) {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < N.dim; ++j)
        cols.push_back(N.product.eval(Vector::basis(N.dim, j), b));
    return LinearMap::from_columns(cols);
}

ValidationReport check_novikov_bimodule(const NovikovAlgebra& N, const BilinearMap& l_A,
                                        const BilinearMap& r_A) {
    std::size_t n = N.dim, m = l_A.in2();
    if (l_A.in1() != n || r_A.in1() != n || r_A.in2() != m || l_A.out() != m || r_A.out() != m)
        throw DimensionMismatchError("check_novikov_bimodule: tensor shapes");
    ValidationReport rep;
    auto P = [&](const Vector& a, const Vector& b) { return N.product.eval(a, b); };
    auto la = [&](const Vector& a, const Vector& v) { return l_A.eval(a, v); };
    auto ra = [&](const Vector& a, const Vector& v) { return r_A.eval(a, v); };
    for (std::size_t i = 0; i < n; ++i) {
        Vector a = Vector::basis(n, i);
        for (std::size_t j = 0; j < n; ++j) {
            Vector b = Vector::basis(n, j);
            for (std::size_t t = 0; t < m; ++t) {
                Vector v = Vector::basis(m, t);
                Vector r1 = la(a, la(b, v)) - la(P(a, b), v) - la(b, la(a, v)) + la(P(b, a), v);
                if (!r1.is_zero()) record(rep, "BM1", {i, j, t}, r1);
                Vector r2 = la(a, ra(b, v)) - ra(b, la(a, v)) - ra(P(a, b), v) + ra(b, ra(a, v));
                if (!r2.is_zero()) record(rep, "BM2", {i, j, t}, r2);
                Vector r3 = la(P(a, b), v) - ra(b, la(a, v));
                if (!r3.is_zero()) record(rep, "BM3", {i, j, t}, r3);
                Vector r4 = ra(a, ra(b, v)) - ra(b, ra(a, v));
                if (!r4.is_zero()) record(rep, "BM4", {i, j, t}, r4);
            }
        }
    }
    return rep;
}

ValidationReport check_gd_right_module(const GDBialgebra& A, const GDModuleData& m) {
    std::size_t n = A.dim, cd = m.carrier_dim;
    if (m.action.in1() != cd || m.action.in2() != n || m.action.out() != cd)
        throw DimensionMismatchError("check_gd_right_module: action shape");
    ValidationReport rep = check_novikov_bimodule(A.novikov(), m.l_A, m.r_A);

    auto P = [&](const Vector& a, const Vector& b) { return A.product.eval(a, b); };
    auto Br = [&](const Vector& a, const Vector& b) { return A.bracket.eval(a, b); };
    auto act = [&](const Vector& v, const Vector& a) { return m.action.eval(v, a); };
    auto la = [&](const Vector& a, const Vector& v) { return m.l_A.eval(a, v); };
    auto ra = [&](const Vector& a, const Vector& v) { return m.r_A.eval(a, v); };

    for (std::size_t i = 0; i < n; ++i) {
        Vector a = Vector::basis(n, i);
        for (std::size_t j = 0; j < n; ++j) {
            Vector b = Vector::basis(n, j);
            for (std::size_t t = 0; t < cd; ++t) {
                Vector v = Vector::basis(cd, t);
                // v <| [a,b] = (v <| a) <| b - (v <| b) <| a
                Vector rl = act(v, Br(a, b)) - act(act(v, a), b) + act(act(v, b), a);
                if (!rl.is_zero()) record(rep, "RM-lie", {i, j, t}, rl);
                // (l_A(b)v) <| a + v <| (b o a) - l_A([b,a])v - r_A(a)(v <| b) - l_A(b)(v <| a)
                Vector r1 = act(la(b, v), a) + act(v, P(b, a)) - la(Br(b, a), v) -
                            ra(a, act(v, b)) - la(b, act(v, a));
                if (!r1.is_zero()) record(rep, "RM-gd1", {i, j, t}, r1);
                // (r_A(b)v) <| a - (r_A(a)v) <| b - r_A(b)(v <| a) + r_A(a)(v <| b) + r_A([a,b])v
                Vector r2 = act(ra(b, v), a) - act(ra(a, v), b) - ra(b, act(v, a)) +
                            ra(a, act(v, b)) + ra(Br(a, b), v);
                if (!r2.is_zero()) record(rep, "RM-gd2", {i, j, t}, r2);
            }
        }
    }
    return rep;
}

ValidationReport check_gd_left_module(const GDBialgebra& A, const GDModuleData& m) {
    // A left module a |> v is the right module v <| a := -(a |> v); one
    // canonical orientation keeps a single code path.
    std::size_t n = A.dim, cd = m.carrier_dim;
    if (m.action.in1() != n || m.action.in2() != cd || m.action.out() != cd)
        throw DimensionMismatchError("check_gd_left_module: action shape");
    BilinearMap flipped(cd, n, cd);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < cd; ++t)
            for (std::size_t s = 0; s < cd; ++s) flipped.at(t, i, s) = -m.action.at(i, t, s);
    return check_gd_right_module(A, {cd, flipped, m.l_A, m.r_A});
}

bool is_subalgebra(const GDBialgebra& E, const std::vector<std::size_t>& idx) {
    std::vector<bool> in(E.dim, false);
    for (auto i : idx) {
        if (i >= E.dim) throw std::out_of_range("is_subalgebra: index out of range");
        in[i] = true;
    }
    for (auto i : idx)
        for (auto j : idx)
            for (std::size_t k = 0; k < E.dim; ++k) {
                if (in[k]) continue;
                if (!E.product.at(i, j, k).is_zero() || !E.bracket.at(i, j, k).is_zero())
                    return false;
            }
    return true;
}

bool is_ideal(const GDBialgebra& E, const std::vector<std::size_t>& idx) {
    std::vector<bool> in(E.dim, false);
    for (auto i : idx) in[i] = true;
    for (auto i : idx)
        for (std::size_t j = 0; j < E.dim; ++j)
            for (std::size_t k = 0; k < E.dim; ++k) {
                if (in[k]) continue;
                if (!E.product.at(i, j, k).is_zero() || !E.product.at(j, i, k).is_zero() ||
                    !E.bracket.at(i, j, k).is_zero() || !E.bracket.at(j, i, k).is_zero())
                    return false;
            }
    return true;
}

bool is_isomorphism(const GDBialgebra& E1, const GDBialgebra& E2, const LinearMap& P) {
    if (E1.dim != E2.dim || P.rows() != E1.dim || P.cols() != E1.dim) return false;
    if (!P.inverse().has_value()) return false;
    std::size_t n = E1.dim;
    for (std::size_t i = 0; i < n; ++i) {
        Vector pi = P.column(i);
        for (std::size_t j = 0; j < n; ++j) {
            Vector pj = P.column(j);
            if (P.apply(E1.product.basis_image(i, j)) != E2.product.eval(pi, pj)) return false;
            if (P.apply(E1.bracket.basis_image(i, j)) != E2.bracket.eval(pi, pj)) return false;
        }
    }
    return true;
}

}  // namespace gdbialg
