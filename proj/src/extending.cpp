#include "gdbialg/extending.hpp"

#include <stdexcept>

namespace gdbialg {

namespace {

void record(ValidationReport& rep, const std::string& cond, std::vector<std::size_t> idx,
            Vector residual) {
    if (rep.has(cond)) return;
    rep.violations.push_back({cond, std::move(idx), std::move(residual), {}});
}

std::vector<std::string> make_v_names(std::size_t dimV, const std::vector<std::string>& given) {
    if (given.size() == dimV) return given;
    if (dimV == 1) return {"x"};
    std::vector<std::string> names;
    for (std::size_t i = 0; i < dimV; ++i) names.push_back("x" + std::to_string(i + 1));
    return names;
}

}  // namespace

LieExtendingDatum LieExtendingDatum::zero(std::size_t dimA, std::size_t dimV) {
    return {dimA, dimV, BilinearMap(dimV, dimA, dimV), BilinearMap(dimV, dimA, dimA),
            BilinearMap(dimV, dimV, dimA), BilinearMap(dimV, dimV, dimV)};
}

NovikovExtendingDatum NovikovExtendingDatum::zero(std::size_t dimA, std::size_t dimV) {
    return {dimA,
            dimV,
            BilinearMap(dimA, dimV, dimV),
            BilinearMap(dimA, dimV, dimV),
            BilinearMap(dimV, dimA, dimA),
            BilinearMap(dimV, dimA, dimA),
            BilinearMap(dimV, dimV, dimA),
            BilinearMap(dimV, dimV, dimV)};
}

GDExtendingDatum GDExtendingDatum::zero(std::size_t dimA, std::size_t dimV) {
    return {NovikovExtendingDatum::zero(dimA, dimV), LieExtendingDatum::zero(dimA, dimV)};
}

ValidationReport check_lie_extending(const LieAlgebra& A, const LieExtendingDatum& d) {
    std::size_t nA = A.dim, nV = d.dimV;
    if (d.dimA != nA) throw DimensionMismatchError("check_lie_extending: dimA mismatch");
    ValidationReport rep;

    auto Br = [&](const Vector& a, const Vector& b) { return A.bracket.eval(a, b); };
    auto tl = [&](const Vector& x, const Vector& a) { return d.tri_l.eval(x, a); };
    auto tr = [&](const Vector& x, const Vector& a) { return d.tri_r.eval(x, a); };
    auto hh = [&](const Vector& x, const Vector& y) { return d.h.eval(x, y); };
    auto cu = [&](const Vector& x, const Vector& y) { return d.curly.eval(x, y); };
    auto eA = [&](std::size_t i) { return Vector::basis(nA, i); };
    auto eV = [&](std::size_t i) { return Vector::basis(nV, i); };

    // (L1) h(x,x) = 0 and {x,x} = 0 for all x: diagonal + polarization.
    for (std::size_t i = 0; i < nV; ++i) {
        Vector rh = hh(eV(i), eV(i));
        if (!rh.is_zero()) record(rep, "L1", {i, i}, rh);
        Vector rc = cu(eV(i), eV(i));
        if (!rc.is_zero()) record(rep, "L1", {i, i}, rc);
        for (std::size_t j = i + 1; j < nV; ++j) {
            Vector sh = hh(eV(i), eV(j)) + hh(eV(j), eV(i));
            if (!sh.is_zero()) record(rep, "L1", {i, j}, sh);
            Vector sc = cu(eV(i), eV(j)) + cu(eV(j), eV(i));
            if (!sc.is_zero()) record(rep, "L1", {i, j}, sc);
        }
    }

    for (std::size_t xi = 0; xi < nV; ++xi) {
        Vector x = eV(xi);
        for (std::size_t ai = 0; ai < nA; ++ai) {
            Vector a = eA(ai);
            for (std::size_t bi = 0; bi < nA; ++bi) {
                Vector b = eA(bi);
                // (L2) x <| [a,b] = (x <| a) <| b - (x <| b) <| a.
                // (The displayed (L2) repeats its first term; this is the
                // standard right-module axiom, which the dim-1 theory uses.)
                Vector r2 = tl(x, Br(a, b)) - tl(tl(x, a), b) + tl(tl(x, b), a);
                if (!r2.is_zero()) record(rep, "L2", {xi, ai, bi}, r2);
                // (L3) x |> [a,b] = [x |> a, b] + [a, x |> b] + (x <| a) |> b - (x <| b) |> a
                Vector r3 = tr(x, Br(a, b)) - Br(tr(x, a), b) - Br(a, tr(x, b)) -
                            tr(tl(x, a), b) + tr(tl(x, b), a);
                if (!r3.is_zero()) record(rep, "L3", {xi, ai, bi}, r3);
            }
        }
    }

    for (std::size_t xi = 0; xi < nV; ++xi) {
        Vector x = eV(xi);
        for (std::size_t yi = 0; yi < nV; ++yi) {
            Vector y = eV(yi);
            for (std::size_t ai = 0; ai < nA; ++ai) {
                Vector a = eA(ai);
                // (L4) {x,y} <| a = {x, y <| a} + {x <| a, y} + x <| (y |> a) - y <| (x |> a)
                Vector r4 = tl(cu(x, y), a) - cu(x, tl(y, a)) - cu(tl(x, a), y) -
                            tl(x, tr(y, a)) + tl(y, tr(x, a));
                if (!r4.is_zero()) record(rep, "L4", {xi, yi, ai}, r4);
                // (L5) {x,y} |> a = x |> (y |> a) - y |> (x |> a) + [a, h(x,y)]
                //      + h(x, y <| a) + h(x <| a, y)
                Vector r5 = tr(cu(x, y), a) - tr(x, tr(y, a)) + tr(y, tr(x, a)) -
                            Br(a, hh(x, y)) - hh(x, tl(y, a)) - hh(tl(x, a), y);
                if (!r5.is_zero()) record(rep, "L5", {xi, yi, ai}, r5);
            }
        }
    }

    for (std::size_t xi = 0; xi < nV; ++xi) {
        Vector x = eV(xi);
        for (std::size_t yi = 0; yi < nV; ++yi) {
            Vector y = eV(yi);
            for (std::size_t zi = 0; zi < nV; ++zi) {
                Vector z = eV(zi);
                // (L6)
                Vector r6 = hh(x, cu(y, z)) + hh(y, cu(z, x)) + hh(z, cu(x, y)) +
                            tr(x, hh(y, z)) + tr(y, hh(z, x)) + tr(z, hh(x, y));
                if (!r6.is_zero()) record(rep, "L6", {xi, yi, zi}, r6);
                // (L7)
                Vector r7 = cu(x, cu(y, z)) + cu(y, cu(z, x)) + cu(z, cu(x, y)) +
                            tl(x, hh(y, z)) + tl(y, hh(z, x)) + tl(z, hh(x, y));
                if (!r7.is_zero()) record(rep, "L7", {xi, yi, zi}, r7);
            }
        }
    }
    return rep;
}

ValidationReport check_novikov_extending(const NovikovAlgebra& A,
                                         const NovikovExtendingDatum& d) {
    std::size_t nA = A.dim, nV = d.dimV;
    if (d.dimA != nA) throw DimensionMismatchError("check_novikov_extending: dimA mismatch");
    ValidationReport rep;

    auto P = [&](const Vector& a, const Vector& b) { return A.product.eval(a, b); };
    auto la = [&](const Vector& a, const Vector& x) { return d.l_A.eval(a, x); };
    auto ra = [&](const Vector& a, const Vector& x) { return d.r_A.eval(a, x); };
    auto lv = [&](const Vector& x, const Vector& a) { return d.l_V.eval(x, a); };
    auto rv = [&](const Vector& x, const Vector& a) { return d.r_V.eval(x, a); };
    auto ff = [&](const Vector& x, const Vector& y) { return d.f.eval(x, y); };
    auto st = [&](const Vector& x, const Vector& y) { return d.star.eval(x, y); };
    auto eA = [&](std::size_t i) { return Vector::basis(nA, i); };
    auto eV = [&](std::size_t i) { return Vector::basis(nV, i); };

    // one x in V, a pair in A
    for (std::size_t xi = 0; xi < nV; ++xi) {
        Vector x = eV(xi);
        for (std::size_t ai = 0; ai < nA; ++ai) {
            Vector a = eA(ai);
            for (std::size_t bi = 0; bi < nA; ++bi) {
                Vector b = eA(bi);
                // (N1) l_V(x)(a o b) = -l_V(l_A(a)x)b + l_V(r_A(a)x)b + (l_V(x)a) o b
                //      - (r_V(x)a) o b + r_V(r_A(b)x)a + a o (l_V(x)b)
                Vector n1 = lv(x, P(a, b)) + lv(la(a, x), b) - lv(ra(a, x), b) -
                            P(lv(x, a), b) + P(rv(x, a), b) - rv(ra(b, x), a) -
                            P(a, lv(x, b));
                if (!n1.is_zero()) record(rep, "N1", {xi, ai, bi}, n1);
                // (N2) l_A(a)r_A(b)x - r_A(b)l_A(a)x = r_A(a o b)x - r_A(b)r_A(a)x
                Vector n2 = la(a, ra(b, x)) - ra(b, la(a, x)) - ra(P(a, b), x) + ra(b, ra(a, x));
                if (!n2.is_zero()) record(rep, "N2", {ai, bi, xi}, n2);
                // (N3) r_V(x)(a o b) - r_V(x)(b o a) = r_V(l_A(b)x)a - r_V(l_A(a)x)b
                //      + a o (r_V(x)b) - b o (r_V(x)a)
                Vector n3 = rv(x, P(a, b)) - rv(x, P(b, a)) - rv(la(b, x), a) +
                            rv(la(a, x), b) - P(a, rv(x, b)) + P(b, rv(x, a));
                if (!n3.is_zero()) record(rep, "N3", {xi, ai, bi}, n3);
                // (N4) l_A(a o b - b o a)x = l_A(a)l_A(b)x - l_A(b)l_A(a)x
                Vector n4 = la(P(a, b) - P(b, a), x) - la(a, la(b, x)) + la(b, la(a, x));
                if (!n4.is_zero()) record(rep, "N4", {ai, bi, xi}, n4);
                // (N11) (l_V(x)a) o b + l_V(r_A(a)x)b = (l_V(x)b) o a + l_V(r_A(b)x)a
                Vector n11 = P(lv(x, a), b) + lv(ra(a, x), b) - P(lv(x, b), a) - lv(ra(b, x), a);
                if (!n11.is_zero()) record(rep, "N11", {xi, ai, bi}, n11);
                // (N12) r_A(b)r_A(a)x = r_A(a)r_A(b)x
                Vector n12 = ra(b, ra(a, x)) - ra(a, ra(b, x));
                if (!n12.is_zero()) record(rep, "N12", {ai, bi, xi}, n12);
                // (N13) (r_V(x)a) o b + l_V(l_A(a)x)b = r_V(x)(a o b)
                Vector n13 = P(rv(x, a), b) + lv(la(a, x), b) - rv(x, P(a, b));
                if (!n13.is_zero()) record(rep, "N13", {xi, ai, bi}, n13);
                // (N14) r_A(b)l_A(a)x = l_A(a o b)x
                Vector n14 = ra(b, la(a, x)) - la(P(a, b), x);
                if (!n14.is_zero()) record(rep, "N14", {ai, bi, xi}, n14);
            }
        }
    }

    // pair in V, one a in A
    for (std::size_t xi = 0; xi < nV; ++xi) {
        Vector x = eV(xi);
        for (std::size_t yi = 0; yi < nV; ++yi) {
            Vector y = eV(yi);
            for (std::size_t ai = 0; ai < nA; ++ai) {
                Vector a = eA(ai);
                // (N5) r_V(x*y)a = r_V(y)(r_V(x)a) - r_V(y)(l_V(x)a) + l_V(x)r_V(y)a
                //      + f(l_A(a)x, y) + f(x, l_A(a)y) - a o f(x,y) - f(r_A(a)x, y)
                Vector n5 = rv(st(x, y), a) - rv(y, rv(x, a)) + rv(y, lv(x, a)) -
                            lv(x, rv(y, a)) - ff(la(a, x), y) - ff(x, la(a, y)) +
                            P(a, ff(x, y)) + ff(ra(a, x), y);
                if (!n5.is_zero()) record(rep, "N5", {xi, yi, ai}, n5);
                // (N6) l_A(a)(x*y) = -l_A(l_V(x)a - r_V(x)a)y + (l_A(a)x - r_A(a)x)*y
                //      + r_A(r_V(y)a)x + x*(l_A(a)y)
                Vector n6 = la(a, st(x, y)) + la(lv(x, a) - rv(x, a), y) -
                            st(la(a, x) - ra(a, x), y) - ra(rv(y, a), x) - st(x, la(a, y));
                if (!n6.is_zero()) record(rep, "N6", {ai, xi, yi}, n6);
                // (N7) l_V(x*y - y*x)a = (l_V(x)l_V(y) - l_V(y)l_V(x))a
                //      - (f(x,y) - f(y,x)) o a + f(x, r_A(a)y) - f(y, r_A(a)x)
                Vector n7 = lv(st(x, y) - st(y, x), a) - lv(x, lv(y, a)) + lv(y, lv(x, a)) +
                            P(ff(x, y) - ff(y, x), a) - ff(x, ra(a, y)) + ff(y, ra(a, x));
                if (!n7.is_zero()) record(rep, "N7", {xi, yi, ai}, n7);
                // (N8) r_A(a)(x*y - y*x) = r_A(l_V(y)a)x - r_A(l_V(x)a)y
                //      + x*(r_A(a)y) - y*(r_A(a)x)
                Vector n8 = ra(a, st(x, y) - st(y, x)) - ra(lv(y, a), x) + ra(lv(x, a), y) -
                            st(x, ra(a, y)) + st(y, ra(a, x));
                if (!n8.is_zero()) record(rep, "N8", {ai, xi, yi}, n8);
                // (N15) r_V(y)r_V(x)a + f(l_A(a)x, y) = r_V(x)r_V(y)a + f(l_A(a)y, x)
                Vector n15 = rv(y, rv(x, a)) + ff(la(a, x), y) - rv(x, rv(y, a)) - ff(la(a, y), x);
                if (!n15.is_zero()) record(rep, "N15", {xi, yi, ai}, n15);
                // (N16) l_A(r_V(x)a)y + (l_A(a)x)*y = l_A(r_V(y)a)x + (l_A(a)y)*x
                Vector n16 = la(rv(x, a), y) + st(la(a, x), y) - la(rv(y, a), x) - st(la(a, y), x);
                if (!n16.is_zero()) record(rep, "N16", {xi, yi, ai}, n16);
                // (N17) r_V(y)(l_V(x)a) + f(r_A(a)x, y) = f(x,y) o a + l_V(x*y)a
                Vector n17 = rv(y, lv(x, a)) + ff(ra(a, x), y) - P(ff(x, y), a) - lv(st(x, y), a);
                if (!n17.is_zero()) record(rep, "N17", {xi, yi, ai}, n17);
                // (N18) l_A(l_V(x)a)y + (r_A(a)x)*y = r_A(a)(x*y)
                Vector n18 = la(lv(x, a), y) + st(ra(a, x), y) - ra(a, st(x, y));
                if (!n18.is_zero()) record(rep, "N18", {xi, yi, ai}, n18);
            }
        }
    }

    // triple in V
    for (std::size_t xi = 0; xi < nV; ++xi) {
        Vector x = eV(xi);
        for (std::size_t yi = 0; yi < nV; ++yi) {
            Vector y = eV(yi);
            for (std::size_t zi = 0; zi < nV; ++zi) {
                Vector z = eV(zi);
                // (N9)
                Vector n9 = ff(st(x, y), z) - ff(x, st(y, z)) - ff(st(y, x), z) +
                            ff(y, st(x, z)) + rv(z, ff(x, y) - ff(y, x)) - lv(x, ff(y, z)) +
                            lv(y, ff(x, z));
                if (!n9.is_zero()) record(rep, "N9", {xi, yi, zi}, n9);
                // (N10)
                Vector n10 = st(st(x, y), z) - st(x, st(y, z)) - st(st(y, x), z) +
                             st(y, st(x, z)) + la(ff(x, y) - ff(y, x), z) - ra(ff(y, z), x) +
                             ra(ff(x, z), y);
                if (!n10.is_zero()) record(rep, "N10", {xi, yi, zi}, n10);
                // (N19) r_V(z)f(x,y) + f(x*y, z) = r_V(y)f(x,z) + f(x*z, y)
                Vector n19 = rv(z, ff(x, y)) + ff(st(x, y), z) - rv(y, ff(x, z)) - ff(st(x, z), y);
                if (!n19.is_zero()) record(rep, "N19", {xi, yi, zi}, n19);
                // (N20) l_A(f(x,y))z + (x*y)*z = l_A(f(x,z))y + (x*z)*y
                Vector n20 = la(ff(x, y), z) + st(st(x, y), z) - la(ff(x, z), y) - st(st(x, z), y);
                if (!n20.is_zero()) record(rep, "N20", {xi, yi, zi}, n20);
            }
        }
    }
    return rep;
}

ValidationReport check_gd_extending(const GDBialgebra& A, const GDExtendingDatum& d) {
    std::size_t nA = A.dim, nV = d.dimV();
    if (d.dimA() != nA) throw DimensionMismatchError("check_gd_extending: dimA mismatch");

    // (G0): both sub-datums are extending datums of their pieces.
    ValidationReport rep = check_novikov_extending(A.novikov(), d.novikov);
    rep.merge(check_lie_extending(A.lie(), d.lie));

    auto P = [&](const Vector& a, const Vector& b) { return A.product.eval(a, b); };
    auto Br = [&](const Vector& a, const Vector& b) { return A.bracket.eval(a, b); };
    auto la = [&](const Vector& a, const Vector& x) { return d.novikov.l_A.eval(a, x); };
    auto ra = [&](const Vector& a, const Vector& x) { return d.novikov.r_A.eval(a, x); };
    auto lv = [&](const Vector& x, const Vector& a) { return d.novikov.l_V.eval(x, a); };
    auto rv = [&](const Vector& x, const Vector& a) { return d.novikov.r_V.eval(x, a); };
    auto ff = [&](const Vector& x, const Vector& y) { return d.novikov.f.eval(x, y); };
    auto st = [&](const Vector& x, const Vector& y) { return d.novikov.star.eval(x, y); };
    auto tl = [&](const Vector& x, const Vector& a) { return d.lie.tri_l.eval(x, a); };
    auto tr = [&](const Vector& x, const Vector& a) { return d.lie.tri_r.eval(x, a); };
    auto hh = [&](const Vector& x, const Vector& y) { return d.lie.h.eval(x, y); };
    auto cu = [&](const Vector& x, const Vector& y) { return d.lie.curly.eval(x, y); };
    auto eA = [&](std::size_t i) { return Vector::basis(nA, i); };
    auto eV = [&](std::size_t i) { return Vector::basis(nV, i); };

    for (std::size_t ai = 0; ai < nA; ++ai) {
        Vector a = eA(ai);
        for (std::size_t bi = 0; bi < nA; ++bi) {
            Vector b = eA(bi);
            for (std::size_t xi = 0; xi < nV; ++xi) {
                Vector x = eV(xi);
                // (G1) [a, r_V(x)b] - (l_A(b)x) |> a - x |> (b o a) + r_V(x)([b,a])
                //      + (x |> b) o a + l_V(x <| b)a + b o (x |> a) + r_V(x <| a)b = 0
                Vector g1 = Br(a, rv(x, b)) - tr(la(b, x), a) - tr(x, P(b, a)) +
                            rv(x, Br(b, a)) + P(tr(x, b), a) + lv(tl(x, b), a) +
                            P(b, tr(x, a)) + rv(tl(x, a), b);
                if (!g1.is_zero()) record(rep, "G1", {ai, bi, xi}, g1);
                // (G2) (l_A(b)x) <| a + x <| (b o a) - l_A([b,a])x - r_A(a)(x <| b)
                //      - l_A(b)(x <| a) = 0
                Vector g2 = tl(la(b, x), a) + tl(x, P(b, a)) - la(Br(b, a), x) -
                            ra(a, tl(x, b)) - la(b, tl(x, a));
                if (!g2.is_zero()) record(rep, "G2", {ai, bi, xi}, g2);
                // (G3) [a, l_V(x)b] - (r_A(b)x) |> a - [b, l_V(x)a] + (r_A(a)x) |> b
                //      + (x |> a) o b + l_V(x <| a)b - (x |> b) o a - l_V(x <| b)a
                //      - l_V(x)([a,b]) = 0
                Vector g3 = Br(a, lv(x, b)) - tr(ra(b, x), a) - Br(b, lv(x, a)) +
                            tr(ra(a, x), b) + P(tr(x, a), b) + lv(tl(x, a), b) -
                            P(tr(x, b), a) - lv(tl(x, b), a) - lv(x, Br(a, b));
                if (!g3.is_zero()) record(rep, "G3", {ai, bi, xi}, g3);
                // (G4) (r_A(b)x) <| a - (r_A(a)x) <| b - r_A(b)(x <| a) + r_A(a)(x <| b)
                //      + r_A([a,b])x = 0
                Vector g4 = tl(ra(b, x), a) - tl(ra(a, x), b) - ra(b, tl(x, a)) +
                            ra(a, tl(x, b)) + ra(Br(a, b), x);
                if (!g4.is_zero()) record(rep, "G4", {ai, bi, xi}, g4);
            }
        }
    }

    for (std::size_t ai = 0; ai < nA; ++ai) {
        Vector a = eA(ai);
        for (std::size_t xi = 0; xi < nV; ++xi) {
            Vector x = eV(xi);
            for (std::size_t yi = 0; yi < nV; ++yi) {
                Vector y = eV(yi);
                // (G5) [a, f(x,y)] - (x*y) |> a - y |> (l_V(x)a) - h(y, r_A(a)x)
                //      + r_V(y)(x |> a) + f(x <| a, y) - h(x,y) o a - l_V({x,y})a
                //      + l_V(x)(y |> a) + f(x, y <| a) = 0
                Vector g5 = Br(a, ff(x, y)) - tr(st(x, y), a) - tr(y, lv(x, a)) -
                            hh(y, ra(a, x)) + rv(y, tr(x, a)) + ff(tl(x, a), y) -
                            P(hh(x, y), a) - lv(cu(x, y), a) + lv(x, tr(y, a)) +
                            ff(x, tl(y, a));
                if (!g5.is_zero()) record(rep, "G5", {ai, xi, yi}, g5);
                // (G6) (x*y) <| a + {y, r_A(a)x} + y <| (l_V(x)a) - (x <| a)*y
                //      - l_A(x |> a)y + r_A(a)({x,y}) - x*(y <| a) - r_A(y |> a)x = 0
                Vector g6 = tl(st(x, y), a) + cu(y, ra(a, x)) + tl(y, lv(x, a)) -
                            st(tl(x, a), y) - la(tr(x, a), y) + ra(a, cu(x, y)) -
                            st(x, tl(y, a)) - ra(tr(y, a), x);
                if (!g6.is_zero()) record(rep, "G6", {ai, xi, yi}, g6);
                // (G7) x |> (r_V(y)a) + h(x, l_A(a)y) - y |> (r_V(x)a) - h(y, l_A(a)x)
                //      - r_V(y)(x |> a) - f(x <| a, y) + r_V(x)(y |> a) + f(y <| a, x)
                //      - a o h(x,y) - r_V({x,y})a = 0
                Vector g7 = tr(x, rv(y, a)) + hh(x, la(a, y)) - tr(y, rv(x, a)) -
                            hh(y, la(a, x)) - rv(y, tr(x, a)) - ff(tl(x, a), y) +
                            rv(x, tr(y, a)) + ff(tl(y, a), x) - P(a, hh(x, y)) -
                            rv(cu(x, y), a);
                if (!g7.is_zero()) record(rep, "G7", {ai, xi, yi}, g7);
                // (G8) {x, l_A(a)y} + x <| (r_V(y)a) - {y, l_A(a)x} - y <| (r_V(x)a)
                //      - (x <| a)*y - l_A(x |> a)y + (y <| a)*x + l_A(y |> a)x
                //      - l_A(a){x,y} = 0
                Vector g8 = cu(x, la(a, y)) + tl(x, rv(y, a)) - cu(y, la(a, x)) -
                            tl(y, rv(x, a)) - st(tl(x, a), y) - la(tr(x, a), y) +
                            st(tl(y, a), x) + la(tr(y, a), x) - la(a, cu(x, y));
                if (!g8.is_zero()) record(rep, "G8", {ai, xi, yi}, g8);
            }
        }
    }

    for (std::size_t xi = 0; xi < nV; ++xi) {
        Vector x = eV(xi);
        for (std::size_t yi = 0; yi < nV; ++yi) {
            Vector y = eV(yi);
            for (std::size_t zi = 0; zi < nV; ++zi) {
                Vector z = eV(zi);
                // (G9) x |> f(y,z) + h(x, y*z) - z |> f(y,x) - h(z, y*x) + r_V(z)(h(y,x))
                //      + f({y,x}, z) - r_V(x)(h(y,z)) - f({y,z}, x) - l_V(y)(h(x,z))
                //      - f(y, {x,z}) = 0
                Vector g9 = tr(x, ff(y, z)) + hh(x, st(y, z)) - tr(z, ff(y, x)) -
                            hh(z, st(y, x)) + rv(z, hh(y, x)) + ff(cu(y, x), z) -
                            rv(x, hh(y, z)) - ff(cu(y, z), x) - lv(y, hh(x, z)) -
                            ff(y, cu(x, z));
                if (!g9.is_zero()) record(rep, "G9", {xi, yi, zi}, g9);
                // (G10) {x, y*z} + x <| f(y,z) + {z, y*x} - z <| f(y,x) + {y,x}*z
                //       + l_A(h(y,x))z - {y,z}*x - l_A(h(y,z))x - y*{x,z}
                //       - r_A(h(x,z))y = 0
                Vector g10 = cu(x, st(y, z)) + tl(x, ff(y, z)) + cu(z, st(y, x)) -
                             tl(z, ff(y, x)) + st(cu(y, x), z) + la(hh(y, x), z) -
                             st(cu(y, z), x) - la(hh(y, z), x) - st(y, cu(x, z)) -
                             ra(hh(x, z), y);
                if (!g10.is_zero()) record(rep, "G10", {xi, yi, zi}, g10);
            }
        }
    }
    return rep;
}

GDBialgebra unified_product_unchecked(const GDBialgebra& A, const GDExtendingDatum& d,
                                      const std::vector<std::string>& v_names) {
    std::size_t nA = A.dim, nV = d.dimV(), n = nA + nV;
    if (d.dimA() != nA) throw DimensionMismatchError("unified_product: dimA mismatch");
    BilinearMap prod(n, n, n), brk(n, n, n);

    auto put = [n](BilinearMap& t, std::size_t i, std::size_t j, const Vector& a_part,
                   const Vector& v_part, std::size_t nA_) {
        for (std::size_t k = 0; k < nA_; ++k) t.at(i, j, k) = a_part[k];
        for (std::size_t k = nA_; k < n; ++k) t.at(i, j, k) = v_part[k - nA_];
    };

    Vector zeroA(nA), zeroV(nV);
    for (std::size_t i = 0; i < n; ++i) {
        bool iA = i < nA;
        Vector ia = iA ? Vector::basis(nA, i) : zeroA;
        Vector ix = iA ? zeroV : Vector::basis(nV, i - nA);
        for (std::size_t j = 0; j < n; ++j) {
            bool jA = j < nA;
            Vector jb = jA ? Vector::basis(nA, j) : zeroA;
            Vector jy = jA ? zeroV : Vector::basis(nV, j - nA);

            // (a,x) o (b,y) = (a o b + l_V(x)b + r_V(y)a + f(x,y),
            //                  x*y + l_A(a)y + r_A(b)x)
            Vector pa(nA), pv(nV);
            if (iA && jA) {
                pa = A.product.basis_image(i, j);
            } else if (iA && !jA) {
                pa = d.novikov.r_V.eval(jy, ia);
                pv = d.novikov.l_A.eval(ia, jy);
            } else if (!iA && jA) {
                pa = d.novikov.l_V.eval(ix, jb);
                pv = d.novikov.r_A.eval(jb, ix);
            } else {
                pa = d.novikov.f.eval(ix, jy);
                pv = d.novikov.star.eval(ix, jy);
            }
            put(prod, i, j, pa, pv, nA);

            // [(a,x),(b,y)] = ([a,b] + x |> b - y |> a + h(x,y),
            //                  {x,y} + x <| b - y <| a)
            Vector ba(nA), bv(nV);
            if (iA && jA) {
                ba = A.bracket.basis_image(i, j);
            } else if (iA && !jA) {
                ba = -d.lie.tri_r.eval(jy, ia);
                bv = -d.lie.tri_l.eval(jy, ia);
            } else if (!iA && jA) {
                ba = d.lie.tri_r.eval(ix, jb);
                bv = d.lie.tri_l.eval(ix, jb);
            } else {
                ba = d.lie.h.eval(ix, jy);
                bv = d.lie.curly.eval(ix, jy);
            }
            put(brk, i, j, ba, bv, nA);
        }
    }

    GDBialgebra E{n, prod, brk, {}};
    E.basis_names = A.basis_names.size() == nA ? A.basis_names : default_basis_names(nA);
    auto vn = make_v_names(nV, v_names);
    E.basis_names.insert(E.basis_names.end(), vn.begin(), vn.end());
    return E;
}

GDBialgebra unified_product(const GDBialgebra& A, const GDExtendingDatum& d,
                            const std::vector<std::string>& v_names) {
    ValidationReport rep = check_gd_extending(A, d);
    if (!rep.pass()) throw InvalidDatumError(std::move(rep));
    return unified_product_unchecked(A, d, v_names);
}

GDBialgebra crossed_product(const GDBialgebra& A, const CrossedProductData& data,
                            const std::vector<std::string>& v_names) {
    GDExtendingDatum d = GDExtendingDatum::zero(data.dimA, data.dimV);
    d.novikov.l_V = data.l_V;
    d.novikov.r_V = data.r_V;
    d.novikov.f = data.f;
    d.novikov.star = data.v_star;
    d.lie.tri_r = data.tri_r;
    d.lie.h = data.h;
    d.lie.curly = data.v_curly;
    GDBialgebra E = unified_product(A, d, v_names);

    std::vector<std::size_t> a_idx(data.dimA);
    for (std::size_t i = 0; i < data.dimA; ++i) a_idx[i] = i;
    if (!is_ideal(E, a_idx))
        throw std::logic_error("crossed_product: A is not an ideal of the result");
    return E;
}

GDBialgebra bicrossed_product(const GDBialgebra& A, const MatchedPairData& data,
                              const std::vector<std::string>& v_names) {
    GDExtendingDatum d = GDExtendingDatum::zero(data.dimA, data.dimV);
    d.novikov.l_A = data.l_A;
    d.novikov.r_A = data.r_A;
    d.novikov.l_V = data.l_V;
    d.novikov.r_V = data.r_V;
    d.novikov.star = data.v_star;
    d.lie.tri_l = data.tri_l;
    d.lie.tri_r = data.tri_r;
    d.lie.curly = data.v_curly;
    GDBialgebra E = unified_product(A, d, v_names);

    std::vector<std::size_t> a_idx(data.dimA), v_idx(data.dimV);
    for (std::size_t i = 0; i < data.dimA; ++i) a_idx[i] = i;
    for (std::size_t i = 0; i < data.dimV; ++i) v_idx[i] = data.dimA + i;
    if (!is_subalgebra(E, a_idx) || !is_subalgebra(E, v_idx))
        throw std::logic_error("bicrossed_product: factors are not subalgebras");
    return E;
}

GDExtendingDatum extract_datum(const GDBialgebra& E, const std::vector<std::size_t>& A_idx,
                               const std::vector<std::size_t>& V_idx) {
    std::size_t nA = A_idx.size(), nV = V_idx.size();
    if (nA + nV != E.dim)
        throw DimensionMismatchError("extract_datum: index lists must partition the basis");
    std::vector<int> where(E.dim, -1);  // position within its block
    std::vector<bool> inA(E.dim, false);
    for (std::size_t i = 0; i < nA; ++i) { where[A_idx[i]] = int(i); inA[A_idx[i]] = true; }
    for (std::size_t i = 0; i < nV; ++i) {
        if (where[V_idx[i]] != -1)
            throw DimensionMismatchError("extract_datum: overlapping index lists");
        where[V_idx[i]] = int(i);
    }
    if (!is_subalgebra(E, A_idx))
        throw NotASubalgebraError("extract_datum: the A block is not a subalgebra");

    // p: E -> A is the coordinate projection; the ten maps are the block
    // components of the products of E.
    auto a_part = [&](const Vector& v) {
        Vector out(nA);
        for (std::size_t i = 0; i < E.dim; ++i)
            if (inA[i]) out[where[i]] = v[i];
        return out;
    };
    auto v_part = [&](const Vector& v) {
        Vector out(nV);
        for (std::size_t i = 0; i < E.dim; ++i)
            if (!inA[i]) out[where[i]] = v[i];
        return out;
    };

    GDExtendingDatum d = GDExtendingDatum::zero(nA, nV);
    for (std::size_t i = 0; i < nA; ++i) {
        for (std::size_t j = 0; j < nV; ++j) {
            Vector ax = E.product.basis_image(A_idx[i], V_idx[j]);   // a o x
            Vector xa = E.product.basis_image(V_idx[j], A_idx[i]);   // x o a
            Vector bx = E.bracket.basis_image(V_idx[j], A_idx[i]);   // [x, a]
            Vector lA = v_part(ax), rV = a_part(ax);
            Vector rA = v_part(xa), lV = a_part(xa);
            Vector tl = v_part(bx), tr = a_part(bx);
            for (std::size_t k = 0; k < nV; ++k) {
                d.novikov.l_A.at(i, j, k) = lA[k];
                d.novikov.r_A.at(i, j, k) = rA[k];
                d.lie.tri_l.at(j, i, k) = tl[k];
            }
            for (std::size_t k = 0; k < nA; ++k) {
                d.novikov.r_V.at(j, i, k) = rV[k];
                d.novikov.l_V.at(j, i, k) = lV[k];
                d.lie.tri_r.at(j, i, k) = tr[k];
            }
        }
    }
    for (std::size_t i = 0; i < nV; ++i)
        for (std::size_t j = 0; j < nV; ++j) {
            Vector xy = E.product.basis_image(V_idx[i], V_idx[j]);
            Vector bxy = E.bracket.basis_image(V_idx[i], V_idx[j]);
            Vector f = a_part(xy), st = v_part(xy);
            Vector h = a_part(bxy), cu = v_part(bxy);
            for (std::size_t k = 0; k < nA; ++k) {
                d.novikov.f.at(i, j, k) = f[k];
                d.lie.h.at(i, j, k) = h[k];
            }
            for (std::size_t k = 0; k < nV; ++k) {
                d.novikov.star.at(i, j, k) = st[k];
                d.lie.curly.at(i, j, k) = cu[k];
            }
        }
    return d;
}

EquivalenceWitness EquivalenceWitness::identity(std::size_t dimA, std::size_t dimV) {
    return {LinearMap::zero(dimA, dimV), LinearMap::identity(dimV)};
}

EquivalenceWitness compose_witnesses(const EquivalenceWitness& w1, const EquivalenceWitness& w2) {
    // phi_{w2} o phi_{w1} (a,x) = (a + lambda1(x) + lambda2(mu1(x)), mu2(mu1(x)))
    return {w1.lambda.plus(w2.lambda.compose(w1.mu)), w2.mu.compose(w1.mu)};
}

EquivalenceWitness inverse_witness(const EquivalenceWitness& w) {
    auto mu_inv = w.mu.inverse();
    if (!mu_inv) throw std::invalid_argument("inverse_witness: mu is singular");
    return {w.lambda.compose(*mu_inv).scaled(Scalar(-1)), *mu_inv};
}

GDExtendingDatum apply_equivalence(const GDBialgebra& A, const GDExtendingDatum& dp,
                                   const EquivalenceWitness& w) {
    std::size_t nA = dp.dimA(), nV = dp.dimV();
    if (A.dim != nA) throw DimensionMismatchError("apply_equivalence: algebra dim mismatch");
    if (w.lambda.rows() != nA || w.lambda.cols() != nV || w.mu.rows() != nV || w.mu.cols() != nV)
        throw DimensionMismatchError("apply_equivalence: witness shapes");
    auto mu_inv_opt = w.mu.inverse();
    if (!mu_inv_opt) throw std::invalid_argument("apply_equivalence: mu is singular");
    const LinearMap& mu_inv = *mu_inv_opt;

    auto P = [&](const Vector& a, const Vector& b) { return A.product.eval(a, b); };
    auto Br = [&](const Vector& a, const Vector& b) { return A.bracket.eval(a, b); };
    auto lam = [&](const Vector& x) { return w.lambda.apply(x); };
    auto mu = [&](const Vector& x) { return w.mu.apply(x); };
    auto mi = [&](const Vector& x) { return mu_inv.apply(x); };
    auto lam_mi = [&](const Vector& x) { return w.lambda.apply(mu_inv.apply(x)); };

    auto lap = [&](const Vector& a, const Vector& x) { return dp.novikov.l_A.eval(a, x); };
    auto rap = [&](const Vector& a, const Vector& x) { return dp.novikov.r_A.eval(a, x); };
    auto lvp = [&](const Vector& x, const Vector& a) { return dp.novikov.l_V.eval(x, a); };
    auto rvp = [&](const Vector& x, const Vector& a) { return dp.novikov.r_V.eval(x, a); };
    auto fp = [&](const Vector& x, const Vector& y) { return dp.novikov.f.eval(x, y); };
    auto stp = [&](const Vector& x, const Vector& y) { return dp.novikov.star.eval(x, y); };
    auto tlp = [&](const Vector& x, const Vector& a) { return dp.lie.tri_l.eval(x, a); };
    auto trp = [&](const Vector& x, const Vector& a) { return dp.lie.tri_r.eval(x, a); };
    auto hp = [&](const Vector& x, const Vector& y) { return dp.lie.h.eval(x, y); };
    auto cup = [&](const Vector& x, const Vector& y) { return dp.lie.curly.eval(x, y); };

    GDExtendingDatum d = GDExtendingDatum::zero(nA, nV);
    auto eA = [&](std::size_t i) { return Vector::basis(nA, i); };
    auto eV = [&](std::size_t i) { return Vector::basis(nV, i); };

    auto set_av_to_v = [&](BilinearMap& t, std::size_t i, std::size_t j, const Vector& v) {
        for (std::size_t k = 0; k < nV; ++k) t.at(i, j, k) = v[k];
    };
    auto set_va_to_a = [&](BilinearMap& t, std::size_t i, std::size_t j, const Vector& v) {
        for (std::size_t k = 0; k < nA; ++k) t.at(i, j, k) = v[k];
    };

    for (std::size_t ai = 0; ai < nA; ++ai) {
        Vector a = eA(ai);
        for (std::size_t xi = 0; xi < nV; ++xi) {
            Vector x = eV(xi), mx = mu(x);
            // (D1) r_A(a)x = mu^{-1}(r_A'(a) mu(x))
            set_av_to_v(d.novikov.r_A, ai, xi, mi(rap(a, mx)));
            // (D2) l_A(a)x = mu^{-1}(l_A'(a) mu(x))
            set_av_to_v(d.novikov.l_A, ai, xi, mi(lap(a, mx)));
            // (D3) l_V(x)a = lambda(x) o a + l_V'(mu(x))a - lambda mu^{-1}(r_A'(a) mu(x))
            set_va_to_a(d.novikov.l_V, xi, ai, P(lam(x), a) + lvp(mx, a) - lam_mi(rap(a, mx)));
            // (D4) r_V(x)a = a o lambda(x) + r_V'(mu(x))a - lambda mu^{-1}(l_A'(a) mu(x))
            set_va_to_a(d.novikov.r_V, xi, ai, P(a, lam(x)) + rvp(mx, a) - lam_mi(lap(a, mx)));
            // (D7) x <| a = mu^{-1}(mu(x) <|' a)
            set_av_to_v(d.lie.tri_l, xi, ai, mi(tlp(mx, a)));
            // (D8) x |> a = [lambda(x), a] + mu(x) |>' a - lambda mu^{-1}(mu(x) <|' a)
            set_va_to_a(d.lie.tri_r, xi, ai, Br(lam(x), a) + trp(mx, a) - lam_mi(tlp(mx, a)));
        }
    }

    for (std::size_t xi = 0; xi < nV; ++xi) {
        Vector x = eV(xi), mx = mu(x), lx = lam(x);
        for (std::size_t yi = 0; yi < nV; ++yi) {
            Vector y = eV(yi), my = mu(y), ly = lam(y);
            // (D5) x*y = mu^{-1}(mu(x) *' mu(y)) + mu^{-1}(l_A'(lambda(x)) mu(y))
            //      + mu^{-1}(r_A'(lambda(y)) mu(x))
            set_av_to_v(d.novikov.star, xi, yi,
                        mi(stp(mx, my)) + mi(lap(lx, my)) + mi(rap(ly, mx)));
            // (D6) f(x,y) = lambda(x) o lambda(y) + l_V'(mu(x)) lambda(y)
            //      + r_V'(mu(y)) lambda(x) + f'(mu(x), mu(y))
            //      - lambda mu^{-1}(mu(x) *' mu(y)) - lambda mu^{-1}(l_A'(lambda(x)) mu(y))
            //      - lambda mu^{-1}(r_A'(lambda(y)) mu(x))
            set_va_to_a(d.novikov.f, xi, yi,
                        P(lx, ly) + lvp(mx, ly) + rvp(my, lx) + fp(mx, my) - lam_mi(stp(mx, my)) -
                            lam_mi(lap(lx, my)) - lam_mi(rap(ly, mx)));
            // (D9) h(x,y) = [lambda(x), lambda(y)] + mu(x) |>' lambda(y)
            //      - mu(y) |>' lambda(x) + h'(mu(x), mu(y))
            //      - lambda mu^{-1}({mu(x), mu(y)}') - lambda mu^{-1}(mu(x) <|' lambda(y))
            //      + lambda mu^{-1}(mu(y) <|' lambda(x))
            set_va_to_a(d.lie.h, xi, yi,
                        Br(lx, ly) + trp(mx, ly) - trp(my, lx) + hp(mx, my) - lam_mi(cup(mx, my)) -
                            lam_mi(tlp(mx, ly)) + lam_mi(tlp(my, lx)));
            // (D10) {x,y} = mu^{-1}({mu(x), mu(y)}') + mu^{-1}(mu(x) <|' lambda(y))
            //       - mu^{-1}(mu(y) <|' lambda(x))
            set_av_to_v(d.lie.curly, xi, yi,
                        mi(cup(mx, my)) + mi(tlp(mx, ly)) - mi(tlp(my, lx)));
        }
    }
    return d;
}

ValidationReport check_datum_equivalence(const GDBialgebra& A, const GDExtendingDatum& d,
                                         const GDExtendingDatum& dp,
                                         const EquivalenceWitness& w) {
    GDExtendingDatum t = apply_equivalence(A, dp, w);
    ValidationReport rep;
    std::size_t nA = d.dimA(), nV = d.dimV();

    auto compare = [&](const BilinearMap& lhs, const BilinearMap& rhs, const char* cond) {
        for (std::size_t i = 0; i < lhs.in1(); ++i)
            for (std::size_t j = 0; j < lhs.in2(); ++j) {
                Vector r = lhs.basis_image(i, j) - rhs.basis_image(i, j);
                if (!r.is_zero()) {
                    record(rep, cond, {i, j}, r);
                    return;
                }
            }
    };
    (void)nA;
    (void)nV;
    compare(d.novikov.r_A, t.novikov.r_A, "D1");
    compare(d.novikov.l_A, t.novikov.l_A, "D2");
    compare(d.novikov.l_V, t.novikov.l_V, "D3");
    compare(d.novikov.r_V, t.novikov.r_V, "D4");
    compare(d.novikov.star, t.novikov.star, "D5");
    compare(d.novikov.f, t.novikov.f, "D6");
    compare(d.lie.tri_l, t.lie.tri_l, "D7");
    compare(d.lie.tri_r, t.lie.tri_r, "D8");
    compare(d.lie.h, t.lie.h, "D9");
    compare(d.lie.curly, t.lie.curly, "D10");
    return rep;
}

LinearMap equivalence_matrix(const EquivalenceWitness& w) {
    std::size_t nA = w.lambda.rows(), nV = w.lambda.cols(), n = nA + nV;
    LinearMap P(n, n);
    for (std::size_t i = 0; i < nA; ++i) P.at(i, i) = Scalar(1);
    for (std::size_t i = 0; i < nA; ++i)
        for (std::size_t j = 0; j < nV; ++j) P.at(i, nA + j) = w.lambda.at(i, j);
    for (std::size_t i = 0; i < nV; ++i)
        for (std::size_t j = 0; j < nV; ++j) P.at(nA + i, nA + j) = w.mu.at(i, j);
    return P;
}

}  // namespace gdbialg
