#pragma once

#include "gdbialg/algebras.hpp"

#include <optional>

namespace gdbialg {

// Lie extending datum (tri_l = <|, tri_r = |>, h, curly = {.,.}).
struct LieExtendingDatum {
    std::size_t dimA = 0, dimV = 0;
    BilinearMap tri_l;  // V x A -> V
    BilinearMap tri_r;  // V x A -> A
    BilinearMap h;      // V x V -> A
    BilinearMap curly;  // V x V -> V

    static LieExtendingDatum zero(std::size_t dimA, std::size_t dimV);
    friend bool operator==(const LieExtendingDatum& a, const LieExtendingDatum& b) {
        return a.tri_l == b.tri_l && a.tri_r == b.tri_r && a.h == b.h && a.curly == b.curly;
    }
};

// Novikov extending datum.  The A-indexed endomorphism families l_A, r_A are
// stored as bilinear tensors like every other map: one evaluation code path,
// one equality predicate.
struct NovikovExtendingDatum {
    std::size_t dimA = 0, dimV = 0;
    BilinearMap l_A;   // A x V -> V
    BilinearMap r_A;   // A x V -> V
    BilinearMap l_V;   // V x A -> A
    BilinearMap r_V;   // V x A -> A
    BilinearMap f;     // V x V -> A
    BilinearMap star;  // V x V -> V

    static NovikovExtendingDatum zero(std::size_t dimA, std::size_t dimV);
    friend bool operator==(const NovikovExtendingDatum& a, const NovikovExtendingDatum& b) {
        return a.l_A == b.l_A && a.r_A == b.r_A && a.l_V == b.l_V && a.r_V == b.r_V &&
               a.f == b.f && a.star == b.star;
    }
};

struct GDExtendingDatum {
    NovikovExtendingDatum novikov;
    LieExtendingDatum lie;

    std::size_t dimA() const { return novikov.dimA; }
    std::size_t dimV() const { return novikov.dimV; }
    static GDExtendingDatum zero(std::size_t dimA, std::size_t dimV);
    friend bool operator==(const GDExtendingDatum& a, const GDExtendingDatum& b) {
        return a.novikov == b.novikov && a.lie == b.lie;
    }
};

// Condition checkers.  Reported ids are the paper labels L1..L7, N1..N20,
// G1..G10 (a failing sub-datum surfaces its own N*/L* ids; that is G0).
ValidationReport check_lie_extending(const LieAlgebra& A, const LieExtendingDatum& d);
ValidationReport check_novikov_extending(const NovikovAlgebra& A, const NovikovExtendingDatum& d);
ValidationReport check_gd_extending(const GDBialgebra& A, const GDExtendingDatum& d);

// The unified product A natural V on A + V.  Basis: A part first, then V part.
GDBialgebra unified_product(const GDBialgebra& A, const GDExtendingDatum& d,
                            const std::vector<std::string>& v_names = {});
// Same construction without the validity precondition (for falsification tests).
GDBialgebra unified_product_unchecked(const GDBialgebra& A, const GDExtendingDatum& d,
                                      const std::vector<std::string>& v_names = {});

// Crossed product: l_A, r_A, <| trivial.  V carries its own GD structure
// (star, curly).  Checks the datum and that A embeds as an ideal.
struct CrossedProductData {
    std::size_t dimA = 0, dimV = 0;
    BilinearMap l_V, r_V;      // V x A -> A
    BilinearMap f;             // V x V -> A
    BilinearMap tri_r;         // V x A -> A
    BilinearMap h;             // V x V -> A
    BilinearMap v_star;        // V x V -> V
    BilinearMap v_curly;       // V x V -> V
};
GDBialgebra crossed_product(const GDBialgebra& A, const CrossedProductData& data,
                            const std::vector<std::string>& v_names = {});

// Bicrossed product of a matched pair: f, h trivial.  Both A and V embed as
// subalgebras.
struct MatchedPairData {
    std::size_t dimA = 0, dimV = 0;
    BilinearMap l_A, r_A;      // A x V -> V
    BilinearMap tri_l;         // V x A -> V
    BilinearMap l_V, r_V;      // V x A -> A
    BilinearMap tri_r;         // V x A -> A
    BilinearMap v_star;        // V x V -> V
    BilinearMap v_curly;       // V x V -> V
};
GDBialgebra bicrossed_product(const GDBialgebra& A, const MatchedPairData& data,
                              const std::vector<std::string>& v_names = {});

// Reads the extending datum off an algebra E with a distinguished subalgebra
// spanned by the basis vectors at A_idx (complement: V_idx).  Throws
// NotASubalgebraError if the A block is not closed.
GDExtendingDatum extract_datum(const GDBialgebra& E, const std::vector<std::size_t>& A_idx,
                               const std::vector<std::size_t>& V_idx);

// phi_{lambda,mu}(a,x) = (a + lambda(x), mu(x)); mu invertible.
struct EquivalenceWitness {
    LinearMap lambda;  // dimA x dimV
    LinearMap mu;      // dimV x dimV

    static EquivalenceWitness identity(std::size_t dimA, std::size_t dimV);
};

// Composition of phi_{w2} o phi_{w1}: lambda = lambda1 + lambda2 o mu1,
// mu = mu2 o mu1.  (Derived from the phi composition; used by the
// transitivity tests.)
EquivalenceWitness compose_witnesses(const EquivalenceWitness& w1, const EquivalenceWitness& w2);
EquivalenceWitness inverse_witness(const EquivalenceWitness& w);

// Computes the datum d obtained from d' through (lambda, mu) per (D1)-(D10).
// The ambient algebra supplies the products appearing in D3, D4, D6, D8, D9.
GDExtendingDatum apply_equivalence(const GDBialgebra& A, const GDExtendingDatum& dprime,
                                   const EquivalenceWitness& w);

// Verifies d = transform(d') map by map; ids "D1".."D10".
ValidationReport check_datum_equivalence(const GDBialgebra& A, const GDExtendingDatum& d,
                                         const GDExtendingDatum& dprime,
                                         const EquivalenceWitness& w);

// phi_{lambda,mu} as a matrix on A + V (for isomorphism transport checks).
LinearMap equivalence_matrix(const EquivalenceWitness& w);

}  // namespace gdbialg
