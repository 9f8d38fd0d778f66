#pragma once

#include "gdbialg/bilinear.hpp"
#include "gdbialg/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gdbialg {

struct LieAlgebra {
    std::size_t dim = 0;
    BilinearMap bracket;  // (dim, dim, dim)
    std::vector<std::string> basis_names;
};

struct NovikovAlgebra {
    std::size_t dim = 0;
    BilinearMap product;  // (dim, dim, dim)
    std::vector<std::string> basis_names;
};

// The central object: one space carrying a Novikov product and a Lie bracket
// tied by the 5-term compatibility identity.
struct GDBialgebra {
    std::size_t dim = 0;
    BilinearMap product;
    BilinearMap bracket;
    std::vector<std::string> basis_names;

    NovikovAlgebra novikov() const { return {dim, product, basis_names}; }
    LieAlgebra lie() const { return {dim, bracket, basis_names}; }

    friend bool operator==(const GDBialgebra& a, const GDBialgebra& b) {
        return a.dim == b.dim && a.product == b.product && a.bracket == b.bracket;
    }
};

std::vector<std::string> default_basis_names(std::size_t dim);

// Axiom checkers.  All identities are multilinear, so checking them on basis
// tuples is complete; exceptions are the quadratic conditions [x,x]=0 (and
// h(x,x)=0 later), which are polarized to i=j and i<j pairs.
ValidationReport check_lie(const BilinearMap& bracket);
ValidationReport check_lie(const LieAlgebra& L);
ValidationReport check_novikov(const BilinearMap& product);
ValidationReport check_novikov(const NovikovAlgebra& N);
ValidationReport check_gd(const GDBialgebra& A);

// Commutator bracket a o b - b o a of a Novikov product.
LieAlgebra sub_adjacent_lie(const NovikovAlgebra& N);

// Twisted derivation (lambda, D): lambda kills brackets (TD1) and D satisfies
// the lambda-deformed Leibniz rule (TD2).  lambda is a 1 x dim functional.
ValidationReport check_twisted_derivation(const LieAlgebra& L, const LinearMap& lambda,
                                          const LinearMap& D);

// Quasicentroid: T(a o b) = T(a) o b  and
// T(a o b) - T(b o a) = a o T(b) - b o T(a).  Condition ids "QC1", "QC2".
ValidationReport check_quasicentroid(const NovikovAlgebra& N, const LinearMap& T);

// Witness b with T(a) = a o b for all a, when one exists.
std::optional<Vector> inner_quasicentroid_witness(const NovikovAlgebra& N, const LinearMap& T);

// Spaces computed by solve_linear on the defining identities.
std::vector<LinearMap> derivation_space(const LieAlgebra& L);
std::vector<Vector> center(const LieAlgebra& L);
bool is_perfect(const LieAlgebra& L);
// { b | a o b = 0 for all a }
std::vector<Vector> novikov_annihilator_right(const NovikovAlgebra& N);

// adjoint map ad(a0) = [a0, .]
LinearMap ad(const LieAlgebra& L, const Vector& a0);
// right multiplication T_b(a) = a o b
LinearMap right_multiplication(const NovikovAlgebra& N, const Vector& b);

// Novikov bimodule: l_A, r_A stored as tensors (dimA, carrier, carrier).
// Condition ids "BM1".."BM4".
ValidationReport check_novikov_bimodule(const NovikovAlgebra& N, const BilinearMap& l_A,
                                        const BilinearMap& r_A);

// A module of a GD bialgebra: a Lie action plus a Novikov bimodule plus two
// compatibilities.  Right modules act by v <| a (tensor (carrier, dimA,
// carrier)); a left module is stored through the same data with action a |> v
// (tensor (dimA, carrier, carrier)) and checked via v <| a := -(a |> v).
struct GDModuleData {
    std::size_t carrier_dim = 0;
    BilinearMap action;  // right: (carrier, dimA, carrier); left: (dimA, carrier, carrier)
    BilinearMap l_A;     // (dimA, carrier, carrier)
    BilinearMap r_A;     // (dimA, carrier, carrier)
};

// Ids: "RM-lie" for the Lie module axiom, "BM1".."BM4", "RM-gd1", "RM-gd2".
ValidationReport check_gd_right_module(const GDBialgebra& A, const GDModuleData& m);
ValidationReport check_gd_left_module(const GDBialgebra& A, const GDModuleData& m);

// Structure transport helpers.
bool is_subalgebra(const GDBialgebra& E, const std::vector<std::size_t>& idx);
bool is_ideal(const GDBialgebra& E, const std::vector<std::size_t>& idx);
// P: E1 -> E2 invertible; checks P(u o v) = P(u) o P(v) and P([u,v]) = [Pu,Pv].
bool is_isomorphism(const GDBialgebra& E1, const GDBialgebra& E2, const LinearMap& P);

}  // namespace gdbialg
