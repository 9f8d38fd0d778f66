#pragma once

#include "gdbialg/extending.hpp"

#include <optional>

namespace gdbialg {

// Flag datum of a Novikov algebra: (p, q, S, T, a1, k).
struct NovikovFlagDatum {
    LinearMap p, q;  // 1 x dim functionals
    LinearMap S, T;  // dim x dim
    Vector a1;
    Scalar k;

    static NovikovFlagDatum zero(std::size_t dim);
};

// Flag datum of a GD bialgebra: the Novikov part plus the twisted-derivation
// pair (eta, D) and the mixed conditions GF1-GF6.
struct GDFlagDatum {
    NovikovFlagDatum nov;
    LinearMap eta;  // 1 x dim
    LinearMap D;    // dim x dim

    static GDFlagDatum zero(std::size_t dim);
    std::size_t dim() const { return nov.S.rows(); }

    friend bool operator==(const GDFlagDatum& a, const GDFlagDatum& b) {
        return a.nov.p == b.nov.p && a.nov.q == b.nov.q && a.nov.S == b.nov.S &&
               a.nov.T == b.nov.T && a.nov.a1 == b.nov.a1 && a.nov.k == b.nov.k &&
               a.eta == b.eta && a.D == b.D;
    }
};

// Ids "FN1".."FN10".
ValidationReport check_novikov_flag(const NovikovAlgebra& A, const NovikovFlagDatum& d);
// Ids: the FN ids and TD ids (that is GF0) plus "GF1".."GF6".
ValidationReport check_gd_flag(const GDBialgebra& A, const GDFlagDatum& d);

// The dim-V = 1 dictionary: l_A(a)x = p(a)x, r_A(a)x = q(a)x, l_V(x)a = S(a),
// r_V(x)a = T(a), f(x,x) = a1, x*x = kx, x <| a = eta(a)x, x |> a = D(a),
// h = 0, {.,.} = 0.
GDExtendingDatum induced_extending_datum(const GDFlagDatum& d);
// Inverse of the dictionary; requires dimV == 1, h == 0, curly == 0.
std::optional<GDFlagDatum> flag_from_extending(const GDExtendingDatum& d);

// GD(A, x | p, q, S, T, a1, k, eta, D): the unified product of A with the
// induced dim-1 datum.  Throws InvalidFlagDatumError if check_gd_flag fails.
GDBialgebra build_flag_extension(const GDBialgebra& A, const GDFlagDatum& d,
                                 const std::string& x_name = "x");
GDBialgebra build_flag_extension_unchecked(const GDBialgebra& A, const GDFlagDatum& d,
                                           const std::string& x_name = "x");

// Witness (a0, beta) for flag-datum equivalence; corresponds to
// lambda(x) = a0, mu(x) = beta x with beta != 0.
struct FlagEquivalenceWitness {
    Vector a0;
    Scalar beta;
};

FlagEquivalenceWitness identity_flag_witness(std::size_t dim);
FlagEquivalenceWitness compose_flag_witnesses(const FlagEquivalenceWitness& w1,
                                              const FlagEquivalenceWitness& w2);
FlagEquivalenceWitness inverse_flag_witness(const FlagEquivalenceWitness& w);

// d == transform of d' by (a0, beta)?  Checks p = p', q = q', eta = eta'
// (ids "p", "q", "eta") and then (FD1)-(FD5).
ValidationReport check_flag_equivalence(const GDBialgebra& A, const GDFlagDatum& d,
                                        const GDFlagDatum& dprime,
                                        const FlagEquivalenceWitness& w);

// The transform itself (k first via FD4, then a1 via FD3).
GDFlagDatum apply_flag_equivalence(const GDBialgebra& A, const GDFlagDatum& dprime,
                                   const FlagEquivalenceWitness& w);

struct FlagSolveOptions {
    // FD1, FD2, FD4, FD5 and the scalar gates are linear in (a0, beta); the
    // affine solution set is then filtered by FD3 and beta != 0.  Free
    // parameters beyond this bound raise SearchInconclusiveError.
    std::size_t max_free_dim = 2;
    // Height bound for the grid over the first free parameter when two are
    // free (numerator and denominator magnitudes).
    long long height = 16;
};

// Sound: every returned witness passes check_flag_equivalence.  Complete on
// the rational-witness regime: if the linear stage is inconsistent, or the
// nonlinear filter excludes every candidate, no witness exists over Q.
std::optional<FlagEquivalenceWitness> solve_flag_equivalence(const GDBialgebra& A,
                                                             const GDFlagDatum& d,
                                                             const GDFlagDatum& dprime,
                                                             const FlagSolveOptions& opt = {});

// Specialized flag-datum families.
enum class SFClass { SF1, SF2, SF3, SF4, SF5, General };
std::string to_string(SFClass c);

// Tags by which of p, q, T, eta, D, a1, k vanish.
SFClass check_sf_class(const GDFlagDatum& d);

// The simplified relation lists; ids "SFn-m" for the m-th displayed condition
// of the SFn relation.  SF2 and SF5 ignore w.a0 (their relations only scale).
ValidationReport check_sf_relation(SFClass tag, const GDBialgebra& A, const GDFlagDatum& d,
                                   const GDFlagDatum& dprime, const FlagEquivalenceWitness& w);

}  // namespace gdbialg
