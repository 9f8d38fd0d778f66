#pragma once

#include "gdbialg/flag.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gdbialg {

using ParamMap = std::map<std::string, Scalar>;

// Built-in library of the W(1,b) bialgebra and the ten codimension-1 flag
// datum families A1..A5 (ambient parameter b != 0) and B1..B5 (b = 0).
//
// Matrices follow the usual column convention: column j is the image of the
// j-th basis vector {L, W}.

// Ids: "W(1,b)" (params: b) and "A1".."A5", "B1".."B5".
std::vector<std::string> catalog_ids();

// Parameter names for a catalog id (for the flag families, "b" is the ambient
// W(1,b) parameter; the B families fix b = 0 and ignore a supplied "b").
std::vector<std::string> catalog_param_names(const std::string& id);

GDBialgebra catalog_algebra(const std::string& id, const ParamMap& params);
GDFlagDatum catalog_flag_datum(const std::string& id, const ParamMap& params);
// The ambient algebra a flag-datum entry lives over.
GDBialgebra catalog_ambient(const std::string& id, const ParamMap& params);

// Parameter grids.  `catalog_grid` is the raw per-parameter grid
// {-2,-1,0,1,2}; `catalog_valid_grid` restricts it to instantiations that
// satisfy check_gd_flag (the A3 family needs b3 = b1 and the A5 family needs
// k*b1 = 0; the printed four- resp. two-parameter versions fail FN3 resp. FN9
// off those slices).
std::vector<ParamMap> catalog_grid(const std::string& id, const Scalar& b);
std::vector<ParamMap> catalog_valid_grid(const std::string& id, const Scalar& b);

// A reduction stated by the source family: the target parameters and the
// closed-form witness, as functions of the source parameters.
struct StatedReduction {
    std::string target_id;
    ParamMap target_params;
    FlagEquivalenceWitness witness;
};

// Returns the stated reduction for the instantiation, or nullopt where the
// family gives none (or none with a rational witness, e.g. the A2 and B5
// beta^2-scalings at non-square parameter values).
std::optional<StatedReduction> stated_reduction(const std::string& id, const ParamMap& params);

// Equivalence-class representatives per the classification (b != 0: the A
// list; b = 0: the B list).  Parameterized families are instantiated on
// `family_grid` for their remaining free parameters.
struct RepresentativeEntry {
    std::string case_id;
    ParamMap params;
};
std::vector<RepresentativeEntry> representatives(const Scalar& b,
                                                 const std::vector<Scalar>& family_grid = {
                                                     Scalar(-2), Scalar(-1), Scalar(0), Scalar(1),
                                                     Scalar(2)});

}  // namespace gdbialg
