#pragma once

#include <susyw/wgen.hpp>

#include <map>

namespace susyw {

// coefficientwise chi-adjoint of a polynomial on a Laurent operator
ChiDOp ad_chi(const Engine& eng, const DiffPoly& p, const DOp& a);
// the same followed by the ideal projection
ChiDOp ad_chi_J(const Engine& eng, const DiffPoly& p, const DOp& a);
ChiDOp project(const Engine& eng, const ChiDOp& a);

// rewrite a pure differential operator with the coefficients on the right:
// A = sum_j D^j b_j
std::map<int, DiffPoly> right_coeffs(const DOp& a);

// skewsymmetry and Jacobi residuals over all basis pairs/triples
Report check_axioms(const Engine& eng);

// the construction identity suite for the given presentation
Report identities(const Engine& eng, int work_floor);

// randomized engine identities: sesquilinearity, Leibniz both ways,
// adjoint action compatibility with products and D, star involution,
// composition associativity
Report engine_property_checks(const Engine& eng, int work_floor, int cases, unsigned seed);

}  // namespace susyw
