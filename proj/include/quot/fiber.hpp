#pragma once

#include "quot/hilb.hpp"

namespace quot {

/// One point of the support together with the piece of the module living
/// over it, re-expressed as a point of the smaller quotient space.
struct FiberComponent {
    Scalar lambda;          // finite root, line coordinates of the point's frame
    unsigned multiplicity;  // algebraic multiplicity in the characteristic polynomial
    BinaryForm root_form;   // y - lambda*x pulled back to standard coordinates
    QuotPoint restricted;
};

/// Linear factorization of a monic polynomial given by coefficients a_0..a_d
/// over the coefficient field. Returns (root, multiplicity) sorted by root.
/// Throws NonSplitCharPoly when a factor without roots in the field remains.
std::vector<std::pair<Scalar, unsigned>> linear_roots(const std::vector<Scalar>& coeffs);

/// Splits a point along the distinct roots of its characteristic polynomial.
/// Each component restricts the module to the generalized eigenspace of the
/// root and re-detects a chart for the restriction; multiplicities sum to d
/// and the product of the component forms is the point's support form.
std::vector<FiberComponent> fiber_decompose(const QuotPoint& pt);

struct RootMultiplicity {
    Scalar lambda;
    unsigned algebraic;  // multiplicity in the characteristic polynomial
    unsigned corank;     // dim ker(P - lambda*Id)
    bool flagged;        // corank != algebraic
};

/// Per-root comparison of the characteristic-polynomial multiplicity with
/// the corank of the shifted matrix; the two agree exactly when the module
/// is as large as possible over the root.
std::vector<RootMultiplicity> multiplicity_profile(const QuotPoint& pt);

}  // namespace quot
