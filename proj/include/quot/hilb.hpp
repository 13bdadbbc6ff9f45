#pragma once

#include "quot/chart.hpp"

namespace quot {

/// Homogenization of a monic characteristic polynomial through a frame:
/// sum of a_k * l'^k * l^(d-k) written in standard (x, y) coordinates and
/// normalized. `coeffs` lists a_0..a_d.
BinaryForm hilb_form(const std::vector<Scalar>& coeffs, const CoordinateFrame& frame);

/// The degree-d divisor supporting the module of a chart point: the
/// homogenized characteristic polynomial of its parameter matrix.
BinaryForm hilb_support(const QuotPoint& pt);

/// Symbolic coordinates of the support map on a chart: the coefficients of
/// the homogenized generic characteristic polynomial as polynomials in the
/// chart parameters, ordered by (y^d, x*y^(d-1), ..., x^d).
std::vector<Polynomial> xi_chart_map(const ChartIndex& chart, const Ring& ring);
std::vector<Polynomial> xi_chart_map(const ChartIndex& chart, Field field);

/// Consistency oracle: in the expanded presentation of the point, the
/// characteristic-polynomial combination of the columns of every block must
/// vanish. Always true mathematically; exercises expand_point and char_poly.
bool cayley_hamilton_check(const QuotPoint& pt);

}  // namespace quot
