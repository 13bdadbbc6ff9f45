#pragma once

#include "quot/binary_form.hpp"
#include "quot/matrix.hpp"

namespace quot {

/// Open chart of the degree-d rank-r quotient space, selected by a weakly
/// decreasing list of positive parts summing to d, at most one part per
/// block. Part m claims the first parts[m] columns of block m.
class ChartIndex {
public:
    ChartIndex(unsigned d, unsigned r, std::vector<unsigned> parts);

    unsigned d() const { return d_; }
    unsigned r() const { return r_; }
    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned blocks_used() const { return static_cast<unsigned>(parts_.size()); }

    /// Offset of block m (1-based) inside the row index range [0, d).
    unsigned offset(unsigned m) const;

    /// The d selected global column indices (0-based, ascending) inside the
    /// d x (d+1)r presentation matrix.
    std::vector<std::size_t> columns() const;

    std::string str() const;  // "[3,2]"

    bool operator==(const ChartIndex& o) const {
        return d_ == o.d_ && r_ == o.r_ && parts_ == o.parts_;
    }

private:
    unsigned d_, r_;
    std::vector<unsigned> parts_;
};

/// Linear coordinates used by a point: a 2x2 change on the line coordinates,
/// rows giving (l, l') in terms of (x, y), and an r x r change of the free
/// basis, columns giving the new basis in terms of the old.
struct CoordinateFrame {
    ScalarMatrix gl2;
    ScalarMatrix glr;

    static CoordinateFrame identity(Field f, unsigned r);
    bool is_identity() const;
};

/// A point of a chart: parameter values w_{h,m} plus the frame in use.
struct QuotPoint {
    ChartIndex chart;
    CoordinateFrame frame;
    Assignment params;  // exactly d*r values keyed w_<h>_<m>

    void validate() const;
};

/// d x (d+1)r presentation matrix with r blocks of d+1 columns.
struct CMatrix {
    unsigned d, r;
    ScalarMatrix m;

    CMatrix(unsigned d_, unsigned r_, ScalarMatrix mat);

    /// Column j (1-based) of block l (1-based).
    std::vector<Scalar> block_col(unsigned l, unsigned j) const;
    std::size_t col_index(unsigned l, unsigned j) const {
        return static_cast<std::size_t>(l - 1) * (d + 1) + (j - 1);
    }
};

/// All maximal minors, keyed by the ascending d-subset of 0-based column
/// indices, enumerated in colex order. For a chart-normalized matrix the
/// minor at the chart's own columns is 1.
struct PlueckerVector {
    unsigned d, r;
    std::vector<std::pair<std::vector<std::size_t>, Scalar>> coords;

    const Scalar& at(const std::vector<std::size_t>& cols) const;
};

/// The d x d matrix over k[w_{h,m}] describing multiplication by l'/l on a
/// chart: identity columns from the chart structure interleaved with one
/// fresh parameter column per used block; companion-shaped on chart [d].
PolyMatrix generic_p_matrix(const ChartIndex& chart, const Ring& ring);
PolyMatrix generic_p_matrix(const ChartIndex& chart, Field field);

/// Ideal generated by the d^2 entries of the t-th power of the generic
/// matrix; cuts the locus where the fat-point condition (l')^t = 0 holds.
/// Only the full-degree case t = d is meaningful here.
Ideal chart_ideal(const ChartIndex& chart, unsigned t, const Ring& ring);
Ideal chart_ideal(const ChartIndex& chart, unsigned t, Field field,
                  MonomialOrder order = MonomialOrder::grevlex());

/// Ideal generated by the d non-leading coefficients of the characteristic
/// polynomial of the generic matrix; cuts the reduced structure of the same
/// locus.
Ideal reduced_chart_equations(const ChartIndex& chart, const Ring& ring);
Ideal reduced_chart_equations(const ChartIndex& chart, Field field,
                              MonomialOrder order = MonomialOrder::grevlex());

/// Generic matrix evaluated at the point's parameters.
ScalarMatrix p_matrix_at(const QuotPoint& pt);

/// Full presentation matrix of a point: block seeds propagated by repeated
/// multiplication with the evaluated matrix, so column j of each block is
/// P^(j-1) times column 1. Chart columns form the identity.
CMatrix expand_point(const QuotPoint& pt);

PlueckerVector pluecker_coords(const CMatrix& C);

struct DetectResult {
    ChartIndex chart;
    CoordinateFrame frame;
    CMatrix normalized;
    QuotPoint point;
};

/// Finds the lex-largest chart containing the module presented by C, trying
/// the identity frame first and then a fixed list of line-coordinate changes
/// and block permutations. The returned matrix is row-reduced so the chart
/// columns are the identity, and the column recursion against the detected
/// parameter matrix is verified before returning.
DetectResult detect_chart(const CMatrix& C);

/// Deterministic 2x2 frame candidates tried by detect_chart, identity first.
std::vector<ScalarMatrix> detect_frame_candidates(Field f);

}  // namespace quot
