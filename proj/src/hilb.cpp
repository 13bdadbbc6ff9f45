#include "quot/hilb.hpp"

#include <algorithm>

namespace quot {

BinaryForm hilb_form(const std::vector<Scalar>& coeffs, const CoordinateFrame& frame) {
    if (coeffs.empty()) throw UsageError("hilb_form: empty coefficient list");
    const Field f = frame.gl2.field();
    const unsigned d = static_cast<unsigned>(coeffs.size() - 1);
    BinaryForm L = BinaryForm::linear(f, frame.gl2.at(0, 0), frame.gl2.at(0, 1));
    BinaryForm Lp = BinaryForm::linear(f, frame.gl2.at(1, 0), frame.gl2.at(1, 1));
    std::vector<BinaryForm> pl, plp;
    BinaryForm one(f, std::vector<Scalar>{Scalar::one(f)});
    pl.push_back(one);
    plp.push_back(one);
    for (unsigned k = 1; k <= d; ++k) {
        pl.push_back(pl.back() * L);
        plp.push_back(plp.back() * Lp);
    }
    BinaryForm out(f, d);
    for (unsigned k = 0; k <= d; ++k) {
        if (coeffs[k].is_zero()) continue;
        BinaryForm part = plp[k] * pl[d - k];
        for (unsigned i = 0; i <= d; ++i) out.coeff(i) += coeffs[k] * part.coeff(i);
    }
    return out.normalized();
}

BinaryForm hilb_support(const QuotPoint& pt) {
    return hilb_form(char_poly(p_matrix_at(pt)), pt.frame);
}

std::vector<Polynomial> xi_chart_map(const ChartIndex& chart, const Ring& ring) {
    std::vector<Polynomial> coeffs = char_poly(generic_p_matrix(chart, ring));
    std::reverse(coeffs.begin(), coeffs.end());  // a_d first matches y^d first
    return coeffs;
}

std::vector<Polynomial> xi_chart_map(const ChartIndex& chart, Field field) {
    return xi_chart_map(chart, chart_ring(field, chart.d(), chart.r()));
}

bool cayley_hamilton_check(const QuotPoint& pt) {
    const CMatrix C = expand_point(pt);
    const std::vector<Scalar> a = char_poly(p_matrix_at(pt));
    const unsigned d = C.d;
    for (unsigned m = 1; m <= C.r; ++m) {
        std::vector<Scalar> acc = C.block_col(m, d + 1);
        for (unsigned k = 0; k < d; ++k) {
            std::vector<Scalar> col = C.block_col(m, k + 1);
            for (unsigned i = 0; i < d; ++i) acc[i] += a[k] * col[i];
        }
        for (unsigned i = 0; i < d; ++i)
            if (!acc[i].is_zero()) return false;
    }
    return true;
}

}  // namespace quot
