#include "quot/chart.hpp"

#include <algorithm>
#include <numeric>

namespace quot {

ChartIndex::ChartIndex(unsigned d, unsigned r, std::vector<unsigned> parts)
    : d_(d), r_(r), parts_(std::move(parts)) {
    if (d_ < 1) throw InvalidChart("degree must be at least 1");
    if (r_ < 2) throw InvalidChart("rank must be at least 2");
    if (parts_.empty()) throw InvalidChart("chart needs at least one part");
    if (parts_.size() > r_)
        throw InvalidChart("chart " + str() + " uses more blocks than rank " +
                           std::to_string(r_));
    unsigned sum = 0;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] == 0) throw InvalidChart("chart parts must be positive");
        if (k > 0 && parts_[k] > parts_[k - 1])
            throw InvalidChart("chart parts must be weakly decreasing");
        sum += parts_[k];
    }
    if (sum != d_)
        throw InvalidChart("chart " + str() + " parts sum to " + std::to_string(sum) +
                           ", expected " + std::to_string(d_));
}

unsigned ChartIndex::offset(unsigned m) const {
    unsigned off = 0;
    for (unsigned k = 0; k + 1 < m; ++k) off += parts_[k];
    return off;
}

std::vector<std::size_t> ChartIndex::columns() const {
    std::vector<std::size_t> cols;
    cols.reserve(d_);
    for (unsigned m = 1; m <= blocks_used(); ++m)
        for (unsigned c = 0; c < parts_[m - 1]; ++c)
            cols.push_back(static_cast<std::size_t>(m - 1) * (d_ + 1) + c);
    return cols;
}

std::string ChartIndex::str() const {
    std::string s = "[";
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(parts_[k]);
    }
    return s + "]";
}

CoordinateFrame CoordinateFrame::identity(Field f, unsigned r) {
    return {ScalarMatrix::identity(f, 2), ScalarMatrix::identity(f, r)};
}

bool CoordinateFrame::is_identity() const {
    return gl2 == ScalarMatrix::identity(gl2.field(), 2) &&
           glr == ScalarMatrix::identity(glr.field(), glr.rows());
}

void QuotPoint::validate() const {
    const Field f = frame.gl2.field();
    if (frame.gl2.rows() != 2 || frame.gl2.cols() != 2)
        throw InvalidChart("frame gl2 must be 2x2");
    if (frame.glr.rows() != chart.r() || frame.glr.cols() != chart.r())
        throw InvalidChart("frame glr must be r x r");
    if (!inverse(frame.gl2)) throw InvalidChart("frame gl2 is singular");
    if (!inverse(frame.glr)) throw InvalidChart("frame glr is singular");
    if (params.size() != static_cast<std::size_t>(chart.d()) * chart.r())
        throw InvalidChart("expected " + std::to_string(chart.d() * chart.r()) +
                           " parameters, got " + std::to_string(params.size()));
    for (unsigned h = 1; h <= chart.d(); ++h)
        for (unsigned m = 1; m <= chart.r(); ++m) {
            auto it = params.find(w_name(h, m));
            if (it == params.end()) throw MissingVariable(w_name(h, m));
            if (!(it->second.field() == f))
                throw FieldMismatch("parameter " + w_name(h, m) + " in the wrong field");
        }
}

CMatrix::CMatrix(unsigned d_, unsigned r_, ScalarMatrix mat) : d(d_), r(r_), m(std::move(mat)) {
    if (m.rows() != d || m.cols() != static_cast<std::size_t>(d + 1) * r)
        throw DimensionMismatch("presentation matrix must be d x (d+1)r");
}

std::vector<Scalar> CMatrix::block_col(unsigned l, unsigned j) const {
    std::vector<Scalar> v;
    v.reserve(d);
    const std::size_t c = col_index(l, j);
    for (unsigned i = 0; i < d; ++i) v.push_back(m.at(i, c));
    return v;
}

const Scalar& PlueckerVector::at(const std::vector<std::size_t>& cols) const {
    for (const auto& [key, val] : coords)
        if (key == cols) return val;
    throw UsageError("no Pluecker coordinate for the requested column set");
}

PolyMatrix generic_p_matrix(const ChartIndex& chart, const Ring& ring) {
    const unsigned d = chart.d();
    PolyMatrix P(ring, d, d);
    unsigned q = 0;  // next column of P to fill
    for (unsigned m = 1; m <= chart.blocks_used(); ++m) {
        const unsigned im = chart.parts()[m - 1];
        const unsigned off = chart.offset(m);
        for (unsigned c = 1; c <= im; ++c, ++q) {
            if (c < im) {
                P.at(off + c, q) = Polynomial::constant(ring, 1);
            } else {
                for (unsigned h = 1; h <= d; ++h)
                    P.at(h - 1, q) = Polynomial::variable(ring, w_name(h, m));
            }
        }
    }
    return P;
}

PolyMatrix generic_p_matrix(const ChartIndex& chart, Field field) {
    return generic_p_matrix(chart, chart_ring(field, chart.d(), chart.r()));
}

Ideal chart_ideal(const ChartIndex& chart, unsigned t, const Ring& ring) {
    if (t != chart.d())
        throw UsageError("chart_ideal expects the full-degree fat point t = d; general "
                         "supports are reached through fiber decomposition");
    PolyMatrix Pt = generic_p_matrix(chart, ring).pow(t);
    return Ideal(ring, Pt.entries());
}

Ideal chart_ideal(const ChartIndex& chart, unsigned t, Field field, MonomialOrder order) {
    return chart_ideal(chart, t, chart_ring(field, chart.d(), chart.r(), std::move(order)));
}

Ideal reduced_chart_equations(const ChartIndex& chart, const Ring& ring) {
    std::vector<Polynomial> coeffs = char_poly(generic_p_matrix(chart, ring));
    coeffs.pop_back();  // drop the leading 1
    return Ideal(ring, std::move(coeffs));
}

Ideal reduced_chart_equations(const ChartIndex& chart, Field field, MonomialOrder order) {
    return reduced_chart_equations(chart,
                                   chart_ring(field, chart.d(), chart.r(), std::move(order)));
}

ScalarMatrix p_matrix_at(const QuotPoint& pt) {
    pt.validate();
    const Field f = pt.frame.gl2.field();
    return generic_p_matrix(pt.chart, chart_ring(f, pt.chart.d(), pt.chart.r()))
        .eval(pt.params);
}

CMatrix expand_point(const QuotPoint& pt) {
    pt.validate();
    const Field f = pt.frame.gl2.field();
    const unsigned d = pt.chart.d(), r = pt.chart.r();
    const unsigned s = pt.chart.blocks_used();
    ScalarMatrix P = p_matrix_at(pt);
    ScalarMatrix C(f, d, static_cast<std::size_t>(d + 1) * r);
    for (unsigned m = 1; m <= r; ++m) {
        std::vector<Scalar> col(d, Scalar::zero(f));
        if (m <= s) {
            col[pt.chart.offset(m)] = Scalar::one(f);
        } else {
            for (unsigned h = 1; h <= d; ++h) col[h - 1] = pt.params.at(w_name(h, m));
        }
        for (unsigned j = 1; j <= d + 1; ++j) {
            const std::size_t cidx = static_cast<std::size_t>(m - 1) * (d + 1) + (j - 1);
            for (unsigned i = 0; i < d; ++i) C.at(i, cidx) = col[i];
            if (j <= d) col = P.mul_vector(col);
        }
    }
    return CMatrix(d, r, std::move(C));
}

namespace {

// Colex successor over d-subsets of {0..n-1}; returns false when exhausted.
bool next_colex(std::vector<std::size_t>& sub, std::size_t n) {
    const std::size_t d = sub.size();
    for (std::size_t k = 0; k < d; ++k) {
        std::size_t limit = (k + 1 < d) ? sub[k + 1] : n;
        if (sub[k] + 1 < limit) {
            ++sub[k];
            for (std::size_t i = 0; i < k; ++i) sub[i] = i;
            return true;
        }
    }
    return false;
}

}  // namespace

PlueckerVector pluecker_coords(const CMatrix& C) {
    const std::size_t n = C.m.cols();
    const std::size_t d = C.d;
    PlueckerVector out{C.d, C.r, {}};
    std::vector<std::size_t> sub(d);
    std::iota(sub.begin(), sub.end(), 0);
    do {
        out.coords.emplace_back(sub, determinant(C.m.submatrix_cols(sub)));
    } while (next_colex(sub, n));
    return out;
}

std::vector<ScalarMatrix> detect_frame_candidates(Field f) {
    std::vector<ScalarMatrix> frames;
    auto mk = [&](long a, long b, long c, long e) {
        ScalarMatrix m(f, 2, 2);
        m.at(0, 0) = Scalar(f, a);
        m.at(0, 1) = Scalar(f, b);
        m.at(1, 0) = Scalar(f, c);
        m.at(1, 1) = Scalar(f, e);
        frames.push_back(std::move(m));
    };
    mk(1, 0, 0, 1);  // (x, y)
    for (long c : {1, -1, 2, -2}) mk(1, 0, c, 1);  // (x, y+cx)
    mk(0, 1, 1, 0);  // (y, x)
    // (y+cx, x): moves the line at infinity, needed when multiplication by x
    // is not injective on the module.
    for (long c : {1, -1, 2, -2, 3, -3, 4, -4}) mk(c, 1, 1, 0);
    return frames;
}

namespace {

// Transform the presentation columns under a change of line coordinates:
// the new basis element l^(d-c) l'^c e_m expands in the monomial basis, so
// new columns are the corresponding combinations of old ones.
ScalarMatrix apply_gl2(const CMatrix& C, const ScalarMatrix& gl2) {
    const Field f = C.m.field();
    const unsigned d = C.d, r = C.r;
    BinaryForm L = BinaryForm::linear(f, gl2.at(0, 0), gl2.at(0, 1));
    BinaryForm Lp = BinaryForm::linear(f, gl2.at(1, 0), gl2.at(1, 1));
    std::vector<BinaryForm> pl, plp;
    BinaryForm one(f, std::vector<Scalar>{Scalar::one(f)});
    pl.push_back(one);
    plp.push_back(one);
    for (unsigned k = 1; k <= d; ++k) {
        pl.push_back(pl.back() * L);
        plp.push_back(plp.back() * Lp);
    }
    ScalarMatrix out(f, d, C.m.cols());
    for (unsigned m = 1; m <= r; ++m) {
        for (unsigned c = 0; c <= d; ++c) {
            BinaryForm phi = pl[d - c] * plp[c];
            const std::size_t target = C.col_index(m, c + 1);
            for (unsigned k = 0; k <= d; ++k) {
                const Scalar& w = phi.coeff(k);
                if (w.is_zero()) continue;
                const std::size_t source = C.col_index(m, k + 1);
                for (unsigned i = 0; i < d; ++i)
                    out.at(i, target) += w * C.m.at(i, source);
            }
        }
    }
    return out;
}

ScalarMatrix permute_blocks(const ScalarMatrix& m, unsigned d, unsigned r,
                            const std::vector<unsigned>& perm) {  // new m <- old perm[m]
    ScalarMatrix out(m.field(), d, m.cols());
    for (unsigned nb = 0; nb < r; ++nb) {
        const unsigned ob = perm[nb];
        for (unsigned j = 0; j <= d; ++j)
            for (unsigned i = 0; i < d; ++i)
                out.at(i, static_cast<std::size_t>(nb) * (d + 1) + j) =
                    m.at(i, static_cast<std::size_t>(ob) * (d + 1) + j);
    }
    return out;
}

// Weakly decreasing partitions of d into at most r parts, lex-descending.
void partitions_desc(unsigned d, unsigned maxpart, unsigned maxlen,
                     std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
    if (d == 0) {
        out.push_back(cur);
        return;
    }
    if (cur.size() == maxlen) return;
    for (unsigned p = std::min(d, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_desc(d - p, p, maxlen, cur, out);
        cur.pop_back();
    }
}

void assignments(unsigned s, unsigned r, std::vector<unsigned>& cur, std::vector<bool>& used,
                 std::vector<std::vector<unsigned>>& out) {
    if (cur.size() == s) {
        out.push_back(cur);
        return;
    }
    for (unsigned b = 0; b < r; ++b) {
        if (used[b]) continue;
        used[b] = true;
        cur.push_back(b);
        assignments(s, r, cur, used, out);
        cur.pop_back();
        used[b] = false;
    }
}

}  // namespace

DetectResult detect_chart(const CMatrix& C) {
    const Field f = C.m.field();
    const unsigned d = C.d, r = C.r;
    if (rank(C.m) < d)
        throw RankDeficient("presentation matrix has rank below " + std::to_string(d));

    std::vector<std::vector<unsigned>> parts_list;
    {
        std::vector<unsigned> cur;
        partitions_desc(d, d, r, cur, parts_list);
    }

    for (const ScalarMatrix& gl2 : detect_frame_candidates(f)) {
        ScalarMatrix C2 = apply_gl2(C, gl2);
        for (const auto& parts : parts_list) {
            const unsigned s = static_cast<unsigned>(parts.size());
            std::vector<std::vector<unsigned>> assigns;
            {
                std::vector<unsigned> cur;
                std::vector<bool> used(r, false);
                assignments(s, r, cur, used, assigns);
            }
            for (const auto& blocks : assigns) {
                // Columns claimed by the candidate, pre-permutation.
                std::vector<std::size_t> cols;
                for (unsigned m = 0; m < s; ++m)
                    for (unsigned c = 0; c < parts[m]; ++c)
                        cols.push_back(static_cast<std::size_t>(blocks[m]) * (d + 1) + c);
                auto U = inverse(C2.submatrix_cols(cols));
                if (!U) continue;

                std::vector<unsigned> perm;  // new block -> old block
                perm.assign(blocks.begin(), blocks.end());
                std::vector<bool> taken(r, false);
                for (unsigned b : blocks) taken[b] = true;
                for (unsigned b = 0; b < r; ++b)
                    if (!taken[b]) perm.push_back(b);

                ScalarMatrix C4 = *U * permute_blocks(C2, d, r, perm);
                CMatrix norm(d, r, std::move(C4));

                ChartIndex chart(d, r, parts);
                Assignment params;
                for (unsigned m = 1; m <= r; ++m) {
                    const unsigned col = m <= s ? parts[m - 1] + 1 : 1;
                    std::vector<Scalar> v = norm.block_col(m, col);
                    for (unsigned h = 1; h <= d; ++h) params[w_name(h, m)] = v[h - 1];
                }
                ScalarMatrix glr(f, r, r);
                for (unsigned nb = 0; nb < r; ++nb)
                    glr.at(perm[nb], nb) = Scalar::one(f);
                QuotPoint point{chart, {gl2, glr}, std::move(params)};

                if (expand_point(point).m == norm.m)
                    return {chart, point.frame, std::move(norm), std::move(point)};
            }
        }
    }
    throw NoFrameFound("no chart of the candidate frames presents this module");
}

}  // namespace quot
