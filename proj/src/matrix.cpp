#include "quot/matrix.hpp"

#include <unordered_map>

namespace quot {

ScalarMatrix ScalarMatrix::identity(Field f, std::size_t n) {
    ScalarMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
    if (cols_ != o.rows_)
        throw DimensionMismatch("matrix product: " + std::to_string(cols_) + " columns vs " +
                                std::to_string(o.rows_) + " rows");
    ScalarMatrix out(f_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                out.at(i, j) += aik * o.at(k, j);
        }
    return out;
}

ScalarMatrix ScalarMatrix::operator+(const ScalarMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape");
    ScalarMatrix out(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
    return out;
}

ScalarMatrix ScalarMatrix::operator-(const ScalarMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape");
    ScalarMatrix out(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] -= o.a_[i];
    return out;
}

ScalarMatrix ScalarMatrix::mul_scalar(const Scalar& c) const {
    ScalarMatrix out(*this);
    for (auto& v : out.a_) v *= c;
    return out;
}

ScalarMatrix ScalarMatrix::pow(std::uint32_t k) const {
    if (rows_ != cols_) throw DimensionMismatch("matrix power of a non-square matrix");
    ScalarMatrix acc = identity(f_, rows_);
    for (std::uint32_t s = 0; s < k; ++s) acc = acc * *this;
    return acc;
}

ScalarMatrix ScalarMatrix::transpose() const {
    ScalarMatrix out(f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

std::vector<Scalar> ScalarMatrix::mul_vector(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector product shape");
    std::vector<Scalar> out(rows_, Scalar::zero(f_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

ScalarMatrix ScalarMatrix::submatrix_cols(const std::vector<std::size_t>& cols) const {
    ScalarMatrix out(f_, rows_, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows_; ++i) out.at(i, j) = at(i, cols[j]);
    return out;
}

bool ScalarMatrix::is_zero() const {
    for (const auto& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

bool ScalarMatrix::operator==(const ScalarMatrix& o) const {
    return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

std::string ScalarMatrix::str() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
        s += "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) s += ", ";
            s += at(i, j).str();
        }
        s += "]\n";
    }
    return s;
}

PolyMatrix PolyMatrix::identity(Ring ring, std::size_t n) {
    PolyMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Polynomial::constant(ring, 1);
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    require_same_ring(ring_, o.ring_, "mat_mul");
    if (cols_ != o.rows_)
        throw DimensionMismatch("matrix product: " + std::to_string(cols_) + " columns vs " +
                                std::to_string(o.rows_) + " rows");
    PolyMatrix out(ring_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Polynomial& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                out.at(i, j) += aik * o.at(k, j);
        }
    return out;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    require_same_ring(ring_, o.ring_, "mat_add");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape");
    PolyMatrix out(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
    return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    require_same_ring(ring_, o.ring_, "mat_sub");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape");
    PolyMatrix out(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] -= o.a_[i];
    return out;
}

PolyMatrix PolyMatrix::mul_poly(const Polynomial& c) const {
    PolyMatrix out(*this);
    for (auto& v : out.a_) v *= c;
    return out;
}

PolyMatrix PolyMatrix::pow(std::uint32_t k) const {
    if (rows_ != cols_) throw DimensionMismatch("matrix power of a non-square matrix");
    PolyMatrix acc = identity(ring_, rows_);
    for (std::uint32_t s = 0; s < k; ++s) acc = acc * *this;
    return acc;
}

ScalarMatrix PolyMatrix::eval(const Assignment& values) const {
    ScalarMatrix out(ring_->field(), rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j).eval(values);
    return out;
}

bool PolyMatrix::is_zero() const {
    for (const auto& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    if (!same_ring(ring_, o.ring_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (!(a_[i] == o.a_[i])) return false;
    return true;
}

namespace {

// det over the active column mask, expanding along the row determined by the
// mask's population count; minors memoized by mask.
Polynomial det_minor(const PolyMatrix& M, std::uint64_t mask,
                     std::unordered_map<std::uint64_t, Polynomial>& memo) {
    if (mask == 0) return Polynomial::constant(M.ring(), 1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    const std::size_t row = M.rows() - static_cast<std::size_t>(__builtin_popcountll(mask));
    Polynomial acc = Polynomial::zero(M.ring());
    int sign = 1;
    for (std::size_t j = 0; j < M.cols(); ++j) {
        if (!(mask & (1ull << j))) continue;
        const Polynomial& entry = M.at(row, j);
        if (!entry.is_zero()) {
            Polynomial minor = det_minor(M, mask & ~(1ull << j), memo);
            Polynomial contrib = entry * minor;
            acc = sign > 0 ? acc + contrib : acc - contrib;
        }
        sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
}

Polynomial det_cofactor(const PolyMatrix& M) {
    if (M.rows() != M.cols()) throw DimensionMismatch("determinant of a non-square matrix");
    if (M.rows() > 60) throw DimensionMismatch("determinant too large for mask expansion");
    std::unordered_map<std::uint64_t, Polynomial> memo;
    std::uint64_t full = M.rows() == 64 ? ~0ull : (1ull << M.rows()) - 1;
    return det_minor(M, full, memo);
}

}  // namespace

std::vector<Polynomial> char_poly(const PolyMatrix& P) {
    if (P.rows() != P.cols()) throw DimensionMismatch("char_poly of a non-square matrix");
    const Ring& base = P.ring();
    if (base->find("T"))
        throw UsageError("char_poly: the ring already uses the variable T");
    Ring ext = extend_ring(base, {"T"}, MonomialOrder::grevlex());
    const std::size_t d = P.rows();
    const std::size_t t_index = ext->nvars() - 1;

    PolyMatrix M(ext, d, d);
    Polynomial T = Polynomial::variable(ext, t_index);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            M.at(i, j) = -P.at(i, j).map_to(ext);
            if (i == j) M.at(i, j) += T;
        }
    Polynomial chi = det_cofactor(M);

    // Split by powers of T and strip the extension variable.
    std::vector<std::vector<Term>> buckets(d + 1);
    for (const auto& t : chi.terms()) {
        std::uint32_t e = t.mono[t_index];
        std::vector<std::uint32_t> exps(base->nvars());
        for (std::size_t i = 0; i < base->nvars(); ++i) exps[i] = t.mono[i];
        buckets[e].push_back({t.coeff, Monomial(std::move(exps))});
    }
    std::vector<Polynomial> coeffs;
    coeffs.reserve(d + 1);
    for (std::size_t k = 0; k <= d; ++k)
        coeffs.push_back(Polynomial::from_terms(base, std::move(buckets[k])));
    return coeffs;
}

std::vector<Scalar> char_poly(const ScalarMatrix& P) {
    if (P.rows() != P.cols()) throw DimensionMismatch("char_poly of a non-square matrix");
    Ring lift = make_ring(P.field(), {});  // constants only
    PolyMatrix M(lift, P.rows(), P.cols());
    for (std::size_t i = 0; i < P.rows(); ++i)
        for (std::size_t j = 0; j < P.cols(); ++j)
            M.at(i, j) = Polynomial::constant(lift, P.at(i, j));
    std::vector<Scalar> out;
    for (const auto& c : char_poly(M)) {
        if (!c.is_constant()) throw Error("char_poly: non-constant coefficient");
        out.push_back(c.is_zero() ? Scalar::zero(P.field()) : c.leading_coeff());
    }
    return out;
}

namespace {

struct Echelon {
    ScalarMatrix m;
    std::vector<std::size_t> pivot_cols;
    Scalar det_sign;  // +1/-1 accumulated from row swaps
};

// Fraction-free (one-step Bareiss) forward elimination. Pivots are chosen as
// the first nonzero entry scanning rows top-down within the leftmost
// eligible column.
Echelon bareiss(ScalarMatrix M) {
    const Field f = M.field();
    Echelon e{M, {}, Scalar::one(f)};
    ScalarMatrix& a = e.m;
    Scalar prev = Scalar::one(f);
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row) {
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(row, j));
            e.det_sign = -e.det_sign;
        }
        for (std::size_t i = row + 1; i < a.rows(); ++i) {
            for (std::size_t j = col + 1; j < a.cols(); ++j)
                a.at(i, j) = (a.at(row, col) * a.at(i, j) - a.at(i, col) * a.at(row, j)) / prev;
            a.at(i, col) = Scalar::zero(f);
        }
        prev = a.at(row, col);
        e.pivot_cols.push_back(col);
        ++row;
    }
    return e;
}

}  // namespace

Scalar determinant(const ScalarMatrix& M) {
    if (M.rows() != M.cols()) throw DimensionMismatch("determinant of a non-square matrix");
    if (M.rows() == 0) return Scalar::one(M.field());
    Echelon e = bareiss(M);
    if (e.pivot_cols.size() < M.rows()) return Scalar::zero(M.field());
    // For full rank the final Bareiss pivot is det up to the swap sign.
    return e.m.at(M.rows() - 1, M.cols() - 1) * e.det_sign;
}

std::size_t rank(const ScalarMatrix& M) {
    return bareiss(M).pivot_cols.size();
}

std::vector<std::vector<Scalar>> kernel(const ScalarMatrix& M) {
    const Field f = M.field();
    Echelon e = bareiss(M);
    ScalarMatrix& a = e.m;
    const auto& piv = e.pivot_cols;

    // Back-substitute to reduced row echelon form.
    for (std::size_t k = piv.size(); k-- > 0;) {
        Scalar inv = a.at(k, piv[k]).inverse();
        for (std::size_t j = 0; j < a.cols(); ++j) a.at(k, j) *= inv;
        for (std::size_t i = 0; i < k; ++i) {
            Scalar c = a.at(i, piv[k]);
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < a.cols(); ++j)
                a.at(i, j) -= c * a.at(k, j);
        }
    }

    std::vector<bool> is_pivot(M.cols(), false);
    for (std::size_t c : piv) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < M.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(M.cols(), Scalar::zero(f));
        v[free] = Scalar::one(f);
        for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -a.at(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<ScalarMatrix> inverse(const ScalarMatrix& M) {
    if (M.rows() != M.cols()) throw DimensionMismatch("inverse of a non-square matrix");
    const Field f = M.field();
    const std::size_t n = M.rows();
    ScalarMatrix aug(f, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = M.at(i, j);
        aug.at(i, n + i) = Scalar::one(f);
    }
    Echelon e = bareiss(aug);
    if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1) return std::nullopt;
    ScalarMatrix& a = e.m;
    for (std::size_t k = n; k-- > 0;) {
        Scalar inv = a.at(k, k).inverse();
        for (std::size_t j = 0; j < 2 * n; ++j) a.at(k, j) *= inv;
        for (std::size_t i = 0; i < k; ++i) {
            Scalar c = a.at(i, k);
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < 2 * n; ++j) a.at(i, j) -= c * a.at(k, j);
        }
    }
    ScalarMatrix out(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = a.at(i, n + j);
    return out;
}

JacobianRank jacobian_rank_at(const std::vector<Polynomial>& gens, const Assignment& point) {
    if (gens.empty()) throw UsageError("jacobian_rank_at: no generators");
    const Ring& ring = gens[0].ring();
    for (const auto& g : gens) {
        require_same_ring(ring, g.ring(), "jacobian_rank_at");
        if (!g.eval(point).is_zero())
            throw PointNotOnVariety("generator '" + g.str() + "' does not vanish at the point");
    }
    const std::size_t n = ring->nvars();
    ScalarMatrix J(ring->field(), gens.size(), n);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) J.at(i, j) = gens[i].derivative(j).eval(point);
    std::size_t r = rank(J);
    return {r, n - r};
}

}  // namespace quot
