#pragma once

#include "quot/gb.hpp"
#include "quot/polynomial.hpp"

namespace quot {

class ScalarMatrix {
public:
    ScalarMatrix(Field f, std::size_t rows, std::size_t cols)
        : f_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

    static ScalarMatrix identity(Field f, std::size_t n);

    Field field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    ScalarMatrix operator*(const ScalarMatrix& o) const;
    ScalarMatrix operator+(const ScalarMatrix& o) const;
    ScalarMatrix operator-(const ScalarMatrix& o) const;
    ScalarMatrix mul_scalar(const Scalar& c) const;
    ScalarMatrix pow(std::uint32_t k) const;
    ScalarMatrix transpose() const;

    std::vector<Scalar> mul_vector(const std::vector<Scalar>& v) const;
    ScalarMatrix submatrix_cols(const std::vector<std::size_t>& cols) const;

    bool is_zero() const;
    bool operator==(const ScalarMatrix& o) const;

    std::string str() const;

private:
    Field f_;
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

class PolyMatrix {
public:
    PolyMatrix(Ring ring, std::size_t rows, std::size_t cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols),
          a_(rows * cols, Polynomial::zero(ring_)) {}

    static PolyMatrix identity(Ring ring, std::size_t n);

    const Ring& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Polynomial& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Polynomial& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix mul_poly(const Polynomial& c) const;
    PolyMatrix pow(std::uint32_t k) const;

    /// Row-major list of the entries.
    std::vector<Polynomial> entries() const { return a_; }

    ScalarMatrix eval(const Assignment& values) const;

    bool is_zero() const;
    bool operator==(const PolyMatrix& o) const;

private:
    Ring ring_;
    std::size_t rows_, cols_;
    std::vector<Polynomial> a_;
};

/// Coefficients a_0..a_d of the monic characteristic polynomial
/// det(T*Id - P), computed by division-free cofactor expansion with minors
/// memoized on column masks (valid in every characteristic).
std::vector<Polynomial> char_poly(const PolyMatrix& P);
std::vector<Scalar> char_poly(const ScalarMatrix& P);

/// Determinant by fraction-free (Bareiss) elimination.
Scalar determinant(const ScalarMatrix& M);

/// Rank by fraction-free elimination with deterministic pivoting (first
/// nonzero entry in row-major scan).
std::size_t rank(const ScalarMatrix& M);

/// Basis of the null space; M*v = 0 for each basis vector and
/// rank + kernel dimension = number of columns.
std::vector<std::vector<Scalar>> kernel(const ScalarMatrix& M);

/// Inverse, or nothing when singular.
std::optional<ScalarMatrix> inverse(const ScalarMatrix& M);

struct JacobianRank {
    std::size_t rank;
    std::size_t tangent_dim;  // #variables - rank
};

/// Rank of the Jacobian of `gens` at `point`. Every generator must vanish at
/// the point (PointNotOnVariety otherwise).
JacobianRank jacobian_rank_at(const std::vector<Polynomial>& gens, const Assignment& point);

}  // namespace quot
