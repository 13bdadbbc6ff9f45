#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "quot/errors.hpp"

namespace quot {

/// Coefficient field: the rationals (default) or a prime field F_p, p < 2^31.
class Field {
public:
    Field() = default;  // rationals

    static Field rationals() { return Field(); }
    static Field prime(std::uint64_t p);

    bool is_rational() const { return p_ == 0; }
    bool is_prime_field() const { return p_ != 0; }
    std::uint64_t modulus() const { return p_; }

    bool operator==(const Field&) const = default;

    std::string str() const;  // "Q" or "Fp:<p>"
    static Field parse(const std::string& text);

private:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_ = 0;  // 0 encodes Q
};

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator (GMP canonical form); prime-field residues live in [0, p).
class Scalar {
public:
    Scalar() = default;  // zero over Q

    Scalar(Field f, long value);
    Scalar(Field f, const mpq_class& q);

    static Scalar zero(Field f) { return Scalar(f, 0); }
    static Scalar one(Field f) { return Scalar(f, 1); }

    /// Parses "int" or "int/uint", e.g. "-3/4". Over F_p the quotient is
    /// computed with the modular inverse.
    static Scalar parse(Field f, const std::string& text);

    Field field() const { return f_; }
    bool is_zero() const;
    bool is_one() const;

    /// Sign over Q; over F_p returns 0 for zero and +1 otherwise.
    int sign() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const;
    Scalar pow(std::uint64_t e) const;
    Scalar abs() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Total order used for deterministic sorting (value order over Q,
    /// residue order over F_p).
    bool operator<(const Scalar& o) const;

    std::string str() const;

    const mpq_class& rat() const { return q_; }
    std::uint64_t residue() const { return r_; }

private:
    void check_same_field(const Scalar& o) const;

    Field f_;
    mpq_class q_{0};        // Q payload
    std::uint64_t r_ = 0;   // F_p payload
};

}  // namespace quot
