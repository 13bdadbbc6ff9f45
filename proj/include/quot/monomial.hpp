#pragma once

#include <cstdint>
#include <vector>

#include "quot/ring.hpp"

namespace quot {

/// Exponent vector; the variable table lives in the ring context.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps);

    static Monomial one(std::size_t nvars) { return Monomial(nvars); }
    static Monomial var(std::size_t nvars, std::size_t i, std::uint32_t e = 1);

    std::size_t size() const { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    std::uint32_t degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial divide(const Monomial& o) const;  // *this / o, assumes o | *this
    Monomial lcm(const Monomial& o) const;
    bool coprime(const Monomial& o) const;

    /// Indices of variables with positive exponent.
    std::vector<std::size_t> support() const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    const std::vector<std::uint32_t>& exps() const { return e_; }

private:
    std::vector<std::uint32_t> e_;
    std::uint32_t deg_ = 0;
};

/// -1, 0, +1 as a is below, equal to, above b in the given order.
int mono_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& order);

}  // namespace quot
