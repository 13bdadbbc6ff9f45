#pragma once

#include <vector>

#include "quot/scalar.hpp"

namespace quot {

/// Homogeneous form of degree d in (x, y). Coefficient k belongs to
/// x^(d-k) * y^k, so index 0 is the pure-x coefficient and index d the
/// pure-y one. Forms are compared after normalization: the y^d coefficient
/// is scaled to 1 when nonzero, otherwise the leading nonzero coefficient
/// scanning from y^d down is scaled to 1.
class BinaryForm {
public:
    BinaryForm(Field f, unsigned degree);
    BinaryForm(Field f, std::vector<Scalar> coeffs);  // coeffs.size() = degree+1

    static BinaryForm linear(Field f, const Scalar& x_coeff, const Scalar& y_coeff);

    Field field() const { return f_; }
    unsigned degree() const { return static_cast<unsigned>(c_.size() - 1); }

    const Scalar& coeff(unsigned k) const { return c_[k]; }  // of x^(d-k)*y^k
    Scalar& coeff(unsigned k) { return c_[k]; }
    const std::vector<Scalar>& coeffs() const { return c_; }

    bool is_zero() const;

    BinaryForm operator*(const BinaryForm& o) const;
    BinaryForm pow(unsigned e) const;

    BinaryForm normalized() const;
    /// Coefficient list reversed (x and y exchanged), e.g. y^2 - 3xy + 2x^2
    /// becomes x^2 - 3xy + 2y^2.
    BinaryForm reversed() const;

    bool operator==(const BinaryForm& o) const;
    bool operator!=(const BinaryForm& o) const { return !(*this == o); }

    /// Text with y-powers descending: "y^2 - 3*x*y + 2*x^2".
    std::string str() const;

private:
    Field f_;
    std::vector<Scalar> c_;
};

}  // namespace quot
