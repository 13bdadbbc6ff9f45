#pragma once

#include <map>
#include <string>
#include <vector>

#include "quot/monomial.hpp"

namespace quot {

using Assignment = std::map<std::string, Scalar>;

struct Term {
    Scalar coeff;
    Monomial mono;
};

/// Sparse multivariate polynomial. Terms are kept strictly descending in the
/// ring's monomial order, without zero coefficients or duplicate monomials,
/// so equal values have identical term lists.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

    static Polynomial zero(Ring ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(Ring ring, const Scalar& c);
    static Polynomial constant(Ring ring, long c);
    static Polynomial variable(Ring ring, std::size_t index, std::uint32_t exp = 1);
    static Polynomial variable(Ring ring, const std::string& name, std::uint32_t exp = 1);
    /// Sorts, merges duplicate monomials and drops zeros.
    static Polynomial from_terms(Ring ring, std::vector<Term> terms);

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_[0].mono.is_one(); }

    /// Total degree; -1 for the zero polynomial.
    int degree() const;

    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const Scalar& leading_coeff() const { return leading_term().coeff; }

    Scalar coeff_of(const Monomial& m) const;

    /// Copy without the leading term.
    Polynomial drop_leading() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial mul_term(const Scalar& c, const Monomial& m) const;
    Polynomial mul_scalar(const Scalar& c) const;
    /// *this - c * x^m * g, the division-step kernel.
    Polynomial sub_mul(const Scalar& c, const Monomial& m, const Polynomial& g) const;

    Polynomial pow(std::uint32_t e) const;
    Polynomial monic() const;  // divide by the leading coefficient

    Scalar eval(const Assignment& values) const;
    Polynomial derivative(std::size_t var_index) const;

    /// Maps into a ring with the same field, matching variables by name.
    /// Throws MissingVariable if a used variable is absent from the target.
    Polynomial map_to(const Ring& target) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string str() const;

private:
    Ring ring_;
    std::vector<Term> terms_;
};

/// Parses the ASCII polynomial grammar:
///   poly    := ['-'] term (('+'|'-') term)*
///   term    := coeff | coeff '*' factors | factors
///   factors := var ['^' uint] ('*' var ['^' uint])*
///   coeff   := int ['/' uint]
/// Whitespace is insignificant. Printing with str() round-trips.
Polynomial parse_poly(const std::string& text, const Ring& ring);

}  // namespace quot
