#include "quot/scalar.hpp"

#include <algorithm>

namespace quot {

namespace {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return acc;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw DivisionByZero("division by zero in F_" + std::to_string(p));
    return mod_pow(a, p - 2, p);  // p prime
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
    return mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p));
}

}  // namespace

Field Field::prime(std::uint64_t p) {
    if (p < 2 || p >= (1ull << 31))
        throw UsageError("prime modulus must satisfy 2 <= p < 2^31, got " + std::to_string(p));
    mpz_class z(static_cast<unsigned long>(p));
    if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
        throw UsageError(std::to_string(p) + " is not prime");
    return Field(p);
}

std::string Field::str() const {
    return is_rational() ? "Q" : "Fp:" + std::to_string(p_);
}

Field Field::parse(const std::string& text) {
    if (text == "Q" || text == "q") return rationals();
    std::string t = text;
    std::transform(t.begin(), t.end(), t.begin(), [](char c) { return std::tolower(c); });
    if (t.rfind("fp:", 0) == 0) {
        try {
            return prime(std::stoull(t.substr(3)));
        } catch (const std::invalid_argument&) {
        } catch (const std::out_of_range&) {
        }
    }
    throw UsageError("cannot parse field '" + text + "' (expected q or fp:<prime>)");
}

Scalar::Scalar(Field f, long value) : f_(f) {
    if (f_.is_rational()) {
        q_ = value;
    } else {
        const std::uint64_t p = f_.modulus();
        long m = value % static_cast<long>(p);
        if (m < 0) m += static_cast<long>(p);
        r_ = static_cast<std::uint64_t>(m);
        q_ = 0;
    }
}

Scalar::Scalar(Field f, const mpq_class& q) : f_(f) {
    if (f_.is_rational()) {
        q_ = q;
        q_.canonicalize();
    } else {
        const std::uint64_t p = f_.modulus();
        mpq_class c = q;
        c.canonicalize();
        const std::uint64_t den = reduce_mpz(c.get_den(), p);
        if (den == 0)
            throw DivisionByZero("denominator divisible by " + std::to_string(p));
        r_ = reduce_mpz(c.get_num(), p) * mod_inverse(den, p) % p;
        q_ = 0;
    }
}

Scalar Scalar::parse(Field f, const std::string& text) {
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            mpq_class v(mpz_class(text), 1);
            return Scalar(f, v);
        }
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        if (sgn(den) <= 0) throw std::invalid_argument("denominator");
        mpq_class v(num, den);
        v.canonicalize();
        return Scalar(f, v);
    } catch (const std::invalid_argument&) {
        throw ParseError("cannot parse scalar '" + text + "'", 0);
    }
}

bool Scalar::is_zero() const {
    return f_.is_rational() ? sgn(q_) == 0 : r_ == 0;
}

bool Scalar::is_one() const {
    return f_.is_rational() ? q_ == 1 : r_ == 1;
}

int Scalar::sign() const {
    if (f_.is_rational()) return sgn(q_);
    return r_ == 0 ? 0 : 1;
}

Scalar Scalar::operator-() const {
    Scalar out(*this);
    if (f_.is_rational()) {
        out.q_ = -q_;
    } else if (r_ != 0) {
        out.r_ = f_.modulus() - r_;
    }
    return out;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (!(f_ == o.f_))
        throw FieldMismatch("scalars live in different fields (" + f_.str() + " vs " + o.f_.str() + ")");
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same_field(o);
    if (f_.is_rational()) {
        q_ += o.q_;
    } else {
        r_ += o.r_;
        if (r_ >= f_.modulus()) r_ -= f_.modulus();
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same_field(o);
    if (f_.is_rational()) {
        q_ -= o.q_;
    } else {
        r_ += f_.modulus() - o.r_;
        if (r_ >= f_.modulus()) r_ -= f_.modulus();
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same_field(o);
    if (f_.is_rational()) {
        q_ *= o.q_;
    } else {
        r_ = r_ * o.r_ % f_.modulus();  // p < 2^31, no overflow
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_same_field(o);
    if (o.is_zero()) throw DivisionByZero("division by zero");
    if (f_.is_rational()) {
        q_ /= o.q_;
    } else {
        r_ = r_ * mod_inverse(o.r_, f_.modulus()) % f_.modulus();
    }
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return one(f_) / *this;
}

Scalar Scalar::pow(std::uint64_t e) const {
    Scalar acc = one(f_);
    Scalar base = *this;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Scalar Scalar::abs() const {
    return sign() < 0 ? -*this : *this;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(f_ == o.f_)) return false;
    return f_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

bool Scalar::operator<(const Scalar& o) const {
    check_same_field(o);
    return f_.is_rational() ? q_ < o.q_ : r_ < o.r_;
}

std::string Scalar::str() const {
    if (f_.is_rational()) return q_.get_str();
    return std::to_string(r_);
}

}  // namespace quot
