#include "quot/binary_form.hpp"

#include <algorithm>

namespace quot {

BinaryForm::BinaryForm(Field f, unsigned degree)
    : f_(f), c_(degree + 1, Scalar::zero(f)) {}

BinaryForm::BinaryForm(Field f, std::vector<Scalar> coeffs) : f_(f), c_(std::move(coeffs)) {
    if (c_.empty()) throw UsageError("binary form needs at least one coefficient");
    for (const auto& v : c_)
        if (!(v.field() == f_)) throw FieldMismatch("binary form coefficient field");
}

BinaryForm BinaryForm::linear(Field f, const Scalar& x_coeff, const Scalar& y_coeff) {
    return BinaryForm(f, std::vector<Scalar>{x_coeff, y_coeff});
}

bool BinaryForm::is_zero() const {
    for (const auto& v : c_)
        if (!v.is_zero()) return false;
    return true;
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
    if (!(f_ == o.f_)) throw FieldMismatch("binary form product");
    BinaryForm out(f_, degree() + o.degree());
    for (unsigned i = 0; i < c_.size(); ++i)
        for (unsigned j = 0; j < o.c_.size(); ++j) out.c_[i + j] += c_[i] * o.c_[j];
    return out;
}

BinaryForm BinaryForm::pow(unsigned e) const {
    BinaryForm acc(f_, std::vector<Scalar>{Scalar::one(f_)});
    for (unsigned k = 0; k < e; ++k) acc = acc * *this;
    return acc;
}

BinaryForm BinaryForm::normalized() const {
    for (unsigned k = static_cast<unsigned>(c_.size()); k-- > 0;) {
        if (!c_[k].is_zero()) {
            BinaryForm out(*this);
            Scalar inv = c_[k].inverse();
            for (auto& v : out.c_) v *= inv;
            return out;
        }
    }
    return *this;  // zero form
}

BinaryForm BinaryForm::reversed() const {
    BinaryForm out(*this);
    std::reverse(out.c_.begin(), out.c_.end());
    return out;
}

bool BinaryForm::operator==(const BinaryForm& o) const {
    return f_ == o.f_ && c_ == o.c_;
}

std::string BinaryForm::str() const {
    const unsigned d = degree();
    std::string s;
    const bool rational = f_.is_rational();
    bool first = true;
    for (unsigned k = static_cast<unsigned>(c_.size()); k-- > 0;) {
        Scalar c = c_[k];
        if (c.is_zero()) continue;
        if (first) {
            if (rational && c.sign() < 0) {
                s += "-";
                c = -c;
            }
            first = false;
        } else if (rational && c.sign() < 0) {
            s += " - ";
            c = -c;
        } else {
            s += " + ";
        }
        std::string mono;
        unsigned ex = d - k;
        if (ex > 0) mono += ex == 1 ? "x" : "x^" + std::to_string(ex);
        if (k > 0) {
            if (!mono.empty()) mono += "*";
            mono += k == 1 ? "y" : "y^" + std::to_string(k);
        }
        if (mono.empty()) {
            s += c.str();
        } else if (c.is_one()) {
            s += mono;
        } else {
            s += c.str() + "*" + mono;
        }
    }
    return first ? "0" : s;
}

}  // namespace quot
