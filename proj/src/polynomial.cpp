#include "quot/polynomial.hpp"

#include <algorithm>

namespace quot {

Polynomial Polynomial::constant(Ring ring, const Scalar& c) {
    Polynomial p(ring);
    if (!(c.field() == ring->field()))
        throw FieldMismatch("constant does not belong to the ring's field");
    if (!c.is_zero()) p.terms_.push_back({c, Monomial::one(ring->nvars())});
    return p;
}

Polynomial Polynomial::constant(Ring ring, long c) {
    Scalar s(ring->field(), c);
    return constant(std::move(ring), s);
}

Polynomial Polynomial::variable(Ring ring, std::size_t index, std::uint32_t exp) {
    Polynomial p(ring);
    if (exp == 0) return constant(std::move(p.ring_), 1);
    p.terms_.push_back({Scalar::one(p.ring_->field()),
                        Monomial::var(p.ring_->nvars(), index, exp)});
    return p;
}

Polynomial Polynomial::variable(Ring ring, const std::string& name, std::uint32_t exp) {
    std::size_t i = ring->index_of(name);
    return variable(std::move(ring), i, exp);
}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
    const MonomialOrder& ord = ring->order();
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return mono_cmp(a.mono, b.mono, ord) > 0;
    });
    Polynomial p(std::move(ring));
    for (auto& t : terms) {
        if (t.coeff.is_zero()) continue;
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        } else {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
    return d;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw Error("zero polynomial has no leading term");
    return terms_[0];
}

Scalar Polynomial::coeff_of(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return Scalar::zero(ring_->field());
}

Polynomial Polynomial::drop_leading() const {
    Polynomial out(ring_);
    if (!terms_.empty()) out.terms_.assign(terms_.begin() + 1, terms_.end());
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(*this);
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

namespace {

// Merge two descending term lists; `scale`/`shift` apply to the second list.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b,
                              const MonomialOrder& ord, const Scalar* scale,
                              const Monomial* shift) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    auto bterm = [&](std::size_t k) -> Term {
        Term t = b[k];
        if (shift) t.mono = t.mono * *shift;
        if (scale) t.coeff *= *scale;
        return t;
    };
    while (i < a.size() && j < b.size()) {
        Term tb = bterm(j);
        int c = mono_cmp(a[i].mono, tb.mono, ord);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back(std::move(tb));
            ++j;
        } else {
            Term t = a[i++];
            t.coeff += tb.coeff;
            ++j;
            if (!t.coeff.is_zero()) out.push_back(std::move(t));
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(bterm(j++));
    return out;
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_, "poly_add");
    Polynomial out(ring_);
    out.terms_ = merge_terms(terms_, o.terms_, ring_->order(), nullptr, nullptr);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_, "poly_sub");
    Scalar neg1 = -Scalar::one(ring_->field());
    Polynomial out(ring_);
    out.terms_ = merge_terms(terms_, o.terms_, ring_->order(), &neg1, nullptr);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_, "poly_mul");
    std::vector<Term> prods;
    prods.reserve(terms_.size() * o.terms_.size());
    for (const auto& ta : terms_)
        for (const auto& tb : o.terms_)
            prods.push_back({ta.coeff * tb.coeff, ta.mono * tb.mono});
    return from_terms(ring_, std::move(prods));
}

Polynomial Polynomial::mul_term(const Scalar& c, const Monomial& m) const {
    Polynomial out(ring_);
    if (c.is_zero()) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.coeff * c, t.mono * m});
    return out;
}

Polynomial Polynomial::mul_scalar(const Scalar& c) const {
    return mul_term(c, Monomial::one(ring_->nvars()));
}

Polynomial Polynomial::sub_mul(const Scalar& c, const Monomial& m, const Polynomial& g) const {
    Scalar negc = -c;
    Polynomial out(ring_);
    out.terms_ = merge_terms(terms_, g.terms_, ring_->order(), &negc, &m);
    return out;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
    Polynomial acc = constant(ring_, 1);
    for (std::uint32_t k = 0; k < e; ++k) acc = acc * *this;
    return acc;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return mul_scalar(leading_coeff().inverse());
}

Scalar Polynomial::eval(const Assignment& values) const {
    const Field f = ring_->field();
    std::vector<const Scalar*> lookup(ring_->nvars(), nullptr);
    Scalar acc = Scalar::zero(f);
    for (const auto& t : terms_) {
        Scalar v = t.coeff;
        for (std::size_t i = 0; i < ring_->nvars(); ++i) {
            std::uint32_t e = t.mono[i];
            if (e == 0) continue;
            if (!lookup[i]) {
                auto it = values.find(ring_->var(i));
                if (it == values.end()) throw MissingVariable(ring_->var(i));
                if (!(it->second.field() == f))
                    throw FieldMismatch("assignment value in the wrong field");
                lookup[i] = &it->second;
            }
            v *= lookup[i]->pow(e);
        }
        acc += v;
    }
    return acc;
}

Polynomial Polynomial::derivative(std::size_t var_index) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        std::uint32_t e = t.mono[var_index];
        if (e == 0) continue;
        std::vector<std::uint32_t> exps = t.mono.exps();
        exps[var_index] -= 1;
        out.push_back({t.coeff * Scalar(ring_->field(), static_cast<long>(e)),
                       Monomial(std::move(exps))});
    }
    return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::map_to(const Ring& target) const {
    if (!(ring_->field() == target->field()))
        throw FieldMismatch("cannot map polynomial between different fields");
    std::vector<std::optional<std::size_t>> where(ring_->nvars());
    for (std::size_t i = 0; i < ring_->nvars(); ++i) where[i] = target->find(ring_->var(i));
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::vector<std::uint32_t> exps(target->nvars(), 0);
        for (std::size_t i = 0; i < ring_->nvars(); ++i) {
            if (t.mono[i] == 0) continue;
            if (!where[i]) throw MissingVariable(ring_->var(i));
            exps[*where[i]] = t.mono[i];
        }
        out.push_back({t.coeff, Monomial(std::move(exps))});
    }
    return from_terms(target, std::move(out));
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].coeff == o.terms_[i].coeff) || terms_[i].mono != o.terms_[i].mono)
            return false;
    return true;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    const bool rational = ring_->field().is_rational();
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const Term& t = terms_[k];
        Scalar c = t.coeff;
        if (k == 0) {
            if (rational && c.sign() < 0) {
                s += "-";
                c = -c;
            }
        } else {
            if (rational && c.sign() < 0) {
                s += " - ";
                c = -c;
            } else {
                s += " + ";
            }
        }
        std::string mono;
        for (std::size_t i = 0; i < ring_->nvars(); ++i) {
            std::uint32_t e = t.mono[i];
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->var(i);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            s += c.str();
        } else if (c.is_one()) {
            s += mono;
        } else {
            s += c.str() + "*" + mono;
        }
    }
    return s;
}

}  // namespace quot
