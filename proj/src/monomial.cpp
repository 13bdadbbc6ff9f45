#include "quot/monomial.hpp"

#include <numeric>

namespace quot {

Monomial::Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {
    deg_ = std::accumulate(e_.begin(), e_.end(), 0u);
}

Monomial Monomial::var(std::size_t nvars, std::size_t i, std::uint32_t e) {
    Monomial m(nvars);
    m.e_[i] = e;
    m.deg_ = e;
    return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial out(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] += o.e_[i];
    out.deg_ = deg_ + o.deg_;
    return out;
}

bool Monomial::divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::divide(const Monomial& o) const {
    Monomial out(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] -= o.e_[i];
    out.deg_ = deg_ - o.deg_;
    return out;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial out(*this);
    out.deg_ = 0;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        out.e_[i] = std::max(e_[i], o.e_[i]);
        out.deg_ += out.e_[i];
    }
    return out;
}

bool Monomial::coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > 0 && o.e_[i] > 0) return false;
    return true;
}

std::vector<std::size_t> Monomial::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > 0) s.push_back(i);
    return s;
}

namespace {

// grevlex on a contiguous view: higher degree wins; on ties the monomial with
// the smaller exponent in the last differing variable is the larger one.
int grevlex_cmp(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                std::uint32_t dega, std::uint32_t degb) {
    if (dega != degb) return dega < degb ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

int grevlex_cmp_masked(const Monomial& a, const Monomial& b,
                       const std::vector<std::uint8_t>& front, bool in_front) {
    std::uint32_t dega = 0, degb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (static_cast<bool>(front[i]) == in_front) {
            dega += a[i];
            degb += b[i];
        }
    }
    if (dega != degb) return dega < degb ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (static_cast<bool>(front[i]) != in_front) continue;
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

}  // namespace

int mono_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
    if (a.size() != b.size())
        throw DimensionMismatch("monomials have different variable counts");
    switch (order.kind) {
        case OrderKind::lex:
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
            return 0;
        case OrderKind::grevlex:
            return grevlex_cmp(a.exps(), b.exps(), a.degree(), b.degree());
        case OrderKind::block: {
            int c = grevlex_cmp_masked(a, b, order.front, true);
            if (c) return c;
            return grevlex_cmp_masked(a, b, order.front, false);
        }
    }
    return 0;
}

}  // namespace quot
