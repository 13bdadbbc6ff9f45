#include "quot/ring.hpp"

#include <cctype>
#include <set>

namespace quot {

std::string MonomialOrder::str() const {
    switch (kind) {
        case OrderKind::lex: return "lex";
        case OrderKind::grevlex: return "grevlex";
        case OrderKind::block: return "block";
    }
    return "?";
}

bool valid_var_name(const std::string& name) {
    if (name == "x" || name == "y" || name == "T" || name == "z" || name == "u") return true;
    // w_<h>_<m> with positive decimal indices
    if (name.size() < 5 || name[0] != 'w' || name[1] != '_') return false;
    std::size_t i = 2;
    auto digits = [&](std::size_t& k) {
        std::size_t start = k;
        while (k < name.size() && std::isdigit(static_cast<unsigned char>(name[k]))) ++k;
        return k > start && name[start] != '0';
    };
    if (!digits(i)) return false;
    if (i >= name.size() || name[i] != '_') return false;
    ++i;
    if (!digits(i)) return false;
    return i == name.size();
}

RingContext::RingContext(Field field, std::vector<std::string> vars, MonomialOrder order)
    : field_(field), vars_(std::move(vars)), order_(std::move(order)) {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (!valid_var_name(vars_[i]))
            throw UsageError("invalid variable name '" + vars_[i] + "'");
        if (!index_.emplace(vars_[i], i).second)
            throw UsageError("duplicate variable name '" + vars_[i] + "'");
    }
    if (order_.kind == OrderKind::block && order_.front.size() != vars_.size())
        throw UsageError("block order front flags do not match variable count");
}

std::optional<std::size_t> RingContext::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t RingContext::index_of(const std::string& name) const {
    auto i = find(name);
    if (!i) throw MissingVariable(name);
    return *i;
}

std::string RingContext::str() const {
    std::string s = field_.str() + "[";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i) s += ",";
        s += vars_[i];
    }
    return s + "]";
}

Ring make_ring(Field field, std::vector<std::string> vars, MonomialOrder order) {
    return std::make_shared<RingContext>(field, std::move(vars), std::move(order));
}

bool same_ring(const Ring& a, const Ring& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->same_as(*b);
}

void require_same_ring(const Ring& a, const Ring& b, const char* where) {
    if (!same_ring(a, b))
        throw RingMismatch(std::string(where) + ": operands live in different rings (" +
                           a->str() + " vs " + b->str() + ")");
}

std::string w_name(unsigned h, unsigned m) {
    return "w_" + std::to_string(h) + "_" + std::to_string(m);
}

Ring chart_ring(Field field, unsigned d, unsigned r, MonomialOrder order) {
    std::vector<std::string> vars;
    vars.reserve(static_cast<std::size_t>(d) * r);
    for (unsigned h = 1; h <= d; ++h)
        for (unsigned m = 1; m <= r; ++m) vars.push_back(w_name(h, m));
    return make_ring(field, std::move(vars), std::move(order));
}

Ring extend_ring(const Ring& base, const std::vector<std::string>& extra, MonomialOrder order) {
    std::vector<std::string> vars = base->vars();
    for (const auto& v : extra) vars.push_back(v);
    return make_ring(base->field(), std::move(vars), std::move(order));
}

}  // namespace quot
