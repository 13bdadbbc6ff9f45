#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "quot/scalar.hpp"

namespace quot {

enum class OrderKind { lex, grevlex, block };

/// Total multiplicative monomial order with 1 minimal. `block` is the
/// elimination order for the flagged front variables: front exponents are
/// compared grevlex first, remaining exponents grevlex on ties.
struct MonomialOrder {
    OrderKind kind = OrderKind::grevlex;
    std::vector<std::uint8_t> front;  // one flag per variable; block orders only

    static MonomialOrder lex() { return {OrderKind::lex, {}}; }
    static MonomialOrder grevlex() { return {OrderKind::grevlex, {}}; }
    static MonomialOrder block(std::vector<std::uint8_t> front_flags) {
        return {OrderKind::block, std::move(front_flags)};
    }

    bool operator==(const MonomialOrder&) const = default;
    std::string str() const;
};

/// Immutable ring context: coefficient field, ordered variable table and the
/// ambient monomial order. Variable names are restricted to the reserved
/// vocabulary x, y, T, z, u and w_<h>_<m>.
class RingContext {
public:
    RingContext(Field field, std::vector<std::string> vars, MonomialOrder order);

    const Field& field() const { return field_; }
    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::string& var(std::size_t i) const { return vars_[i]; }
    const MonomialOrder& order() const { return order_; }

    std::optional<std::size_t> find(const std::string& name) const;
    std::size_t index_of(const std::string& name) const;  // throws MissingVariable

    /// Structural equality: same field, same variable list, same order.
    bool same_as(const RingContext& o) const {
        return field_ == o.field_ && vars_ == o.vars_ && order_ == o.order_;
    }

    std::string str() const;  // e.g. "Q[w_1_1,w_1_2]"

private:
    Field field_;
    std::vector<std::string> vars_;
    MonomialOrder order_;
    std::unordered_map<std::string, std::size_t> index_;
};

using Ring = std::shared_ptr<const RingContext>;

Ring make_ring(Field field, std::vector<std::string> vars,
               MonomialOrder order = MonomialOrder::grevlex());

bool same_ring(const Ring& a, const Ring& b);
void require_same_ring(const Ring& a, const Ring& b, const char* where);

/// True if `name` is one of the reserved variable names accepted by the
/// polynomial grammar.
bool valid_var_name(const std::string& name);

/// Name of the chart parameter w_{h,m}, rendered as "w_<h>_<m>".
std::string w_name(unsigned h, unsigned m);

/// k[w_{h,m} : h=1..d, m=1..r] listed h-major, so w_1_1 > w_1_2 > ... > w_d_r.
Ring chart_ring(Field field, unsigned d, unsigned r,
                MonomialOrder order = MonomialOrder::grevlex());

/// Same field and variables plus `extra` appended at the end.
Ring extend_ring(const Ring& base, const std::vector<std::string>& extra,
                 MonomialOrder order);

}  // namespace quot
