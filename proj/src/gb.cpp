#include "quot/gb.hpp"

#include <algorithm>
#include <set>

namespace quot {

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G) {
    for (const auto& g : G)
        if (!g.is_zero()) require_same_ring(f.ring(), g.ring(), "normal_form");
    const Ring& ring = f.ring();
    Polynomial h = f;
    std::vector<Term> remainder;
    while (!h.is_zero()) {
        const Term& lt = h.leading_term();
        bool reduced = false;
        for (const auto& g : G) {
            if (g.is_zero()) continue;
            if (g.leading_monomial().divides(lt.mono)) {
                Scalar c = lt.coeff / g.leading_coeff();
                h = h.sub_mul(c, lt.mono.divide(g.leading_monomial()), g);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder.push_back(lt);
            h = h.drop_leading();
        }
    }
    return Polynomial::from_terms(ring, std::move(remainder));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f.ring(), g.ring(), "s_polynomial");
    const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
    Polynomial a = f.mul_term(f.leading_coeff().inverse(), l.divide(f.leading_monomial()));
    Polynomial b = g.mul_term(g.leading_coeff().inverse(), l.divide(g.leading_monomial()));
    return a - b;
}

namespace {

struct Pair {
    std::size_t i, j;  // i < j
    Monomial lcm;
};

// Normal strategy: smallest lcm degree first, ties by the monomial order,
// then by indices.
struct PairLess {
    const MonomialOrder* ord;
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
        int c = mono_cmp(a.lcm, b.lcm, *ord);
        if (c != 0) return c < 0;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    }
};

std::vector<Polynomial> interreduce(std::vector<Polynomial> G, const Ring& ring) {
    // Minimalize. Divisibility implies <= in every global order, so scanning
    // by ascending leading monomial and keeping an element only when no kept
    // element's leading monomial divides it is complete.
    std::sort(G.begin(), G.end(), [&](const Polynomial& a, const Polynomial& b) {
        return mono_cmp(a.leading_monomial(), b.leading_monomial(), ring->order()) < 0;
    });
    std::vector<Polynomial> minimal;
    for (const auto& g : G) {
        bool redundant = false;
        for (const auto& kept : minimal)
            if (kept.leading_monomial().divides(g.leading_monomial())) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(g);
    }

    // Tail-reduce each element against the others.
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = normal_form(minimal[i], others);
        if (!r.is_zero()) reduced.push_back(r.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return mono_cmp(a.leading_monomial(), b.leading_monomial(), ring->order()) > 0;
    });
    return reduced;
}

}  // namespace

std::vector<Polynomial> groebner(const std::vector<Polynomial>& gens) {
    std::vector<Polynomial> G;
    Ring ring;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!ring)
            ring = g.ring();
        else
            require_same_ring(ring, g.ring(), "groebner");
        Polynomial m = g.monic();
        if (std::find(G.begin(), G.end(), m) == G.end()) G.push_back(std::move(m));
    }
    if (G.empty()) return {};

    PairLess less{&ring->order()};
    std::set<Pair, PairLess> queue(less);
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            queue.insert({i, j, G[i].leading_monomial().lcm(G[j].leading_monomial())});
    };
    for (std::size_t j = 1; j < G.size(); ++j) push_pairs(j);

    auto pending = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        Pair probe{a, b, G[a].leading_monomial().lcm(G[b].leading_monomial())};
        return queue.count(probe) > 0;
    };

    while (!queue.empty()) {
        Pair pr = *queue.begin();
        queue.erase(queue.begin());

        // First criterion: coprime leading monomials.
        if (G[pr.i].leading_monomial().coprime(G[pr.j].leading_monomial())) continue;

        // Chain criterion: some third leading monomial divides the lcm and
        // both companion pairs have already been handled.
        bool skip = false;
        for (std::size_t k = 0; k < G.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (G[k].leading_monomial().divides(pr.lcm) && !pending(pr.i, k) &&
                !pending(pr.j, k))
                skip = true;
        }
        if (skip) continue;

        Polynomial s = normal_form(s_polynomial(G[pr.i], G[pr.j]), G);
        if (s.is_zero()) continue;
        G.push_back(s.monic());
        push_pairs(G.size() - 1);
    }

    return interreduce(std::move(G), ring);
}

Ideal::Ideal(Ring ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
    for (const auto& g : gens_) require_same_ring(ring_, g.ring(), "Ideal");
}

Ideal Ideal::parse(const Ring& ring, const std::vector<std::string>& gen_texts) {
    std::vector<Polynomial> gens;
    gens.reserve(gen_texts.size());
    for (const auto& t : gen_texts) gens.push_back(parse_poly(t, ring));
    return Ideal(ring, std::move(gens));
}

const std::vector<Polynomial>& Ideal::reduced_basis() const {
    std::call_once(cache_->once, [this] { cache_->basis = groebner(gens_); });
    return cache_->basis;
}

bool Ideal::is_unit_ideal() const {
    const auto& b = reduced_basis();
    return b.size() == 1 && b[0].is_constant() && !b[0].is_zero();
}

bool ideal_member(const Polynomial& f, const Ideal& I) {
    require_same_ring(f.ring(), I.ring(), "ideal_member");
    return normal_form(f, I.reduced_basis()).is_zero();
}

namespace {

// z is the inversion variable, u the intersection variable; either falls
// back to the other when taken.
std::string fresh_var(const Ring& ring, const char* preferred) {
    if (!ring->find(preferred)) return preferred;
    for (const char* cand : {"z", "u"})
        if (!ring->find(cand)) return cand;
    throw UsageError("ring already uses both auxiliary variables z and u");
}

// Generators of I together with 1 - aux*f, in a ring extended by `aux`.
std::vector<Polynomial> rabinowitsch_gens(const Ideal& I, const Polynomial& f,
                                          const Ring& ext, const std::string& aux) {
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens()) gens.push_back(g.map_to(ext));
    Polynomial zf = Polynomial::variable(ext, aux) * f.map_to(ext);
    gens.push_back(Polynomial::constant(ext, 1) - zf);
    return gens;
}

}  // namespace

bool radical_member(const Polynomial& f, const Ideal& I) {
    require_same_ring(f.ring(), I.ring(), "radical_member");
    if (f.is_zero()) return true;
    const std::string aux = fresh_var(I.ring(), "z");
    Ring ext = extend_ring(I.ring(), {aux}, MonomialOrder::grevlex());
    std::vector<Polynomial> basis = groebner(rabinowitsch_gens(I, f, ext, aux));
    return basis.size() == 1 && basis[0].is_constant();
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring(), J.ring(), "ideal_equal");
    return I.reduced_basis() == J.reduced_basis();
}

namespace {

// Shared elimination core: compute a basis under the block order with the
// given front variables, keep the elements free of them, and map those into
// `target` (which must contain all remaining variables).
std::vector<Polynomial> eliminate_into(const std::vector<Polynomial>& gens,
                                       const Ring& source,
                                       const std::vector<std::size_t>& front,
                                       const Ring& target) {
    std::vector<std::uint8_t> flags(source->nvars(), 0);
    for (std::size_t i : front) {
        if (i >= source->nvars()) throw UsageError("eliminate: variable index out of range");
        flags[i] = 1;
    }
    Ring block = make_ring(source->field(), source->vars(), MonomialOrder::block(flags));
    std::vector<Polynomial> moved;
    for (const auto& g : gens) moved.push_back(g.map_to(block));
    std::vector<Polynomial> basis = groebner(moved);
    std::vector<Polynomial> kept;
    for (const auto& g : basis) {
        bool uses_front = false;
        for (const auto& t : g.terms()) {
            for (std::size_t i : front)
                if (t.mono[i] > 0) {
                    uses_front = true;
                    break;
                }
            if (uses_front) break;
        }
        if (!uses_front) kept.push_back(g.map_to(target));
    }
    return kept;
}

Ring drop_vars(const Ring& ring, const std::vector<std::size_t>& drop) {
    std::vector<bool> gone(ring->nvars(), false);
    for (std::size_t i : drop) gone[i] = true;
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        if (!gone[i]) vars.push_back(ring->var(i));
    OrderKind kind = ring->order().kind;
    MonomialOrder order =
        kind == OrderKind::lex ? MonomialOrder::lex() : MonomialOrder::grevlex();
    return make_ring(ring->field(), std::move(vars), std::move(order));
}

}  // namespace

Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& front) {
    Ring target = drop_vars(I.ring(), front);
    return Ideal(target, eliminate_into(I.gens(), I.ring(), front, target));
}

Ideal eliminate(const Ideal& I, const std::vector<std::string>& front_names) {
    std::vector<std::size_t> front;
    for (const auto& n : front_names) front.push_back(I.ring()->index_of(n));
    return eliminate(I, front);
}

Ideal intersect(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring(), J.ring(), "intersect");
    const std::string aux = fresh_var(I.ring(), "u");
    std::vector<std::uint8_t> flags(I.ring()->nvars() + 1, 0);
    flags.back() = 1;
    Ring ext = extend_ring(I.ring(), {aux}, MonomialOrder::block(flags));
    Polynomial t = Polynomial::variable(ext, aux);
    Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens()) gens.push_back(t * g.map_to(ext));
    for (const auto& g : J.gens()) gens.push_back(one_minus_t * g.map_to(ext));
    std::vector<std::size_t> front{ext->nvars() - 1};
    return Ideal(I.ring(), eliminate_into(gens, ext, front, I.ring()));
}

Ideal saturate(const Ideal& I, const Polynomial& f) {
    require_same_ring(f.ring(), I.ring(), "saturate");
    if (f.is_zero()) throw UsageError("saturation by the zero polynomial");
    const std::string aux = fresh_var(I.ring(), "z");
    std::vector<std::uint8_t> flags(I.ring()->nvars() + 1, 0);
    flags.back() = 1;
    Ring ext = extend_ring(I.ring(), {aux}, MonomialOrder::block(flags));
    std::vector<Polynomial> gens = rabinowitsch_gens(I, f, ext, aux);
    std::vector<std::size_t> front{ext->nvars() - 1};
    return Ideal(I.ring(), eliminate_into(gens, ext, front, I.ring()));
}

Ideal saturate(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring(), J.ring(), "saturate");
    bool first = true;
    Ideal acc = Ideal::zero(I.ring());
    for (const auto& g : J.gens()) {
        if (g.is_zero()) continue;
        Ideal part = saturate(I, g);
        acc = first ? part : intersect(acc, part);
        first = false;
    }
    if (first) throw UsageError("saturation by an ideal with no nonzero generator");
    return acc;
}

namespace {

// Minimum hitting set over the supports by branch and bound; the complement
// of a minimum hitting set is a maximum independent variable set.
void min_hitting_set(const std::vector<std::vector<std::size_t>>& sets,
                     std::vector<bool>& chosen, std::size_t size, std::size_t& best) {
    if (size >= best) return;
    const std::vector<std::size_t>* unhit = nullptr;
    for (const auto& s : sets) {
        bool hit = false;
        for (std::size_t v : s)
            if (chosen[v]) {
                hit = true;
                break;
            }
        if (!hit) {
            unhit = &s;
            break;
        }
    }
    if (!unhit) {
        best = size;
        return;
    }
    for (std::size_t v : *unhit) {
        chosen[v] = true;
        min_hitting_set(sets, chosen, size + 1, best);
        chosen[v] = false;
    }
}

}  // namespace

std::size_t krull_dim(const Ideal& I) {
    const auto& basis = I.reduced_basis();
    const std::size_t n = I.ring()->nvars();
    if (basis.empty()) return n;
    std::set<std::vector<std::size_t>> supports;
    for (const auto& g : basis) {
        auto s = g.leading_monomial().support();
        if (s.empty()) throw UnitIdeal("krull_dim of the unit ideal");
        supports.insert(std::move(s));
    }
    std::vector<std::vector<std::size_t>> sets(supports.begin(), supports.end());
    std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<bool> chosen(n, false);
    std::size_t best = n;
    min_hitting_set(sets, chosen, 0, best);
    return n - best;
}

}  // namespace quot
