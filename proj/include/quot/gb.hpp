#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "quot/polynomial.hpp"

namespace quot {

/// Remainder of f under multivariate division by G, with divisors tried in
/// list order. No term of the result is divisible by any leading monomial
/// of G, and f - result lies in the ideal generated by G.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Buchberger with the normal (degree-then-order) selection strategy and the
/// coprime and chain criteria, followed by interreduction. Zero generators
/// are discarded. The result is the unique reduced basis for the ring order:
/// monic elements, pairwise indivisible leading monomials, fully tail-reduced,
/// sorted by descending leading monomial.
std::vector<Polynomial> groebner(const std::vector<Polynomial>& gens);

/// Ideal with write-once cache of its reduced basis (single computation even
/// under concurrent readers).
class Ideal {
public:
    Ideal(Ring ring, std::vector<Polynomial> gens);

    static Ideal zero(Ring ring) { return Ideal(std::move(ring), {}); }
    static Ideal parse(const Ring& ring, const std::vector<std::string>& gen_texts);

    const Ring& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    const std::vector<Polynomial>& reduced_basis() const;

    bool is_zero_ideal() const { return reduced_basis().empty(); }
    bool is_unit_ideal() const;

private:
    Ring ring_;
    std::vector<Polynomial> gens_;

    struct Cache {
        std::once_flag once;
        std::vector<Polynomial> basis;
    };
    std::shared_ptr<Cache> cache_;
};

bool ideal_member(const Polynomial& f, const Ideal& I);

/// Membership of f in the radical of I, decided by checking whether
/// 1 lies in I + (1 - z*f) in a ring extended by a fresh variable.
bool radical_member(const Polynomial& f, const Ideal& I);

bool ideal_equal(const Ideal& I, const Ideal& J);

/// I restricted to the variables outside `front` (indices into I's ring),
/// computed with a block elimination order. The result lives in the sub-ring
/// on the remaining variables.
Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& front);
Ideal eliminate(const Ideal& I, const std::vector<std::string>& front_names);

Ideal intersect(const Ideal& I, const Ideal& J);

/// I : f^infinity.
Ideal saturate(const Ideal& I, const Polynomial& f);
/// I : J^infinity as the intersection of the element saturations over J's
/// generators.
Ideal saturate(const Ideal& I, const Ideal& J);

/// Krull dimension of ring/I via maximal variable sets independent modulo
/// the leading-term ideal. Throws UnitIdeal if 1 lies in I.
std::size_t krull_dim(const Ideal& I);

}  // namespace quot
