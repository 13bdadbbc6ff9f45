#include "quot/fiber.hpp"

#include <algorithm>
#include <set>

namespace quot {

namespace {

void factor_mpz(mpz_class n, std::vector<mpz_class>& primes);

// Pollard rho (Brent variant); n odd composite without small factors.
mpz_class pollard_rho(const mpz_class& n) {
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xfeedface);
    while (true) {
        mpz_class y = rng.get_z_range(n - 2) + 1;
        mpz_class c = rng.get_z_range(n - 2) + 1;
        mpz_class x = y, g = 1, q = 1, ys = y;
        const unsigned long m = 128;
        unsigned long r = 1;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = (y * y + c) % n;
                    q = q * ((x - y) % n + n) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                mpz_class diff = ((x - ys) % n + n) % n;
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g != n) return g;
    }
}

void factor_mpz(mpz_class n, std::vector<mpz_class>& primes) {
    if (n <= 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
        primes.push_back(n);
        return;
    }
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
        if (n % p == 0) {
            primes.push_back(p);
            factor_mpz(n / p, primes);
            return;
        }
    }
    unsigned long p = 17;
    while (p < 100000 && mpz_class(p) * p <= n) {
        if (n % p == 0) {
            primes.push_back(p);
            factor_mpz(n / p, primes);
            return;
        }
        p += 2;
    }
    if (mpz_class(p) * p > n) {
        primes.push_back(n);
        return;
    }
    mpz_class g = pollard_rho(n);
    factor_mpz(g, primes);
    factor_mpz(n / g, primes);
}

std::vector<mpz_class> divisors(const mpz_class& n) {
    std::vector<mpz_class> primes;
    factor_mpz(abs(n), primes);
    std::sort(primes.begin(), primes.end());
    std::vector<mpz_class> divs{1};
    std::size_t i = 0;
    while (i < primes.size()) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        const std::size_t mult = j - i;
        const std::size_t base = divs.size();
        mpz_class pk = 1;
        for (std::size_t e = 1; e <= mult; ++e) {
            pk *= primes[i];
            for (std::size_t k = 0; k < base; ++k) divs.push_back(divs[k] * pk);
        }
        i = j;
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Scalar horner(const std::vector<Scalar>& coeffs, const Scalar& x) {
    Scalar acc = coeffs.back();
    for (std::size_t k = coeffs.size() - 1; k-- > 0;) acc = acc * x + coeffs[k];
    return acc;
}

// Synthetic division by (T - lambda); assumes the remainder vanishes.
std::vector<Scalar> deflate(const std::vector<Scalar>& coeffs, const Scalar& lambda) {
    const std::size_t n = coeffs.size() - 1;
    std::vector<Scalar> q(n, Scalar::zero(lambda.field()));
    Scalar carry = coeffs[n];
    for (std::size_t k = n; k-- > 0;) {
        q[k] = carry;
        carry = coeffs[k] + lambda * carry;
    }
    return q;
}

std::string remaining_factor_text(const std::vector<Scalar>& coeffs) {
    Ring tring = make_ring(coeffs[0].field(), {"T"});
    Polynomial f = Polynomial::zero(tring);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        f += Polynomial::constant(tring, coeffs[k]) *
             Polynomial::variable(tring, std::size_t{0}, static_cast<std::uint32_t>(k));
    return f.str();
}

std::vector<Scalar> root_candidates(const std::vector<Scalar>& coeffs) {
    const Field f = coeffs[0].field();
    if (f.is_prime_field()) {
        if (f.modulus() > 1000000)
            throw UsageError("root search over F_p supported for p <= 10^6");
        std::vector<Scalar> out;
        out.reserve(f.modulus());
        for (std::uint64_t v = 0; v < f.modulus(); ++v)
            out.push_back(Scalar(f, static_cast<long>(v)));
        return out;
    }
    // Rational root bound: numerators divide the constant term, denominators
    // divide the leading coefficient once denominators are cleared.
    mpz_class lcm_den = 1;
    for (const auto& c : coeffs)
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.rat().get_den().get_mpz_t());
    std::vector<mpz_class> ints;
    for (const auto& c : coeffs) {
        mpq_class v = c.rat() * mpq_class(lcm_den);
        v.canonicalize();
        ints.push_back(v.get_num());
    }
    const mpz_class& a0 = ints.front();
    const mpz_class& lead = ints.back();
    std::set<mpq_class> cands;
    for (const mpz_class& p : divisors(a0))
        for (const mpz_class& q : divisors(lead)) {
            mpq_class v(p, q);
            v.canonicalize();
            cands.insert(v);
            cands.insert(-v);
        }
    std::vector<Scalar> out;
    out.reserve(cands.size());
    for (const auto& v : cands) out.push_back(Scalar(f, v));
    return out;
}

}  // namespace

std::vector<std::pair<Scalar, unsigned>> linear_roots(const std::vector<Scalar>& coeffs_in) {
    if (coeffs_in.size() < 2) throw UsageError("root finding needs degree >= 1");
    const Field f = coeffs_in[0].field();
    std::vector<Scalar> coeffs = coeffs_in;
    std::vector<std::pair<Scalar, unsigned>> roots;

    auto record = [&](const Scalar& lambda) {
        for (auto& [r, m] : roots)
            if (r == lambda) {
                ++m;
                return;
            }
        roots.emplace_back(lambda, 1);
    };

    while (coeffs.size() > 1 && coeffs.front().is_zero()) {
        record(Scalar::zero(f));
        coeffs.erase(coeffs.begin());
    }
    if (coeffs.size() > 1) {
        for (const Scalar& cand : root_candidates(coeffs)) {
            while (coeffs.size() > 1 && horner(coeffs, cand).is_zero()) {
                record(cand);
                coeffs = deflate(coeffs, cand);
            }
            if (coeffs.size() == 1) break;
        }
    }
    if (coeffs.size() > 1) throw NonSplitCharPoly(remaining_factor_text(coeffs));
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return roots;
}

std::vector<FiberComponent> fiber_decompose(const QuotPoint& pt) {
    const Field f = pt.frame.gl2.field();
    const unsigned d = pt.chart.d(), r = pt.chart.r();
    const ScalarMatrix P = p_matrix_at(pt);
    const auto roots = linear_roots(char_poly(P));
    const CMatrix C = expand_point(pt);

    // Basis adapted to the generalized eigenspaces, one column group per root.
    ScalarMatrix B(f, d, d);
    std::vector<std::size_t> offsets;
    std::size_t col = 0;
    for (const auto& [lambda, mult] : roots) {
        ScalarMatrix shifted = P - ScalarMatrix::identity(f, d).mul_scalar(lambda);
        auto basis = kernel(shifted.pow(mult));
        if (basis.size() != mult)
            throw Error("generalized eigenspace dimension mismatch at root " + lambda.str());
        offsets.push_back(col);
        for (const auto& v : basis) {
            for (unsigned i = 0; i < d; ++i) B.at(i, col) = v[i];
            ++col;
        }
    }
    auto Binv = inverse(B);
    if (!Binv) throw Error("generalized eigenspaces do not span");
    ScalarMatrix Pt = *Binv * P * B;
    // the eigenspaces are invariant, so the conjugated matrix must be
    // block diagonal
    for (std::size_t j = 0; j < roots.size(); ++j)
        for (std::size_t a = offsets[j]; a < offsets[j] + roots[j].second; ++a)
            for (std::size_t b = 0; b < d; ++b)
                if ((b < offsets[j] || b >= offsets[j] + roots[j].second) &&
                    !Pt.at(a, b).is_zero())
                    throw Error("restriction is not block diagonal");

    BinaryForm L = BinaryForm::linear(f, pt.frame.gl2.at(0, 0), pt.frame.gl2.at(0, 1));
    BinaryForm Lp = BinaryForm::linear(f, pt.frame.gl2.at(1, 0), pt.frame.gl2.at(1, 1));

    std::vector<FiberComponent> out;
    for (std::size_t j = 0; j < roots.size(); ++j) {
        const auto& [lambda, mult] = roots[j];
        const std::size_t off = offsets[j];

        ScalarMatrix Pj(f, mult, mult);
        for (unsigned a = 0; a < mult; ++a)
            for (unsigned b = 0; b < mult; ++b) Pj.at(a, b) = Pt.at(off + a, off + b);

        ScalarMatrix Cj(f, mult, static_cast<std::size_t>(mult + 1) * r);
        for (unsigned m = 1; m <= r; ++m) {
            std::vector<Scalar> seed = Binv->mul_vector(C.block_col(m, 1));
            std::vector<Scalar> v(seed.begin() + off, seed.begin() + off + mult);
            for (unsigned c = 1; c <= mult + 1; ++c) {
                const std::size_t target = static_cast<std::size_t>(m - 1) * (mult + 1) + (c - 1);
                for (unsigned i = 0; i < mult; ++i) Cj.at(i, target) = v[i];
                if (c <= mult) v = Pj.mul_vector(v);
            }
        }

        DetectResult det = detect_chart(CMatrix(mult, r, std::move(Cj)));
        QuotPoint restricted = det.point;
        restricted.frame.gl2 = det.frame.gl2 * pt.frame.gl2;
        restricted.frame.glr = pt.frame.glr * det.frame.glr;

        BinaryForm root_form(f, 1);
        for (unsigned k = 0; k <= 1; ++k)
            root_form.coeff(k) = Lp.coeff(k) - lambda * L.coeff(k);

        out.push_back({lambda, mult, root_form.normalized(), std::move(restricted)});
    }
    return out;
}

std::vector<RootMultiplicity> multiplicity_profile(const QuotPoint& pt) {
    const Field f = pt.frame.gl2.field();
    const ScalarMatrix P = p_matrix_at(pt);
    const unsigned d = pt.chart.d();
    std::vector<RootMultiplicity> out;
    for (const auto& [lambda, mult] : linear_roots(char_poly(P))) {
        ScalarMatrix shifted = P - ScalarMatrix::identity(f, d).mul_scalar(lambda);
        const unsigned corank = static_cast<unsigned>(kernel(shifted).size());
        out.push_back({lambda, mult, corank, corank != mult});
    }
    return out;
}

}  // namespace quot
