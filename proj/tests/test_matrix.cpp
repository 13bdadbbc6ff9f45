#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "quot/chart.hpp"
#include "quot/matrix.hpp"

using namespace quot;

namespace {

const Field Q = Field::rationals();

Polynomial P(const std::string& s, const Ring& r) { return parse_poly(s, r); }

ScalarMatrix rand_matrix(std::mt19937_64& rng, Field f, std::size_t n, std::size_t m) {
    ScalarMatrix a(f, n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            a.at(i, j) = Scalar(f, static_cast<long>(rng() % 9) - 4);
    return a;
}

// Independent determinant route: recursive cofactor expansion along the last
// column, no memoization and no shared code with the library path.
Polynomial det_last_col(const PolyMatrix& M, std::vector<std::size_t> rows,
                        std::size_t ncols) {
    if (ncols == 0) return Polynomial::constant(M.ring(), 1);
    Polynomial acc = Polynomial::zero(M.ring());
    for (std::size_t k = 0; k < rows.size(); ++k) {
        std::vector<std::size_t> rest = rows;
        rest.erase(rest.begin() + k);
        Polynomial minor = det_last_col(M, rest, ncols - 1);
        Polynomial term = M.at(rows[k], ncols - 1) * minor;
        if ((k + ncols - 1) % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

std::vector<Polynomial> char_poly_oracle(const PolyMatrix& M) {
    Ring ext = extend_ring(M.ring(), {"T"}, MonomialOrder::grevlex());
    const std::size_t d = M.rows();
    PolyMatrix TI(ext, d, d);
    Polynomial T = Polynomial::variable(ext, ext->nvars() - 1);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            TI.at(i, j) = -M.at(i, j).map_to(ext);
            if (i == j) TI.at(i, j) += T;
        }
    std::vector<std::size_t> rows(d);
    for (std::size_t i = 0; i < d; ++i) rows[i] = i;
    Polynomial chi = det_last_col(TI, rows, d);
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k <= d; ++k) {
        std::vector<Term> bucket;
        for (const auto& t : chi.terms()) {
            if (t.mono[ext->nvars() - 1] != k) continue;
            std::vector<std::uint32_t> exps(M.ring()->nvars());
            for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = t.mono[i];
            bucket.push_back({t.coeff, Monomial(std::move(exps))});
        }
        out.push_back(Polynomial::from_terms(M.ring(), std::move(bucket)));
    }
    return out;
}

}  // namespace

TEST_CASE("matrix powers") {
    Ring W = chart_ring(Q, 2, 2);
    PolyMatrix Pm = generic_p_matrix(ChartIndex(2, 2, {2}), W);
    PolyMatrix P2 = Pm.pow(2);
    CHECK(P2.at(0, 0) == P("w_1_1", W));
    CHECK(P2.at(0, 1) == P("w_1_1*w_2_1", W));
    CHECK(P2.at(1, 0) == P("w_2_1", W));
    CHECK(P2.at(1, 1) == P("w_1_1 + w_2_1^2", W));

    CHECK(Pm.pow(0) == PolyMatrix::identity(W, 2));
    PolyMatrix zero(W, 3, 3);
    CHECK(zero.pow(4).is_zero());
    CHECK_THROWS_AS(PolyMatrix(W, 2, 3).pow(2), DimensionMismatch);
}

TEST_CASE("characteristic polynomial of the generic 2x2 matrix") {
    Ring W = chart_ring(Q, 2, 2);
    auto chi = char_poly(generic_p_matrix(ChartIndex(2, 2, {1, 1}), W));
    REQUIRE(chi.size() == 3);
    CHECK(chi[2] == Polynomial::constant(W, 1));
    CHECK(chi[1] == P("-w_1_1 - w_2_2", W));
    CHECK(chi[0] == P("w_1_1*w_2_2 - w_1_2*w_2_1", W));
}

TEST_CASE("companion charts against the last-column cofactor oracle") {
    for (unsigned t = 2; t <= 5; ++t) {
        Ring W = chart_ring(Q, t, 2);
        PolyMatrix Pm = generic_p_matrix(ChartIndex(t, 2, {t}), W);
        auto chi = char_poly(Pm);
        auto oracle = char_poly_oracle(Pm);
        REQUIRE(chi.size() == oracle.size());
        for (std::size_t k = 0; k < chi.size(); ++k) CHECK(chi[k] == oracle[k]);
        // companion shape: T^t - w_t_1 T^(t-1) - ... - w_1_1
        for (unsigned k = 0; k < t; ++k)
            CHECK(chi[k] == -Polynomial::variable(W, w_name(k + 1, 1)));
    }
}

TEST_CASE("characteristic polynomial of scalar matrices") {
    ScalarMatrix Z(Q, 3, 3);
    auto chi = char_poly(Z);
    REQUIRE(chi.size() == 4);
    for (unsigned k = 0; k < 3; ++k) CHECK(chi[k].is_zero());
    CHECK(chi[3].is_one());
    CHECK_THROWS_AS(char_poly(ScalarMatrix(Q, 2, 3)), DimensionMismatch);
}

TEST_CASE("trace and determinant coefficients") {
    std::mt19937_64 rng(31);
    for (int k = 0; k < 30; ++k) {
        std::size_t n = 2 + rng() % 3;
        ScalarMatrix M = rand_matrix(rng, Q, n, n);
        auto chi = char_poly(M);
        Scalar tr = Scalar::zero(Q);
        for (std::size_t i = 0; i < n; ++i) tr += M.at(i, i);
        REQUIRE(chi[n - 1] == -tr);
        Scalar det = determinant(M);
        Scalar sign = n % 2 == 0 ? Scalar(Q, 1) : Scalar(Q, -1);
        REQUIRE(chi[0] == sign * det);
    }
}

TEST_CASE("cayley-hamilton for random matrices") {
    std::mt19937_64 rng(37);
    for (Field f : {Q, Field::prime(32003)}) {
        for (int k = 0; k < 20; ++k) {
            std::size_t n = 2 + rng() % 3;
            ScalarMatrix M = rand_matrix(rng, f, n, n);
            auto chi = char_poly(M);
            ScalarMatrix acc(f, n, n);
            for (std::size_t e = 0; e < chi.size(); ++e)
                acc = acc + M.pow(e).mul_scalar(chi[e]);
            REQUIRE(acc.is_zero());
        }
    }
    // and symbolically over the polynomial ring up to size 3
    Ring W = chart_ring(Q, 3, 3);
    PolyMatrix G = generic_p_matrix(ChartIndex(3, 3, {1, 1, 1}), W);
    auto chi = char_poly(G);
    PolyMatrix acc(W, 3, 3);
    for (std::size_t e = 0; e < chi.size(); ++e) acc = acc + G.pow(e).mul_poly(chi[e]);
    CHECK(acc.is_zero());
}

TEST_CASE("similarity invariance") {
    std::mt19937_64 rng(43);
    for (int k = 0; k < 20; ++k) {
        std::size_t n = 2 + rng() % 2;
        ScalarMatrix M = rand_matrix(rng, Q, n, n);
        ScalarMatrix S = rand_matrix(rng, Q, n, n);
        auto Sinv = inverse(S);
        if (!Sinv) continue;
        REQUIRE(char_poly(*Sinv * M * S) == char_poly(M));
    }
}

TEST_CASE("kernel") {
    CHECK(kernel(ScalarMatrix::identity(Q, 3)).empty());
    CHECK(kernel(ScalarMatrix(Q, 2, 2)).size() == 2);

    ScalarMatrix J(Q, 2, 2);
    J.at(0, 1) = Scalar(Q, 1);
    auto basis = kernel(J);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0][0] == Scalar(Q, 1));
    CHECK(basis[0][1] == Scalar(Q, 0));

    SUBCASE("rank plus kernel dimension is the column count") {
        std::mt19937_64 rng(47);
        for (int k = 0; k < 40; ++k) {
            std::size_t n = 1 + rng() % 4, m = 1 + rng() % 4;
            ScalarMatrix M = rand_matrix(rng, Q, n, m);
            auto basis = kernel(M);
            REQUIRE(rank(M) + basis.size() == m);
            for (const auto& v : basis) {
                auto img = M.mul_vector(v);
                for (const auto& c : img) REQUIRE(c.is_zero());
            }
        }
    }
}

TEST_CASE("determinant matches cofactor expansion") {
    std::mt19937_64 rng(53);
    Ring none = make_ring(Q, {});
    for (int k = 0; k < 25; ++k) {
        std::size_t n = 1 + rng() % 4;
        ScalarMatrix M = rand_matrix(rng, Q, n, n);
        PolyMatrix lift(none, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                lift.at(i, j) = Polynomial::constant(none, M.at(i, j));
        std::vector<std::size_t> rows(n);
        for (std::size_t i = 0; i < n; ++i) rows[i] = i;
        Polynomial d = det_last_col(lift, rows, n);
        Scalar expect = d.is_zero() ? Scalar::zero(Q) : d.leading_coeff();
        REQUIRE(determinant(M) == expect);
    }
}

TEST_CASE("jacobian rank at a point") {
    Ring W = chart_ring(Q, 2, 2);
    Assignment origin{{"w_1_1", Scalar(Q, 0)},
                      {"w_1_2", Scalar(Q, 0)},
                      {"w_2_1", Scalar(Q, 0)},
                      {"w_2_2", Scalar(Q, 0)}};
    // trace and determinant at the origin: only the trace has a linear part
    std::vector<Polynomial> radical_gens{P("w_1_1 + w_2_2", W),
                                         P("w_1_1*w_2_2 - w_1_2*w_2_1", W)};
    JacobianRank jr = jacobian_rank_at(radical_gens, origin);
    CHECK(jr.rank == 1);
    CHECK(jr.tangent_dim == 3);

    // nilpotent witness [[0,1],[0,0]] on the squared-entry equations
    Ideal IP = chart_ideal(ChartIndex(2, 2, {1, 1}), 2, W);
    Assignment witness{{"w_1_1", Scalar(Q, 0)},
                       {"w_1_2", Scalar(Q, 1)},
                       {"w_2_1", Scalar(Q, 0)},
                       {"w_2_2", Scalar(Q, 0)}};
    JacobianRank jw = jacobian_rank_at(IP.gens(), witness);
    CHECK(jw.rank == 2);
    CHECK(jw.tangent_dim == 2);

    // everything of degree >= 2 has a zero Jacobian at the origin
    JacobianRank j0 = jacobian_rank_at({P("w_1_1^2", W), P("w_1_2*w_2_1", W)}, origin);
    CHECK(j0.rank == 0);

    CHECK_THROWS_AS(jacobian_rank_at({P("w_1_1 - 1", W)}, origin), PointNotOnVariety);
}
