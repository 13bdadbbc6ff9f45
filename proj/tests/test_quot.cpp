#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "quot/fiber.hpp"
#include "quot/json_io.hpp"
#include "quot/tangent.hpp"

using namespace quot;

namespace {

const Field Q = Field::rationals();

Polynomial P(const std::string& s, const Ring& r) { return parse_poly(s, r); }

Scalar q(long n, long d = 1) { return Scalar(Q, mpq_class(n, d)); }

QuotPoint make_point(unsigned d, unsigned r, std::vector<unsigned> parts,
                     std::map<std::string, long> vals) {
    Assignment params;
    for (unsigned h = 1; h <= d; ++h)
        for (unsigned m = 1; m <= r; ++m) {
            auto it = vals.find(w_name(h, m));
            params[w_name(h, m)] = q(it == vals.end() ? 0 : it->second);
        }
    return {ChartIndex(d, r, std::move(parts)), CoordinateFrame::identity(Q, r),
            std::move(params)};
}

std::vector<std::vector<unsigned>> all_partitions(unsigned d, unsigned r) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    auto rec = [&](auto&& self, unsigned left, unsigned maxpart) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        if (cur.size() == r) return;
        for (unsigned p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, left - p, p);
            cur.pop_back();
        }
    };
    rec(rec, d, d);
    return out;
}

QuotPoint random_point(std::mt19937_64& rng, unsigned d, unsigned r) {
    auto parts = all_partitions(d, r);
    Assignment params;
    for (unsigned h = 1; h <= d; ++h)
        for (unsigned m = 1; m <= r; ++m)
            params[w_name(h, m)] =
                Scalar(Q, mpq_class(static_cast<long>(rng() % 9) - 4,
                                    static_cast<long>(rng() % 3) + 1));
    return {ChartIndex(d, r, parts[rng() % parts.size()]),
            CoordinateFrame::identity(Q, r), std::move(params)};
}

}  // namespace

TEST_CASE("chart index validation") {
    CHECK_THROWS_AS(ChartIndex(2, 2, {2, 1}), InvalidChart);   // sums to 3
    CHECK_THROWS_AS(ChartIndex(3, 2, {1, 2}), InvalidChart);   // not decreasing
    CHECK_THROWS_AS(ChartIndex(3, 2, {1, 1, 1}), InvalidChart);  // more parts than blocks
    CHECK_THROWS_AS(ChartIndex(2, 1, {2}), InvalidChart);      // rank too small
    ChartIndex c(5, 3, {3, 2});
    CHECK(c.columns() == std::vector<std::size_t>{0, 1, 2, 6, 7});
    CHECK(c.str() == "[3,2]");
}

TEST_CASE("generic matrix shapes") {
    Ring W2 = chart_ring(Q, 2, 2);
    PolyMatrix comp = generic_p_matrix(ChartIndex(2, 2, {2}), W2);
    CHECK(comp.at(0, 0).is_zero());
    CHECK(comp.at(1, 0) == Polynomial::constant(W2, 1));
    CHECK(comp.at(0, 1) == P("w_1_1", W2));
    CHECK(comp.at(1, 1) == P("w_2_1", W2));

    PolyMatrix full = generic_p_matrix(ChartIndex(2, 2, {1, 1}), W2);
    for (unsigned h = 1; h <= 2; ++h)
        for (unsigned m = 1; m <= 2; ++m)
            CHECK(full.at(h - 1, m - 1) == P(w_name(h, m), W2));

    // d=5 chart [3,2]: identity columns interleave with the parameter columns
    Ring W5 = chart_ring(Q, 5, 2);
    PolyMatrix m52 = generic_p_matrix(ChartIndex(5, 2, {3, 2}), W5);
    for (unsigned h = 1; h <= 5; ++h) {
        CHECK(m52.at(h - 1, 2) == P(w_name(h, 1), W5));
        CHECK(m52.at(h - 1, 4) == P(w_name(h, 2), W5));
    }
    CHECK(m52.at(1, 0) == Polynomial::constant(W5, 1));
    CHECK(m52.at(2, 1) == Polynomial::constant(W5, 1));
    CHECK(m52.at(4, 3) == Polynomial::constant(W5, 1));
    unsigned ones = 0, zeros = 0;
    for (unsigned i = 0; i < 5; ++i)
        for (unsigned j : {0u, 1u, 3u}) {
            if (m52.at(i, j).is_zero()) ++zeros;
            if (m52.at(i, j) == Polynomial::constant(W5, 1)) ++ones;
        }
    CHECK(ones == 3);
    CHECK(zeros == 12);
}

TEST_CASE("chart ideal") {
    Ring W = chart_ring(Q, 2, 2);
    Ideal I = chart_ideal(ChartIndex(2, 2, {1, 1}), 2, W);
    REQUIRE(I.gens().size() == 4);
    CHECK(I.gens()[0] == P("w_1_1^2 + w_1_2*w_2_1", W));
    CHECK(I.gens()[1] == P("w_1_1*w_1_2 + w_1_2*w_2_2", W));
    CHECK(I.gens()[2] == P("w_1_1*w_2_1 + w_2_1*w_2_2", W));
    CHECK(I.gens()[3] == P("w_1_2*w_2_1 + w_2_2^2", W));

    Ring W1 = chart_ring(Q, 1, 2);
    Ideal I1 = chart_ideal(ChartIndex(1, 2, {1}), 1, W1);
    REQUIRE(I1.gens().size() == 1);
    CHECK(I1.gens()[0] == P("w_1_1", W1));

    CHECK_THROWS_AS(chart_ideal(ChartIndex(2, 2, {2}), 3, W), UsageError);

    SUBCASE("variables outside the generic matrix stay free") {
        Ring W23 = chart_ring(Q, 2, 3);
        Ideal I23 = chart_ideal(ChartIndex(2, 3, {2}), 2, W23);
        for (const auto& g : I23.gens())
            for (const auto& t : g.terms())
                for (unsigned m = 2; m <= 3; ++m)
                    for (unsigned h = 1; h <= 2; ++h)
                        CHECK(t.mono[W23->index_of(w_name(h, m))] == 0);
    }
}

TEST_CASE("reduced chart equations") {
    Ring W = chart_ring(Q, 2, 2);
    Ideal I = reduced_chart_equations(ChartIndex(2, 2, {1, 1}), W);
    REQUIRE(I.gens().size() == 2);
    CHECK(ideal_equal(I, Ideal(W, {P("w_1_1 + w_2_2", W),
                                   P("w_1_1*w_2_2 - w_1_2*w_2_1", W)})));

    Ring W3 = chart_ring(Q, 3, 2);
    Ideal I3 = reduced_chart_equations(ChartIndex(3, 2, {3}), W3);
    CHECK(ideal_equal(I3, Ideal(W3, {P("w_1_1", W3), P("w_2_1", W3), P("w_3_1", W3)})));

    // expanding the [2,1] characteristic polynomial by hand:
    //   T^3 - (w_2_1 + w_3_2) T^2 + (w_2_1 w_3_2 - w_2_2 w_3_1 - w_1_1) T
    //       + (w_1_1 w_3_2 - w_1_2 w_3_1)
    // so the constant coefficient is quadratic, not cubic.
    Ideal I21 = reduced_chart_equations(ChartIndex(3, 2, {2, 1}), W3);
    REQUIRE(I21.gens().size() == 3);
    CHECK(I21.gens()[0] == P("w_1_1*w_3_2 - w_1_2*w_3_1", W3));
    CHECK(I21.gens()[1] == P("-w_1_1 + w_2_1*w_3_2 - w_2_2*w_3_1", W3));
    CHECK(I21.gens()[2] == P("-w_2_1 - w_3_2", W3));
    CHECK(I21.gens()[0].degree() == 2);
    CHECK(I21.gens()[1].degree() == 2);
    CHECK(I21.gens()[2].degree() == 1);
}

TEST_CASE("point expansion") {
    // all parameters zero on the companion chart: block 1 carries the
    // identity, every other block vanishes
    QuotPoint z = make_point(3, 2, {3}, {});
    CMatrix C = expand_point(z);
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j)
            CHECK(C.m.at(i, j) == (i == j ? q(1) : q(0)));
    for (unsigned j = 3; j < 8; ++j)
        for (unsigned i = 0; i < 3; ++i) CHECK(C.m.at(i, j).is_zero());

    // multiply the seeds through by hand for the [2] chart
    QuotPoint pt = make_point(2, 2, {2},
                              {{"w_1_1", -2}, {"w_2_1", 3}, {"w_1_2", 1}, {"w_2_2", 1}});
    CMatrix E = expand_point(pt);
    CHECK(E.block_col(1, 3) == std::vector<Scalar>{q(-2), q(3)});
    CHECK(E.block_col(2, 2) == std::vector<Scalar>{q(-2), q(4)});
    CHECK(E.block_col(2, 3) == std::vector<Scalar>{q(-8), q(10)});

    // degree-1 expansion over two blocks: [1, w11 | w12, w11*w12]
    QuotPoint one = make_point(1, 2, {1}, {{"w_1_1", 5}, {"w_1_2", 7}});
    CMatrix E1 = expand_point(one);
    CHECK(E1.m.at(0, 0) == q(1));
    CHECK(E1.m.at(0, 1) == q(5));
    CHECK(E1.m.at(0, 2) == q(7));
    CHECK(E1.m.at(0, 3) == q(35));

    SUBCASE("column recursion holds at random points") {
        std::mt19937_64 rng(61);
        for (int k = 0; k < 40; ++k) {
            unsigned d = 2 + rng() % 3, r = 2 + rng() % 2;
            QuotPoint p = random_point(rng, d, r);
            ScalarMatrix Pm = p_matrix_at(p);
            CMatrix Cp = expand_point(p);
            for (unsigned m = 1; m <= r; ++m)
                for (unsigned j = 2; j <= d + 1; ++j)
                    REQUIRE(Cp.block_col(m, j) == Pm.mul_vector(Cp.block_col(m, j - 1)));
        }
    }
}

TEST_CASE("evaluated matrix at a point") {
    QuotPoint pt = make_point(2, 2, {2}, {{"w_1_1", -2}, {"w_2_1", 3}});
    ScalarMatrix Pm = p_matrix_at(pt);
    CHECK(Pm.at(0, 0) == q(0));
    CHECK(Pm.at(0, 1) == q(-2));
    CHECK(Pm.at(1, 0) == q(1));
    CHECK(Pm.at(1, 1) == q(3));

    QuotPoint z = make_point(2, 2, {1, 1}, {});
    CHECK(p_matrix_at(z).is_zero());

    QuotPoint n5 = make_point(5, 2, {5}, {});
    ScalarMatrix N = p_matrix_at(n5);
    for (unsigned i = 0; i < 5; ++i) CHECK(N.at(i, 4).is_zero());
    CHECK(N.at(1, 0) == q(1));
}

TEST_CASE("chart detection") {
    SUBCASE("module annihilated by the second coordinate") {
        ScalarMatrix C(Q, 2, 6);
        C.at(0, 0) = q(1);
        C.at(1, 3) = q(1);
        DetectResult res = detect_chart(CMatrix(2, 2, C));
        CHECK(res.chart.parts() == std::vector<unsigned>{1, 1});
        CHECK(res.frame.is_identity());
        CHECK(p_matrix_at(res.point).is_zero());
    }

    SUBCASE("already normalized points are fixed points") {
        // w_3_1 = 0 keeps block 1 out of the [3] chart; w_1_2 = w_2_2 = 0
        // keeps the second block's orbit inside its own line, so [2,1] is
        // the largest chart containing the point.
        QuotPoint pt = make_point(3, 2, {2, 1},
                                  {{"w_1_1", 1}, {"w_2_1", 2}, {"w_3_1", 0},
                                   {"w_1_2", 0}, {"w_2_2", 0}, {"w_3_2", 5}});
        CMatrix C = expand_point(pt);
        DetectResult res = detect_chart(C);
        CHECK(res.chart.parts() == std::vector<unsigned>{2, 1});
        CHECK(res.frame.is_identity());
        CHECK(res.point.params == pt.params);
        CHECK(res.normalized.m == C.m);
    }

    SUBCASE("relation module lands on the single-block chart") {
        // quotient with y^2 e1 = -x^2 e1 and e2 = 0: basis x^2 e1, x y e1
        ScalarMatrix C(Q, 2, 6);
        C.at(0, 0) = q(1);   // x^2 e1
        C.at(1, 1) = q(1);   // x y e1
        C.at(0, 2) = q(-1);  // y^2 e1 = -x^2 e1
        DetectResult res = detect_chart(CMatrix(2, 2, C));
        CHECK(res.chart.parts() == std::vector<unsigned>{2});
        ScalarMatrix Pm = p_matrix_at(res.point);
        CHECK(Pm.at(0, 1) == q(-1));
        CHECK(Pm.at(1, 1) == q(0));
    }

    SUBCASE("rank deficient input is rejected") {
        ScalarMatrix C(Q, 2, 6);
        C.at(0, 0) = q(1);
        CHECK_THROWS_AS(detect_chart(CMatrix(2, 2, C)), RankDeficient);
    }

    SUBCASE("modules supported where x vanishes need a swapped frame") {
        // (S/(x^2)) e1 with e2 = 0: x^2 e1 = 0, basis x y e1, y^2 e1
        ScalarMatrix C(Q, 2, 6);
        C.at(0, 1) = q(1);
        C.at(1, 2) = q(1);
        DetectResult res = detect_chart(CMatrix(2, 2, C));
        CHECK(res.chart.parts() == std::vector<unsigned>{2});
        CHECK(!res.frame.is_identity());
        CHECK(res.frame.gl2.at(0, 0).is_zero());  // l = y
        // the doubled point at x = 0 pulls back to the form x^2
        CHECK(hilb_support(res.point).str() == "x^2");
    }

    SUBCASE("lex-largest chart wins and its minor is one") {
        std::mt19937_64 rng(67);
        for (int k = 0; k < 25; ++k) {
            unsigned d = 2 + rng() % 2, r = 2 + rng() % 2;
            QuotPoint pt = random_point(rng, d, r);
            DetectResult res = detect_chart(expand_point(pt));
            PlueckerVector pv = pluecker_coords(res.normalized);
            REQUIRE(pv.at(res.chart.columns()).is_one());
            // no lex-larger partition admits a consistent normalization:
            // detect_chart scans partitions in decreasing lex order, so the
            // detected chart is at least the point's own chart
            REQUIRE(res.chart.parts() >= pt.chart.parts());
        }
    }
}

TEST_CASE("pluecker coordinates") {
    QuotPoint pt = make_point(1, 2, {1}, {{"w_1_1", 2}, {"w_1_2", 3}});
    PlueckerVector pv = pluecker_coords(expand_point(pt));
    REQUIRE(pv.coords.size() == 4);  // C(4,1)
    CHECK(pv.coords[0].second == q(1));
    CHECK(pv.coords[1].second == q(2));
    CHECK(pv.coords[2].second == q(3));
    CHECK(pv.coords[3].second == q(6));  // w11*w12

    QuotPoint z = make_point(2, 2, {2}, {});
    PlueckerVector pz = pluecker_coords(expand_point(z));
    REQUIRE(pz.coords.size() == 15);  // C(6,2)
    CHECK(pz.at({0, 1}).is_one());
    // any minor touching a zero column vanishes
    CHECK(pz.at({0, 3}).is_zero());
    CHECK(pz.at({2, 4}).is_zero());
}

TEST_CASE("support form") {
    // multiplication by y is zero: support is the doubled point at y = 0
    ScalarMatrix C(Q, 2, 6);
    C.at(0, 0) = q(1);
    C.at(1, 3) = q(1);
    DetectResult ann = detect_chart(CMatrix(2, 2, C));
    CHECK(hilb_support(ann.point).str() == "y^2");

    QuotPoint pt = make_point(2, 2, {2}, {{"w_1_1", -2}, {"w_2_1", 3}});
    BinaryForm form = hilb_support(pt);
    CHECK(form.str() == "y^2 - 3*x*y + 2*x^2");
    // (y - x)(y - 2x) as an independent product
    BinaryForm f1 = BinaryForm::linear(Q, q(-1), q(1));
    BinaryForm f2 = BinaryForm::linear(Q, q(-2), q(1));
    CHECK(form == (f1 * f2).normalized());

    QuotPoint nil = make_point(3, 2, {3}, {});
    CHECK(hilb_support(nil).str() == "y^3");
}

TEST_CASE("symbolic support coordinates") {
    Ring W = chart_ring(Q, 2, 2);
    auto xi = xi_chart_map(ChartIndex(2, 2, {1, 1}), W);
    REQUIRE(xi.size() == 3);
    CHECK(xi[0] == Polynomial::constant(W, 1));
    CHECK(xi[1] == P("-w_1_1 - w_2_2", W));
    CHECK(xi[2] == P("w_1_1*w_2_2 - w_1_2*w_2_1", W));

    auto xi2 = xi_chart_map(ChartIndex(2, 2, {2}), W);
    CHECK(xi2[0] == Polynomial::constant(W, 1));
    CHECK(xi2[1] == P("-w_2_1", W));
    CHECK(xi2[2] == P("-w_1_1", W));

    // companion expansion for any degree: [1, -w_d_1, ..., -w_1_1]
    for (unsigned d : {3u, 4u}) {
        Ring Wd = chart_ring(Q, d, 2);
        auto xid = xi_chart_map(ChartIndex(d, 2, {d}), Wd);
        CHECK(xid[0] == Polynomial::constant(Wd, 1));
        for (unsigned k = 1; k <= d; ++k)
            CHECK(xid[k] == -Polynomial::variable(Wd, w_name(d + 1 - k, 1)));
    }

    SUBCASE("evaluating the chart map matches the point support") {
        std::mt19937_64 rng(71);
        for (int k = 0; k < 20; ++k) {
            unsigned d = 2 + rng() % 2;
            QuotPoint pt = random_point(rng, d, 2);
            auto coords = xi_chart_map(pt.chart, chart_ring(Q, d, 2));
            BinaryForm form(Q, d);
            for (unsigned i = 0; i <= d; ++i)
                form.coeff(d - i) = coords[i].eval(pt.params);
            REQUIRE(form.normalized() == hilb_support(pt));
        }
    }
}

TEST_CASE("column combination by the characteristic polynomial") {
    QuotPoint pt = make_point(2, 2, {2},
                              {{"w_1_1", -2}, {"w_2_1", 3}, {"w_1_2", 1}, {"w_2_2", 1}});
    CHECK(cayley_hamilton_check(pt));
    // the hand computation: 2*B21 - 3*B22 + B23 = 0
    CMatrix C = expand_point(pt);
    std::vector<Scalar> acc(2, q(0));
    for (unsigned i = 0; i < 2; ++i)
        acc[i] = q(2) * C.block_col(2, 1)[i] - q(3) * C.block_col(2, 2)[i] +
                 C.block_col(2, 3)[i];
    CHECK(acc[0].is_zero());
    CHECK(acc[1].is_zero());

    std::mt19937_64 rng(73);
    for (int k = 0; k < 50; ++k)
        REQUIRE(cayley_hamilton_check(random_point(rng, 2 + rng() % 3, 2 + rng() % 3)));
}

TEST_CASE("fiber decomposition") {
    SUBCASE("distinct rational roots split into degree-1 points") {
        QuotPoint pt = make_point(2, 3, {2},
                                  {{"w_1_1", -2}, {"w_2_1", 3}, {"w_1_2", 1},
                                   {"w_2_2", 1}, {"w_1_3", 2}, {"w_2_3", -1}});
        auto comps = fiber_decompose(pt);
        REQUIRE(comps.size() == 2);
        CHECK(comps[0].lambda == q(1));
        CHECK(comps[1].lambda == q(2));
        BinaryForm prod(Q, std::vector<Scalar>{q(1)});
        for (const auto& c : comps) {
            CHECK(c.multiplicity == 1);
            CHECK(c.restricted.chart.d() == 1);
            CHECK(p_matrix_at(c.restricted).at(0, 0) == c.lambda);
            prod = prod * c.root_form;
        }
        CHECK(comps[0].root_form.str() == "y - x");
        CHECK(comps[1].root_form.str() == "y - 2*x");
        CHECK(prod.normalized() == hilb_support(pt));
    }

    SUBCASE("nilpotent points have a single component at y") {
        QuotPoint pt = make_point(3, 2, {3}, {{"w_1_2", 1}, {"w_2_2", 2}});
        auto comps = fiber_decompose(pt);
        REQUIRE(comps.size() == 1);
        CHECK(comps[0].lambda == q(0));
        CHECK(comps[0].multiplicity == 3);
        CHECK(comps[0].root_form.str() == "y");
        CHECK(comps[0].restricted.chart.d() == 3);
    }

    SUBCASE("irrational spectrum is reported, not computed") {
        QuotPoint pt = make_point(2, 2, {2}, {{"w_1_1", 2}});  // T^2 - 2
        CHECK_THROWS_AS(fiber_decompose(pt), NonSplitCharPoly);
        try {
            fiber_decompose(pt);
        } catch (const NonSplitCharPoly& e) {
            CHECK(e.factor() == "T^2 - 2");
        }
    }

    SUBCASE("mixed multiplicities recombine to the support") {
        // chi = (T-1)^2 (T-3): w31 = 5, w21 = -7, w11 = 3
        QuotPoint pt = make_point(3, 2, {3},
                                  {{"w_1_1", 3}, {"w_2_1", -7}, {"w_3_1", 5},
                                   {"w_1_2", 1}, {"w_2_2", 1}, {"w_3_2", 1}});
        auto comps = fiber_decompose(pt);
        REQUIRE(comps.size() == 2);
        CHECK(comps[0].lambda == q(1));
        CHECK(comps[0].multiplicity == 2);
        CHECK(comps[1].lambda == q(3));
        CHECK(comps[1].multiplicity == 1);
        CHECK(hilb_support(comps[0].restricted).str() == "y^2 - 2*x*y + x^2");
        BinaryForm prod = comps[0].root_form.pow(2) * comps[1].root_form;
        CHECK(prod.normalized() == hilb_support(pt));
    }
}

TEST_CASE("multiplicity profile") {
    QuotPoint jordan = make_point(2, 2, {1, 1}, {{"w_1_2", 1}});
    auto pj = multiplicity_profile(jordan);
    REQUIRE(pj.size() == 1);
    CHECK(pj[0].algebraic == 2);
    CHECK(pj[0].corank == 1);
    CHECK(pj[0].flagged);

    QuotPoint zero = make_point(2, 2, {1, 1}, {});
    auto pz = multiplicity_profile(zero);
    REQUIRE(pz.size() == 1);
    CHECK(pz[0].algebraic == 2);
    CHECK(pz[0].corank == 2);
    CHECK(!pz[0].flagged);

    QuotPoint diag = make_point(2, 2, {1, 1}, {{"w_1_1", 1}, {"w_2_2", 2}});
    auto pd = multiplicity_profile(diag);
    REQUIRE(pd.size() == 2);
    CHECK(pd[0].algebraic == 1);
    CHECK(pd[0].corank == 1);
    CHECK(pd[1].algebraic == 1);
    CHECK(pd[1].corank == 1);
    CHECK(!pd[0].flagged);
    CHECK(!pd[1].flagged);
}

TEST_CASE("tangent reports") {
    Ring W = chart_ring(Q, 2, 2);
    Assignment origin;
    for (const auto& v : W->vars()) origin[v] = q(0);

    TangentReport r1 = tangent_report(reduced_chart_equations(ChartIndex(2, 2, {1, 1}), W),
                                      origin);
    CHECK(r1.jacobian_rank == 1);
    CHECK(r1.tangent_dim == 3);
    CHECK(r1.dim == 2);
    CHECK(r1.singular);

    Assignment witness{{"w_1_1", q(0)}, {"w_1_2", q(1)}, {"w_2_1", q(0)}, {"w_2_2", q(0)}};
    TangentReport r2 = tangent_report(chart_ideal(ChartIndex(2, 2, {1, 1}), 2, W), witness);
    CHECK(r2.jacobian_rank == 2);
    CHECK(r2.tangent_dim == 2);
    CHECK(r2.dim == 2);
    CHECK(!r2.singular);

    Ring W3 = chart_ring(Q, 3, 2);
    Assignment zero3;
    for (const auto& v : W3->vars()) zero3[v] = q(0);
    TangentReport r3 = tangent_report(reduced_chart_equations(ChartIndex(3, 2, {2, 1}), W3),
                                      zero3);
    CHECK(r3.jacobian_rank == 2);
    CHECK(r3.singular);

    Assignment off{{"w_1_1", q(1)}, {"w_1_2", q(0)}, {"w_2_1", q(0)}, {"w_2_2", q(0)}};
    CHECK_THROWS_AS(tangent_report(chart_ideal(ChartIndex(2, 2, {1, 1}), 2, W), off),
                    PointNotOnVariety);
}

TEST_CASE("component classification") {
    Ring W = chart_ring(Q, 2, 2);
    Assignment origin;
    for (const auto& v : W->vars()) origin[v] = q(0);
    CHECK(component_at(chart_ideal(ChartIndex(2, 2, {1, 1}), 2, W), origin) ==
          ComponentKind::embedded);

    Ring XY = make_ring(Q, {"x", "y"});
    Assignment o2{{"x", q(0)}, {"y", q(0)}};
    CHECK(component_at(Ideal(XY, {P("y", XY), P("x^2 - x", XY)}), o2) ==
          ComponentKind::isolated);
    CHECK(component_at(Ideal(XY, {P("x*y", XY)}), o2) == ComponentKind::none);
}

TEST_CASE("support form is frame independent") {
    std::mt19937_64 rng(79);
    for (int k = 0; k < 20; ++k) {
        unsigned d = 2 + rng() % 2, r = 2 + rng() % 2;
        QuotPoint pt = random_point(rng, d, r);
        BinaryForm base = hilb_support(pt);
        ScalarMatrix Pm = p_matrix_at(pt);

        // l' -> y + cx shifts the matrix by c
        for (long c : {1L, -2L}) {
            ScalarMatrix shifted = Pm + ScalarMatrix::identity(Q, d).mul_scalar(q(c));
            CoordinateFrame fr = CoordinateFrame::identity(Q, 2);
            fr.gl2.at(1, 0) = q(c);
            REQUIRE(hilb_form(char_poly(shifted), fr) == base);
        }
        // swapping the line coordinates inverts the matrix
        if (auto Pinv = inverse(Pm)) {
            CoordinateFrame swap = CoordinateFrame::identity(Q, 2);
            swap.gl2 = ScalarMatrix(Q, 2, 2);
            swap.gl2.at(0, 1) = q(1);
            swap.gl2.at(1, 0) = q(1);
            REQUIRE(hilb_form(char_poly(*Pinv), swap) == base);
            CoordinateFrame id2 = CoordinateFrame::identity(Q, 2);
            REQUIRE(hilb_form(char_poly(*Pinv), id2) ==
                    hilb_form(char_poly(Pm), id2).reversed().normalized());
        }
    }
}

TEST_CASE("point json round trip") {
    QuotPoint pt = make_point(2, 2, {2},
                              {{"w_1_1", -2}, {"w_2_1", 3}, {"w_1_2", 1}, {"w_2_2", 1}});
    nlohmann::json j = quot_point_to_json(pt);
    QuotPoint back = quot_point_from_json(j, Q);
    CHECK(back.chart == pt.chart);
    CHECK(back.params == pt.params);
    CHECK(hilb_support(back) == hilb_support(pt));
}
