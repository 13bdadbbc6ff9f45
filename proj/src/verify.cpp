#include "quot/verify.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <random>
#include <sstream>
#include <thread>

#include "quot/json_io.hpp"

namespace quot {

namespace {

class CheckFail : public Error {
public:
    explicit CheckFail(const std::string& msg) : Error(msg) {}
};

void check(bool ok, const std::string& msg) {
    if (!ok) throw CheckFail(msg);
}

std::vector<std::vector<unsigned>> partitions(unsigned d, unsigned max_parts) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    auto rec = [&](auto&& self, unsigned left, unsigned maxpart) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        if (cur.size() == max_parts) return;
        for (unsigned p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, left - p, p);
            cur.pop_back();
        }
    };
    rec(rec, d, d);
    return out;
}

Scalar random_scalar(std::mt19937_64& rng, Field f) {
    const long num = static_cast<long>(rng() % 9) - 4;
    if (f.is_rational()) {
        const long den = static_cast<long>(rng() % 3) + 1;
        return Scalar(f, mpq_class(num, den));
    }
    return Scalar(f, num);
}

QuotPoint random_point(std::mt19937_64& rng, unsigned d, unsigned r, Field f) {
    auto parts_list = partitions(d, r);
    const auto& parts = parts_list[rng() % parts_list.size()];
    ChartIndex chart(d, r, parts);
    Assignment params;
    for (unsigned h = 1; h <= d; ++h)
        for (unsigned m = 1; m <= r; ++m) params[w_name(h, m)] = random_scalar(rng, f);
    return {chart, CoordinateFrame::identity(f, r), std::move(params)};
}

ScalarMatrix random_invertible(std::mt19937_64& rng, Field f, unsigned n) {
    while (true) {
        ScalarMatrix m(f, n, n);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) m.at(i, j) = random_scalar(rng, f);
        if (!determinant(m).is_zero()) return m;
    }
}

std::string poly_list(const std::vector<Polynomial>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s;
}

// ---- claims ------------------------------------------------------------

std::string ac1(const VerifyOptions& o) {
    ChartIndex chart(2, 2, {1, 1});
    Ring ring = chart_ring(o.field, 2, 2);
    Ideal I = chart_ideal(chart, 2, ring);
    const std::vector<std::string> expected = {
        "w_1_1^2 + w_1_2*w_2_1",
        "w_1_1*w_1_2 + w_1_2*w_2_2",
        "w_1_1*w_2_1 + w_2_1*w_2_2",
        "w_1_2*w_2_1 + w_2_2^2",
    };
    check(I.gens().size() == 4, "expected 4 generators");
    for (std::size_t k = 0; k < 4; ++k) {
        Polynomial want = parse_poly(expected[k], ring);
        check(I.gens()[k] == want,
              "generator " + std::to_string(k + 1) + " is " + I.gens()[k].str() +
                  ", expected " + expected[k]);
    }
    check(ideal_equal(I, Ideal::parse(ring, expected)), "ideal mismatch against listed set");
    return "4 generators match verbatim and generate the same ideal";
}

std::string ac2(const VerifyOptions& o) {
    Ring ring = chart_ring(o.field, 2, 2);
    Ideal IP = chart_ideal(ChartIndex(2, 2, {1, 1}), 2, ring);
    Ideal IC = Ideal::parse(ring, {"w_1_1 + w_2_2", "w_1_1*w_2_2 - w_1_2*w_2_1"});
    Ideal Qemb = Ideal::parse(ring, {"w_1_2", "w_2_1", "w_1_1^2", "w_2_2^2"});
    check(ideal_equal(intersect(IC, Qemb), IP),
          "intersection of the two components does not recover the chart ideal");
    Ideal maxid = Ideal::parse(ring, {"w_1_1", "w_1_2", "w_2_1", "w_2_2"});
    check(ideal_equal(saturate(IP, maxid), IC),
          "saturation at the origin does not give the trace-determinant ideal");
    Assignment origin;
    for (const auto& v : ring->vars()) origin[v] = Scalar::zero(o.field);
    check(component_at(IP, origin) == ComponentKind::embedded,
          "origin should carry an embedded component");
    return "component intersection, saturation and embedded-point probe agree";
}

std::string ac3(const VerifyOptions& o) {
    double slowest = 0.0;
    for (unsigned t = 2; t <= std::min(5u, o.max_d); ++t) {
        for (unsigned r : {2u, 3u}) {
            auto start = std::chrono::steady_clock::now();
            Ring ring = chart_ring(o.field, t, r);
            Ideal I = chart_ideal(ChartIndex(t, r, {t}), t, ring);
            std::vector<Polynomial> expected;
            for (unsigned h = 1; h <= t; ++h)
                expected.push_back(Polynomial::variable(ring, w_name(h, 1)));
            check(I.reduced_basis() == expected,
                  "basis for t=" + std::to_string(t) + ", r=" + std::to_string(r) + " is {" +
                      poly_list(I.reduced_basis()) + "}");
            double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                            .count();
            slowest = std::max(slowest, dt);
            check(dt < 1.0, "case t=" + std::to_string(t) + ", r=" + std::to_string(r) +
                                " took " + std::to_string(dt) + "s, budget is 1s each");
        }
    }
    std::ostringstream details;
    details << "single-block charts reduce to the first parameter column, t <= "
            << std::min(5u, o.max_d) << ", slowest case " << slowest << "s";
    return details.str();
}

std::string ac4_field(unsigned t, Field f) {
    Ring ring = chart_ring(f, t, 2);
    std::vector<unsigned> parts = t == 2 ? std::vector<unsigned>{1, 1}
                                         : std::vector<unsigned>{t - 1, 1};
    Ideal J = chart_ideal(ChartIndex(t, 2, parts), t, ring);
    Polynomial trace = parse_poly(w_name(t - 1, 1) + " + " + w_name(t, 2), ring);
    check(radical_member(trace, J),
          "trace not in the radical for t=" + std::to_string(t) + " over " + f.str());
    check(!ideal_member(trace, J),
          "trace unexpectedly in the ideal for t=" + std::to_string(t) + " over " + f.str());
    return "t=" + std::to_string(t) + " over " + f.str();
}

std::string ac4(const VerifyOptions& o) {
    std::ostringstream details;
    for (unsigned t = 2; t <= std::min(4u, o.max_d); ++t) {
        if (o.field.is_rational()) {
            ac4_field(t, Field::prime(32003));  // fast probabilistic precheck
            details << ac4_field(t, o.field) << " (precheck Fp:32003); ";
        } else {
            details << ac4_field(t, o.field) << "; ";
        }
    }
    return "trace lies in the radical but not in the ideal: " + details.str();
}

std::string ac5(const VerifyOptions& o) {
    std::ostringstream details;
    const std::vector<std::pair<unsigned, unsigned>> square_cases = {{2, 2}, {2, 3}, {3, 3}};
    for (auto [t, r] : square_cases) {
        if (t > o.max_d) continue;
        std::vector<unsigned> ones(t, 1);
        Ideal I = chart_ideal(ChartIndex(t, r, ones), t, chart_ring(o.field, t, r));
        std::size_t dim = krull_dim(I);
        check(dim == static_cast<std::size_t>(t) * (r - 1),
              "full-parameter chart t=" + std::to_string(t) + ", r=" + std::to_string(r) +
                  " has dimension " + std::to_string(dim));
        details << "[1..1] t=" << t << " r=" << r << " dim " << dim << "; ";
    }
    for (unsigned t : {2u, 3u}) {
        if (t > o.max_d) continue;
        for (unsigned r : {2u, 3u}) {
            std::vector<unsigned> parts = t == 2 ? std::vector<unsigned>{1, 1}
                                                 : std::vector<unsigned>{t - 1, 1};
            Ideal I = reduced_chart_equations(ChartIndex(t, r, parts), chart_ring(o.field, t, r));
            std::size_t dim = krull_dim(I);
            check(dim == static_cast<std::size_t>(t) * (r - 1),
                  "reduced equations t=" + std::to_string(t) + ", r=" + std::to_string(r) +
                      " have dimension " + std::to_string(dim));
            details << "reduced t=" << t << " r=" << r << " dim " << dim << "; ";
        }
    }
    return details.str();
}

std::string ac6(const VerifyOptions& o) {
    for (unsigned t = 2; t <= std::min(4u, o.max_d); ++t) {
        std::vector<unsigned> parts = t == 2 ? std::vector<unsigned>{1, 1}
                                             : std::vector<unsigned>{t - 1, 1};
        Ring ring = chart_ring(o.field, t, 2);
        Ideal I = reduced_chart_equations(ChartIndex(t, 2, parts), ring);
        Assignment zero;
        for (const auto& v : ring->vars()) zero[v] = Scalar::zero(o.field);
        TangentReport rep = tangent_report(I, zero);
        check(rep.jacobian_rank == t - 1,
              "rank at the deepest point is " + std::to_string(rep.jacobian_rank) +
                  " for t=" + std::to_string(t));
        check(rep.singular, "point should be singular for t=" + std::to_string(t));
    }
    Ring ring2 = chart_ring(o.field, 2, 2);
    Ideal IP = chart_ideal(ChartIndex(2, 2, {1, 1}), 2, ring2);
    Assignment nilpotent_witness{{"w_1_1", Scalar::zero(o.field)},
                                 {"w_1_2", Scalar::one(o.field)},
                                 {"w_2_1", Scalar::zero(o.field)},
                                 {"w_2_2", Scalar::zero(o.field)}};
    TangentReport rep = tangent_report(IP, nilpotent_witness);
    check(rep.jacobian_rank == 2 && rep.tangent_dim == 2 && !rep.singular,
          "regular nilpotent witness should be a smooth point");
    return "singular certificates at the deep points, smooth certificate at the regular one";
}

std::string ac7(const VerifyOptions& o) {
    Ring ring = chart_ring(o.field, 2, 2);
    Ideal IP = chart_ideal(ChartIndex(2, 2, {1, 1}), 2, ring);
    Ideal IC = Ideal::parse(ring, {"w_1_1 + w_2_2", "w_1_1*w_2_2 - w_1_2*w_2_1"});
    for (const auto& g : IP.gens())
        check(radical_member(g, IC), "entry " + g.str() + " not in radical of (trace, det)");
    for (const auto& g : IC.gens())
        check(radical_member(g, IP), g.str() + " not in radical of the squared-matrix entries");
    return "radicals of the two presentations agree";
}

std::string ac8(const VerifyOptions& o) {
    std::mt19937_64 rng(20240811);
    unsigned total = 0;
    for (unsigned d = 2; d <= std::min(4u, o.max_d); ++d)
        for (unsigned r = 2; r <= 4; ++r)
            for (unsigned k = 0; k < 200; ++k) {
                QuotPoint pt = random_point(rng, d, r, o.field);
                check(cayley_hamilton_check(pt),
                      "column combination fails at a random point, d=" + std::to_string(d) +
                          " r=" + std::to_string(r));
                ++total;
            }

    // Symbolic version on the full 2x2 chart.
    Ring ring = chart_ring(o.field, 2, 2);
    PolyMatrix P = generic_p_matrix(ChartIndex(2, 2, {1, 1}), ring);
    std::vector<Polynomial> chi = char_poly(P);
    PolyMatrix acc(ring, 2, 2);
    for (std::size_t k = 0; k < chi.size(); ++k) acc = acc + P.pow(k).mul_poly(chi[k]);
    check(acc.is_zero(), "symbolic substitution of the matrix into its own polynomial");
    return std::to_string(total) + " random points plus the symbolic identity";
}

std::string ac9(const VerifyOptions& o) {
    std::mt19937_64 rng(767);
    unsigned count = 0;
    while (count < 100) {
        unsigned d = 2 + count % 2, r = 2 + (count / 2) % 2;
        QuotPoint pt = random_point(rng, d, r, o.field);
        BinaryForm base = hilb_support(pt);
        CMatrix C = expand_point(pt);
        ScalarMatrix mix = random_invertible(rng, o.field, r);
        ScalarMatrix mixed(o.field, d, C.m.cols());
        for (unsigned nb = 0; nb < r; ++nb)
            for (unsigned ob = 0; ob < r; ++ob) {
                const Scalar& w = mix.at(ob, nb);
                if (w.is_zero()) continue;
                for (unsigned j = 0; j <= d; ++j)
                    for (unsigned i = 0; i < d; ++i)
                        mixed.at(i, static_cast<std::size_t>(nb) * (d + 1) + j) +=
                            w * C.m.at(i, static_cast<std::size_t>(ob) * (d + 1) + j);
            }
        DetectResult det = detect_chart(CMatrix(d, r, std::move(mixed)));
        check(hilb_support(det.point) == base,
              "support changed under a basis mix at sample " + std::to_string(count));
        ++count;
    }

    // Exact transformation laws of the two line-coordinate moves.
    std::mt19937_64 rng2(768);
    unsigned law_checks = 0;
    for (unsigned k = 0; k < 40; ++k) {
        unsigned d = 2 + k % 3;
        QuotPoint pt = random_point(rng2, d, 2, o.field);
        ScalarMatrix P = p_matrix_at(pt);
        BinaryForm base = hilb_support(pt);
        for (long c : {1L, -1L, 2L}) {
            ScalarMatrix shifted = P + ScalarMatrix::identity(o.field, d).mul_scalar(
                                           Scalar(o.field, c));
            CoordinateFrame fr = CoordinateFrame::identity(o.field, 2);
            fr.gl2.at(1, 0) = Scalar(o.field, c);  // l' = y + c*x
            check(hilb_form(char_poly(shifted), fr) == base,
                  "shear law fails at sample " + std::to_string(k));
            ++law_checks;
        }
        auto Pinv = inverse(P);
        if (Pinv) {
            CoordinateFrame swap = CoordinateFrame::identity(o.field, 2);
            swap.gl2.at(0, 0) = Scalar::zero(o.field);
            swap.gl2.at(0, 1) = Scalar::one(o.field);
            swap.gl2.at(1, 0) = Scalar::one(o.field);
            swap.gl2.at(1, 1) = Scalar::zero(o.field);
            check(hilb_form(char_poly(*Pinv), swap) == base,
                  "swap law fails at sample " + std::to_string(k));
            CoordinateFrame id = CoordinateFrame::identity(o.field, 2);
            BinaryForm local = hilb_form(char_poly(P), id);
            BinaryForm inv_local = hilb_form(char_poly(*Pinv), id);
            check(inv_local == local.reversed().normalized(),
                  "coefficient reversal fails at sample " + std::to_string(k));
            ++law_checks;
        }
    }
    return "100 basis-mix re-detections and " + std::to_string(law_checks) +
           " frame-move identities";
}

std::string ac10(const VerifyOptions& o) {
    std::ostringstream details;
    for (unsigned d : {2u, 3u}) {
        if (d > o.max_d) continue;
        for (unsigned r : {2u, 3u}) {
            // Companion point with characteristic roots 1..d.
            Ring tring = make_ring(o.field, {"T"});
            Polynomial chi = Polynomial::constant(tring, 1);
            for (unsigned j = 1; j <= d; ++j)
                chi *= Polynomial::variable(tring, std::size_t{0}) -
                       Polynomial::constant(tring, static_cast<long>(j));
            Assignment params;
            for (unsigned h = 1; h <= d; ++h) {
                Monomial mono = Monomial::var(1, 0, h - 1);
                params[w_name(h, 1)] = -chi.coeff_of(mono);
            }
            for (unsigned h = 1; h <= d; ++h)
                for (unsigned m = 2; m <= r; ++m)
                    params[w_name(h, m)] = Scalar(o.field, static_cast<long>(h + m) % 3 + 1);
            QuotPoint pt{ChartIndex(d, r, {d}), CoordinateFrame::identity(o.field, r),
                         std::move(params)};

            auto comps = fiber_decompose(pt);
            check(comps.size() == d, "expected d distinct components");
            BinaryForm prod(o.field, std::vector<Scalar>{Scalar::one(o.field)});
            for (unsigned j = 0; j < d; ++j) {
                const FiberComponent& c = comps[j];
                check(c.multiplicity == 1, "component multiplicity should be 1");
                check(c.lambda == Scalar(o.field, static_cast<long>(j + 1)),
                      "roots should come out sorted");
                check(c.restricted.chart.d() == 1 && c.restricted.chart.parts() ==
                          std::vector<unsigned>{1},
                      "restriction should be a degree-1 point on chart [1]");
                check(c.restricted.params.size() == r,
                      "restriction should keep r parameters (r-1 of them free)");
                ScalarMatrix Pj = p_matrix_at(c.restricted);
                check(Pj.at(0, 0) == c.lambda, "restricted matrix should be the root");
                BinaryForm expected = c.root_form;  // (y - lambda x) for identity frames
                check(hilb_support(c.restricted) == expected.normalized(),
                      "restricted support should be the root line");
                prod = prod * c.root_form;
            }
            check(prod.normalized() == hilb_support(pt),
                  "product of root lines should be the total support");
            details << "d=" << d << " r=" << r << " ok; ";
        }
    }
    Ring qring = chart_ring(o.field, 1, 2);
    Ideal line = chart_ideal(ChartIndex(1, 2, {1}), 1, qring);
    check(line.reduced_basis() ==
              std::vector<Polynomial>{Polynomial::variable(qring, w_name(1, 1))},
          "degree-1 chart ideal should be the single bound parameter");
    return details.str();
}

std::string ac11(const VerifyOptions& o) {
    const Field f = o.field;
    // Module annihilated by y with two independent generators: blocks carry
    // only their degree-d seed.
    ScalarMatrix C(f, 2, 6);
    C.at(0, 0) = Scalar::one(f);
    C.at(1, 3) = Scalar::one(f);
    DetectResult det = detect_chart(CMatrix(2, 2, C));
    check(det.chart.parts() == std::vector<unsigned>{1, 1}, "chart should be [1,1]");
    check(p_matrix_at(det.point).is_zero(),
          "multiplication matrix should vanish, so y annihilates the module");
    BinaryForm ysq(f, 2);
    ysq.coeff(2) = Scalar::one(f);
    check(hilb_support(det.point) == ysq, "support form should be y^2");

    auto profile = multiplicity_profile(det.point);
    check(profile.size() == 1 && profile[0].algebraic == 2 && profile[0].corank == 2 &&
              !profile[0].flagged,
          "doubled point of corank 2 should not be flagged");

    Assignment jordan{{"w_1_1", Scalar::zero(f)},
                      {"w_1_2", Scalar::one(f)},
                      {"w_2_1", Scalar::zero(f)},
                      {"w_2_2", Scalar::zero(f)}};
    QuotPoint jpt{ChartIndex(2, 2, {1, 1}), CoordinateFrame::identity(f, 2), jordan};
    auto jprofile = multiplicity_profile(jpt);
    check(jprofile.size() == 1 && jprofile[0].algebraic == 2 && jprofile[0].corank == 1 &&
              jprofile[0].flagged,
          "principal nilpotent point should be flagged");
    return "support degree 2 with annihilator containing y; corank flags as expected";
}

struct Claim {
    const char* id;
    const char* anchor;
    double budget_s;
    std::string (*run)(const VerifyOptions&);
};

const Claim kClaims[] = {
    {"AC1", "chart [1,1], t=2: defining ideal generators", 1.0, ac1},
    {"AC2", "t=2 decomposition: isolated cone plus embedded point", 5.0, ac2},
    {"AC3", "single-block charts cut coordinate subspaces", 8.0, ac3},
    {"AC4", "trace is nilpotent on the chart but nonzero in it", 120.0, ac4},
    {"AC5", "fat-point loci have dimension t(r-1)", 60.0, ac5},
    {"AC6", "tangent certificates: deep points singular, witness smooth", 10.0, ac6},
    {"AC7", "null-cone radical equality for t=2", 5.0, ac7},
    {"AC8", "column combination by the characteristic polynomial vanishes", 30.0, ac8},
    {"AC9", "support form invariant under re-framing", 30.0, ac9},
    {"AC10", "split fibers decompose into degree-1 points", 10.0, ac10},
    {"AC11", "doubled structure with support larger than the annihilator locus", 1.0, ac11},
};

ClaimResult run_claim(const Claim& c, const VerifyOptions& opts) {
    ClaimResult res{c.id, c.anchor, ClaimStatus::pass, 0.0, "", c.budget_s};
    auto start = std::chrono::steady_clock::now();
    try {
        res.details = c.run(opts);
    } catch (const std::exception& e) {
        res.status = ClaimStatus::fail;
        res.details = e.what();
    }
    res.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (res.status == ClaimStatus::pass && opts.enforce_budgets && res.elapsed_s > c.budget_s) {
        res.status = ClaimStatus::fail;
        res.details += " [exceeded budget of " + std::to_string(c.budget_s) + "s]";
    }
    return res;
}

}  // namespace

bool VerificationReport::all_passed() const {
    for (const auto& c : claims)
        if (c.status == ClaimStatus::fail) return false;
    return true;
}

unsigned VerificationReport::count(ClaimStatus s) const {
    unsigned n = 0;
    for (const auto& c : claims)
        if (c.status == s) ++n;
    return n;
}

unsigned threads_from_env() {
    const char* env = std::getenv("QUOT_THREADS");
    if (!env) return 1;
    long v = std::strtol(env, nullptr, 10);
    if (v < 1) return 1;
    if (v > 64) return 64;
    return static_cast<unsigned>(v);
}

VerificationReport run_verification(const VerifyOptions& opts) {
    if (opts.max_d < 2) throw UsageError("verification needs max-d >= 2");
    const std::size_t n = std::size(kClaims);
    std::vector<ClaimResult> results(n);
    if (opts.threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) results[i] = run_claim(kClaims[i], opts);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) break;
                results[i] = run_claim(kClaims[i], opts);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < std::min<std::size_t>(opts.threads, n); ++t)
            pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return {std::move(results), opts.max_d, opts.field};
}

}  // namespace quot
