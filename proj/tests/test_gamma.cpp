// Gamma machinery: log Gamma / digamma, the completed gamma factor, the
// functional-equation ratio Delta and its Stirling asymptotic, and the
// continuous phase theta.  Point values were frozen from an independent
// high-precision oracle; identities (recurrence, reflection, unit modulus)
// are asserted directly.

#include <catch2/catch_amalgamated.hpp>

#include <selberg/selberg.hpp>

#include "helpers.hpp"

using namespace selberg;
using testutil::cerr_abs;
using testutil::data_path;

TEST_CASE("log gamma oracle points", "[gamma]") {
    CHECK(cerr_abs(log_gamma(cplx(0.25, 50.0)),
                   cplx(-78.5988804327018425, 145.208659524257228)) < 1e-10);
    CHECK(cerr_abs(log_gamma(cplx(1.3, 700.0)),
                   cplx(-1093.39762584906579, 3887.0124739728004)) < 1e-9);
    CHECK(cerr_abs(log_gamma(cplx(0.5, 2500.0)),
                   cplx(-3926.07187845403688, 17060.1150438073971)) < 1e-8);
    CHECK(cerr_abs(log_gamma(cplx(0.75, 0.5)),
                   cplx(-0.0741025314081200, -0.452971895014924)) < 1e-13);
}

TEST_CASE("log gamma functional identities", "[gamma]") {
    // recurrence at exponential level, including left of the imaginary axis
    for (cplx z : {cplx(0.3, 1.7), cplx(-2.5, 1.5), cplx(-0.75, -3.0), cplx(-6.2, 0.4)}) {
        cplx lhs = std::exp(log_gamma(z + 1.0));
        cplx rhs = z * std::exp(log_gamma(z));
        CHECK(cerr_abs(lhs, rhs) < 1e-13 * std::abs(lhs));
    }
    // reflection: Gamma(z) Gamma(1-z) sin(pi z) = pi
    for (cplx z : {cplx(0.3, 0.4), cplx(-1.2, 2.0)}) {
        cplx prod = std::exp(log_gamma(z) + log_gamma(1.0 - z)) * std::sin(PI * z);
        CHECK(cerr_abs(prod, cplx(PI, 0.0)) < 1e-12);
    }
    // real positive integers
    CHECK(std::abs(std::exp(log_gamma(cplx(5.0, 0.0))).real() - 24.0) < 1e-12);
}

TEST_CASE("log gamma poles throw", "[gamma]") {
    CHECK_THROWS_AS(log_gamma(cplx(0.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(log_gamma(cplx(-3.0, 0.0)), std::domain_error);
    CHECK_NOTHROW(log_gamma(cplx(-3.5, 0.0)));
}

TEST_CASE("digamma values and recurrence", "[gamma]") {
    CHECK(std::abs(digamma(1.0) + EULER_GAMMA) < 1e-14);
    CHECK(std::abs(digamma(0.5) + EULER_GAMMA + 2.0 * std::log(2.0)) < 1e-14);
    CHECK(std::abs(digamma(4.0) - (-EULER_GAMMA + 1.0 + 0.5 + 1.0 / 3.0)) < 1e-14);
    cplx z(0.4, 2.3);
    CHECK(cerr_abs(digamma(z + 1.0), digamma(z) + 1.0 / z) < 1e-13);
    CHECK_THROWS_AS(digamma(cplx(-1.0, 2.0)), std::domain_error);
}

TEST_CASE("completed gamma factor point values", "[gamma]") {
    auto zc3 = load_definition(data_path("zeta_chi3.lf"));
    CHECK(cerr_abs(std::exp(log_gamma_factor(zc3.gamma, cplx(2.0, 0.0))),
                   cplx(0.269380683187749843, 0.0)) < 1e-14);
    CHECK(cerr_abs(log_gamma_factor(zc3.gamma, cplx(0.5, 30.0)),
                   cplx(-45.5837246081952258, 33.3801827665470741)) < 1e-11);
}

TEST_CASE("delta point values", "[gamma]") {
    auto zc3 = load_definition(data_path("zeta_chi3.lf"));
    CHECK(cerr_abs(delta(zc3.gamma, cplx(0.5, 5.0)),
                   cplx(0.881654844173553936, 0.471894835472169930)) < 1e-13);
    CHECK(cerr_abs(delta(zc3.gamma, cplx(0.3, 40.0)),
                   cplx(1.25048465193222948, 2.29320975760647793)) < 1e-12);
    CHECK(std::abs(std::abs(delta(zc3.gamma, cplx(0.3, 40.0))) - 2.61199595273415965) < 1e-12);
    CHECK(cerr_abs(delta(zc3.gamma, cplx(0.5, 1000.0)),
                   cplx(-0.493056297616206934, -0.869997406536938116)) < 1e-10);
}

TEST_CASE("delta has unit modulus on the critical line", "[gamma]") {
    for (const char* name : {"zeta_chi3.lf", "chi3_chi4.lf", "zeta_sq.lf"}) {
        auto def = load_definition(data_path(name));
        for (double t : {2.0, 7.5, 33.0, 250.0, 4000.0})
            CHECK(std::abs(std::abs(delta(def.gamma, cplx(0.5, t))) - 1.0) < 1e-11);
    }
}

TEST_CASE("delta satisfies the reciprocal reflection identity", "[gamma]") {
    // Delta(s) * conj(Delta(conj(1 - s))) = 1 off the critical line too.
    auto zc3 = load_definition(data_path("zeta_chi3.lf"));
    for (cplx s : {cplx(0.3, 12.0), cplx(0.8, 40.0), cplx(0.5, 5.0)}) {
        cplx prod = delta(zc3.gamma, s) * std::conj(delta(zc3.gamma, std::conj(1.0 - s)));
        CHECK(cerr_abs(prod, cplx(1.0, 0.0)) < 1e-11);
    }
}

TEST_CASE("delta asymptotic deviation scales like 1/t", "[gamma]") {
    auto zc3 = load_definition(data_path("zeta_chi3.lf"));
    auto inv = compute_invariants(zc3.gamma);
    // t * |Delta / Delta_asym - 1| tends to a constant (~1/12 here).
    const std::pair<double, double> table[] = {
        {125.0, 0.08333364}, {200.0, 0.08333345}, {250.0, 0.08333341},
        {500.0, 0.08333335}, {1000.0, 0.08333334},
    };
    for (auto [t, want] : table) {
        cplx d = delta(zc3.gamma, cplx(0.5, t));
        cplx da = delta_asymptotic(inv, cplx(0.5, t));
        CHECK(std::abs(t * std::abs(d / da - 1.0) - want) < 5e-7);
    }
    CHECK_THROWS_AS(delta_asymptotic(inv, cplx(0.5, 1.0)), std::domain_error);
}

TEST_CASE("stirling gamma approximates gamma", "[gamma]") {
    for (double sigma : {0.25, 0.5, 1.0}) {
        cplx exact = std::exp(log_gamma(cplx(sigma, 30.0)));
        cplx approx = stirling_gamma(sigma, 30.0);
        CHECK(std::abs(approx / exact - 1.0) < 1e-2);
    }
    CHECK_THROWS_AS(stirling_gamma(0.5, 1.0), std::domain_error);
}

TEST_CASE("theta point values", "[gamma]") {
    auto zc3 = load_definition(data_path("zeta_chi3.lf"));
    CHECK(std::abs(theta_value(zc3.gamma, 10.0) - 0.144310814158183472) < 1e-12);
    CHECK(std::abs(theta_value(zc3.gamma, 20.0) - 14.1453106669675133) < 1e-12);
    CHECK(std::abs(theta_value(zc3.gamma, 50.0) - 81.1734375204230099) < 1e-11);
    CHECK(std::abs(theta_value(zc3.gamma, 10.0, TWO_PI) - 0.144310814158183472 - TWO_PI) <
          1e-12);
}

TEST_CASE("theta phase tracking", "[gamma]") {
    auto zc3 = load_definition(data_path("zeta_chi3.lf"));
    ThetaState state;
    double prev = theta_value(zc3.gamma, 5.0);
    for (double t = 5.0; t <= 50.0; t += 0.25) {
        state = theta_phase(zc3.gamma, t, state);
        CHECK(std::abs(state.theta - prev) < PI);
        prev = state.theta;
    }
    // a coarse jump past the phase-step contract is rejected
    ThetaState coarse = theta_phase(zc3.gamma, 20.0, ThetaState{});
    CHECK_THROWS_AS(theta_phase(zc3.gamma, 50.0, coarse), tolerance_error);
}

TEST_CASE("growth diagnostic smoke", "[gamma]") {
    auto zc3 = load_definition(data_path("zeta_chi3.lf"));
    auto inv = compute_invariants(zc3.gamma);
    auto ser = build_coefficients(zc3, 2000);
    auto f_eval = [&](cplx s) { return evaluate_f(zc3.gamma, inv, ser, s).value; };
    auto cells = growth_diagnostic(zc3.gamma, inv, {0.5, 0.75}, {10.0, 30.0}, f_eval, 0.1);
    REQUIRE(cells.size() == 4);
    for (const auto& cell : cells) {
        CHECK(cell.value > 0.0);
        CHECK(cell.ratio > 0.0);
        // modest grid: the normalized ratio stays order-one
        CHECK(cell.ratio < 10.0);
    }
}
