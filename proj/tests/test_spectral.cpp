#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "lawson/spectral.hpp"
#include "support/suite.hpp"

using namespace lawson;

namespace {

constexpr double kPi = std::numbers::pi;

Triple gen(int a, int b, int c) { return validate(Family::Generalized, a, b, c); }

}  // namespace

TEST_CASE("self-adjoint form is an exact rewrite of the separated equation") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> small(0, 5);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    int triples = 0;
    while (triples < 10) {
        const int a = small(rng);
        const int b = small(rng);
        Triple t;
        try {
            t = gen(a, b, static_cast<int>(std::floor(std::sqrt(double(a * a + b * b)))) + 1 + small(rng) % 2);
        } catch (const InvalidTriple&) {
            continue;
        }
        ++triples;
        // P and Q straight from the metric definition.
        const double a2 = double(t.a2());
        const double b2 = double(t.b2());
        const double c2 = double(t.c2());
        const double Q = c2 - a2 - b2;
        for (int li = 0; li < 5; ++li) {
            const int l = small(rng);
            const SLCoefficients sl = sl_coefficients(t, l);
            // phi = sum_k (u_k cos ky + v_k sin ky), k = 1..3.
            double u[3];
            double v[3];
            for (int k = 0; k < 3; ++k) {
                u[k] = unit(rng);
                v[k] = unit(rng);
            }
            const double lambda = 3.0 * unit(rng) + 3.0;
            for (int s = 0; s < 100; ++s) {
                const double y = angle(rng);
                double f = 0.0;
                double f1 = 0.0;
                double f2 = 0.0;
                for (int k = 1; k <= 3; ++k) {
                    const double c = std::cos(k * y);
                    const double sn = std::sin(k * y);
                    f += u[k - 1] * c + v[k - 1] * sn;
                    f1 += k * (-u[k - 1] * sn + v[k - 1] * c);
                    f2 += -k * k * (u[k - 1] * c + v[k - 1] * sn);
                }
                const double P = 0.5 * (c2 + (b2 - a2) * std::cos(2.0 * y));
                const double dP = -(b2 - a2) * std::sin(2.0 * y);
                const double separated = (1.0 + Q / (2.0 * P)) * f2 + dP / (2.0 * P) * f1 + (lambda - l * l / P) * f;
                const double self_adjoint =
                    -(sl.dp(y) * f1 + sl.p(y) * f2) + sl.q(y) * f - lambda * sl.w(y) * f;
                CAPTURE(to_string(t));
                CAPTURE(l);
                CHECK(std::abs(self_adjoint + sl.w(y) * separated) <= 1e-10 * std::max(1.0, std::abs(self_adjoint)));
            }
        }
    }
}

TEST_CASE("coefficient examples") {
    const SLCoefficients flat = sl_coefficients(gen(0, 0, 1), 0);
    for (double y : {0.0, 0.8, 2.4}) {
        CHECK(flat.p(y) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
        CHECK(flat.q(y) == 0.0);
        CHECK(flat.w(y) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
        const SLCoefficients lawson = sl_coefficients(validate(Family::Lawson, 3, 1), 2);
        CHECK(lawson.p(y) == doctest::Approx(lawson.w(y)).epsilon(1e-15));
        CHECK(sl_coefficients(gen(1, 2, 3), 0).q(y) == 0.0);
    }
    CHECK_THROWS_AS(sl_coefficients(gen(1, 2, 3), -1), std::invalid_argument);
}

TEST_CASE("flat torus spectrum") {
    const Triple t = gen(0, 0, 1);
    // Constant coefficients: the three-point scheme reproduces
    // 2 (2/h sin(mh/2))^2 exactly, which tends to 2 m^2.
    const double h = 2.0 * kPi / 1024;
    auto discrete = [h](int m) { return 2.0 * std::pow(2.0 / h * std::sin(0.5 * m * h), 2); };
    const std::vector<double> ev = sl_spectrum({t, 0, Symmetry::FullPeriodic}, 1024, 5).eigenvalues;
    const int modes[5] = {0, 1, 1, 2, 2};
    for (int i = 0; i < 5; ++i) CHECK(std::abs(ev[i] - discrete(modes[i])) <= 1e-10);

    const std::vector<double> fine = sl_spectrum({t, 0, Symmetry::FullPeriodic}, 2048, 5).eigenvalues;
    const double exact[5] = {0.0, 2.0, 2.0, 8.0, 8.0};
    for (int i = 0; i < 5; ++i) CHECK(std::abs(fine[i] - exact[i]) <= 1e-4);
    // lambda = 2(m^2 + l^2) on the half metric.
    const std::vector<double> ev2 = sl_spectrum({t, 2, Symmetry::FullPeriodic}, 2048, 3).eigenvalues;
    CHECK(std::abs(ev2[0] - 8.0) <= 1e-4);
    CHECK(std::abs(ev2[1] - 10.0) <= 1e-4);
    CHECK(std::abs(ev2[2] - 10.0) <= 1e-4);
}

TEST_CASE("any surface has a zero mode at l = 0") {
    for (const Triple& t : test::suite()) {
        CAPTURE(to_string(t));
        const SpectrumResult r = sl_spectrum({t, 0, Symmetry::FullPeriodic}, 512, 3);
        CHECK(std::abs(r.eigenvalues[0]) <= 1e-10);
        CHECK(r.grid_n == 512);
        CHECK(r.eigenvalues[1] > 0.1);
    }
}

TEST_CASE("anchor eigenvalues equal 2") {
    const SpectrumResult k = sl_spectrum({gen(0, 1, 2), 2, Symmetry::FullPeriodic}, 2048, 3);
    CHECK(std::abs(k.eigenvalues[0] - 2.0) <= 1e-5);

    const AnchorResiduals flat = anchor_check(gen(0, 0, 1), 1024);
    REQUIRE(flat.lambda0_c.has_value());
    CHECK(*flat.lambda0_c <= 1e-12);

    for (const Triple& t : {gen(1, 1, 2), gen(1, 2, 4)}) {
        CAPTURE(to_string(t));
        const AnchorResiduals r = anchor_check(t, 4096);
        REQUIRE(r.lambda0_c.has_value());
        CHECK(*r.lambda0_c <= 1e-4);
        CHECK(r.lambda1_max <= 1e-4);
        CHECK(r.lambda2_min <= 1e-4);
        CHECK(r.max() >= r.lambda1_max);
    }
    CHECK_FALSE(anchor_check(validate(Family::Lawson, 3, 1), 1024).lambda0_c.has_value());
}

TEST_CASE("anchor error converges at second order over three doublings") {
    const Triple t = gen(1, 2, 3);
    std::vector<AnchorResiduals> r;
    for (int n : {512, 1024, 2048, 4096}) r.push_back(anchor_check(t, n));
    for (std::size_t i = 0; i + 1 < r.size(); ++i) {
        CAPTURE(i);
        CHECK(std::log2(*r[i].lambda0_c / *r[i + 1].lambda0_c) == doctest::Approx(2.0).epsilon(0.1));
        CHECK(std::log2(r[i].lambda1_max / r[i + 1].lambda1_max) == doctest::Approx(2.0).epsilon(0.1));
        CHECK(std::log2(r[i].lambda2_min / r[i + 1].lambda2_min) == doctest::Approx(2.0).epsilon(0.1));
    }
}

TEST_CASE("immersion components solve the separated equation") {
    for (const Triple& t : test::suite()) {
        CAPTURE(to_string(t));
        for (int which : {1, 2, 3}) CHECK(component_residual(t, which) <= 1e-10);
    }
    CHECK(component_residual(validate(Family::Lawson, 2, 1), 3) == 0.0);
    CHECK_THROWS_AS(component_residual(gen(1, 2, 3), 4), std::invalid_argument);
}

TEST_CASE("Lame residuals") {
    for (int h : {0, 1, 2}) CHECK(lame_residual(0.0, h) <= 1e-15);
    CHECK(lame_residual(0.5, 0) <= 1e-12);
    CHECK(lame_residual(-1.0 / 3.0, 2) <= 1e-12);
    for (double k2 : {-2.0, -0.3, 0.25, 0.9}) {
        for (int h : {0, 1, 2}) CHECK(lame_residual(k2, h) <= 1e-12);
    }
    CHECK_THROWS_AS(lame_residual(1.0, 0), std::domain_error);
}

TEST_CASE("coordinate functions are Laplace eigenfunctions") {
    CHECK(takahashi_residual(gen(0, 0, 1), 256) <= 1e-3);
    CHECK(takahashi_residual(gen(0, 1, 2), 512) <= 2e-3);
    const double coarse = takahashi_residual(gen(1, 2, 3), 128);
    const double fine = takahashi_residual(gen(1, 2, 3), 256);
    CHECK(coarse / fine >= 3.2);
    CHECK(coarse / fine <= 4.8);
    CHECK_THROWS_AS(takahashi_residual(gen(1, 2, 3), 64), std::invalid_argument);
}

TEST_CASE("parity filters follow the identification") {
    using P = std::pair<Symmetry, Symmetry>;
    CHECK(parity_filters(gen(0, 1, 2)) == P{Symmetry::EvenAboutHalfPi, Symmetry::OddAboutHalfPi});
    CHECK(parity_filters(gen(1, 2, 4)) == P{Symmetry::EvenInY, Symmetry::OddInY});
    CHECK(parity_filters(gen(1, 1, 2)) == P{Symmetry::PiPeriodic, Symmetry::PiAntiperiodic});
    CHECK(parity_filters(gen(1, 2, 3)) == P{Symmetry::FullPeriodic, Symmetry::FullPeriodic});
    CHECK(parity_filters(validate(Family::Lawson, 1, 1)) == P{Symmetry::PiPeriodic, Symmetry::PiAntiperiodic});
}

TEST_CASE("symmetry names round-trip") {
    for (Symmetry s : {Symmetry::FullPeriodic, Symmetry::EvenInY, Symmetry::OddInY, Symmetry::EvenAboutHalfPi,
                       Symmetry::OddAboutHalfPi, Symmetry::PiPeriodic, Symmetry::PiAntiperiodic}) {
        CHECK(parse_symmetry(to_string(s)) == s);
    }
    CHECK(to_string(Symmetry::PiAntiperiodic) == "pi-antiperiodic");
    CHECK_THROWS_AS(parse_symmetry("sideways"), std::invalid_argument);
}

TEST_CASE("eigenvalue count below 2") {
    const CountReport flat = count_N2(gen(0, 0, 1), 2048);
    CHECK(flat.n2 == 1);
    CHECK(flat.agree);

    const CountReport klein = count_N2(gen(0, 1, 2), 2048);
    CHECK(klein.n2 == 1);
    CHECK(klein.j_closed == 1);
    CHECK(klein.agree);

    const CountReport t123 = count_N2(gen(1, 2, 3), 2048);
    CHECK(t123.n2 == 9);
    CHECK(t123.agree);
    const std::vector<std::pair<int, int>> per_l = {{0, 3}, {1, 2}, {2, 1}, {3, 0}};
    CHECK(t123.per_l_counts == per_l);
    CHECK(t123.l_last == 3);
    CHECK(t123.lambda0_beyond > 2.0);
    CHECK(t123.lambda3_at_0 > 2.0);
    CHECK(t123.epsilon >= 1e-6);

    const CountReport eq = count_N2(gen(1, 1, 2), 2048);
    CHECK(eq.n2 == 1);
    CHECK(eq.agree);
}

TEST_CASE("count is grid independent") {
    for (const Triple& t : {gen(1, 2, 5), gen(2, 3, 6), validate(Family::Lawson, 2, 1)}) {
        CAPTURE(to_string(t));
        CHECK(count_N2(t, 2048).n2 == count_N2(t, 4096).n2);
    }
    CHECK_THROWS_AS(count_N2(gen(1, 2, 3), 1024), std::invalid_argument);
}

TEST_CASE("Sturm ordering") {
    CHECK(interlacing_check(gen(0, 0, 1), 2048, 4));
    CHECK(interlacing_check(gen(1, 1, 2), 2048, 5));
    CHECK(interlacing_check(gen(1, 2, 4), 2048, 6));
}
