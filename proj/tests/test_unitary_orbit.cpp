#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "schatten/unitary_orbit.hpp"
#include "test_helpers.hpp"

using namespace schatten;
using testutil::diag;
using testutil::max_abs;

TEST_CASE("haar_unitary: unitary, deterministic, seed-sensitive") {
    Matrix u = orbit::haar_unitary(4, 7);
    CHECK(core::is_unitary(u, 1e-10));
    CHECK(max_abs(orbit::haar_unitary(4, 7) - u) == 0.0);
    CHECK(max_abs(orbit::haar_unitary(4, 8) - u) > 1e-3);
    // n = 1: a bare phase
    Matrix p = orbit::haar_unitary(1, 3);
    CHECK(std::abs(std::abs(p(0, 0)) - 1.0) < 1e-12);
}

TEST_CASE("haar_unitary: first-entry second moment near 1/n") {
    // E |u_11|^2 = 1/n for Haar measure
    const int n = 3, samples = 10000;
    double acc = 0.0;
    for (int k = 0; k < samples; ++k) {
        Matrix u = orbit::haar_unitary(n, 1000 + k);
        acc += std::norm(u(0, 0));
    }
    CHECK(acc / samples == doctest::Approx(1.0 / n).epsilon(0.06));
}

TEST_CASE("reunitarize restores a drifted unitary") {
    Matrix u = orbit::haar_unitary(5, 11);
    Matrix drifted = u + 1e-6 * testutil::random_matrix(5, 5, 12);
    Matrix fixed = orbit::reunitarize(drifted);
    CHECK(core::is_unitary(fixed, 1e-12));
    CHECK(max_abs(fixed - u) < 1e-5);
}

TEST_CASE("exp_skew: unitary exponential with known 2x2 value") {
    // s = [[0, a], [-a, 0]] -> rotation by a
    double a = 0.7;
    Matrix s = Matrix::Zero(2, 2);
    s(0, 1) = a;
    s(1, 0) = -a;
    Matrix e = orbit::exp_skew(s);
    CHECK(core::is_unitary(e, 1e-12));
    CHECK(std::abs(e(0, 0) - Complex(std::cos(a), 0)) < 1e-12);
    CHECK(std::abs(e(0, 1) - Complex(std::sin(a), 0)) < 1e-12);
    CHECK(std::abs(e(1, 0) - Complex(-std::sin(a), 0)) < 1e-12);
    // exp(0) = I
    CHECK(max_abs(orbit::exp_skew(Matrix::Zero(3, 3)) -
                  Matrix::Identity(3, 3)) < 1e-14);
}

TEST_CASE("optimal_partner: attains the trace norm") {
    for (std::uint64_t seed : {301ull, 302ull, 303ull}) {
        Matrix m = testutil::random_matrix(4, 4, seed);
        Matrix w = orbit::optimal_partner(m);
        CHECK(core::is_unitary(w, 1e-10));
        Complex attained = core::trace(m * w);
        CHECK(std::abs(attained.imag()) < 1e-10);
        double trace_norm = core::schatten_norm(m, SchattenIndex(1.0));
        CHECK(attained.real() == doctest::Approx(trace_norm).epsilon(1e-9));
        // no unitary beats the trace norm
        Matrix rival = testutil::random_unitary(4, seed + 40);
        CHECK(std::abs(core::trace(m * rival)) <= trace_norm + 1e-9);
    }
}

TEST_CASE("orbit_value: identity, permutations, gates") {
    Matrix c = diag({2.0, 1.0});
    Matrix t = diag({3.0, -1.0});
    Matrix id = Matrix::Identity(2, 2);
    CHECK(std::abs(orbit::orbit_value(c, t, id) - Complex(5, 0)) < 1e-14);
    Matrix swap = Matrix::Zero(2, 2);
    swap(0, 1) = 1.0;
    swap(1, 0) = 1.0;
    // conjugating by the swap permutes the pairing: 2*(-1) + 1*3 = 1
    CHECK(std::abs(orbit::orbit_value(c, t, swap) - Complex(1, 0)) < 1e-14);
    CHECK(std::abs(orbit::orbit_value(c, t, id, id) - Complex(5, 0)) < 1e-14);
    CHECK_THROWS_AS(orbit::orbit_value(c, t, 2.0 * id), NotUnitary);
    CHECK_THROWS_AS(orbit::orbit_value(c, Matrix::Identity(3, 3), id),
                    ShapeMismatch);
}

TEST_CASE("orbit_value: bounded by the singular pairing") {
    for (std::uint64_t seed : {311ull, 312ull}) {
        Matrix c = testutil::random_matrix(4, 4, seed);
        Matrix t = testutil::random_matrix(4, 4, seed + 17);
        double cert = orbit::singular_pairing(c, t);
        for (int k = 0; k < 25; ++k) {
            Matrix u = testutil::random_unitary(4, 1000 * seed + k);
            Matrix v = testutil::random_unitary(4, 2000 * seed + k);
            CHECK(std::abs(orbit::orbit_value(c, t, u, v)) <= cert + 1e-9);
            CHECK(std::abs(orbit::orbit_value(c, t, u)) <= cert + 1e-9);
        }
    }
}

TEST_CASE("singular_pairing: diagonal example and zero padding") {
    CHECK(orbit::singular_pairing(diag({2.0, 1.0}), diag({3.0, 1.0})) ==
          doctest::Approx(7.0).epsilon(1e-13));
    CHECK(orbit::singular_pairing(Matrix::Zero(3, 3), diag({1.0, 2.0, 3.0})) ==
          0.0);
    // rectangular: lists padded to the common length
    Matrix wide = Matrix::Zero(2, 3);
    wide(0, 0) = 2.0;
    wide(1, 1) = 1.0;
    Matrix tall = wide.adjoint();
    CHECK(orbit::singular_pairing(wide, tall) ==
          doctest::Approx(5.0).epsilon(1e-13));
}

TEST_CASE("alternating_bilinear_max: diagonal example attains 7") {
    OrbitResult r = orbit::alternating_bilinear_max(diag({2.0, 1.0}),
                                                    diag({3.0, 1.0}));
    CHECK(r.objective == doctest::Approx(7.0).epsilon(1e-10));
    REQUIRE(r.witnesses.size() == 2);
    Complex check =
        orbit::orbit_value(diag({2.0, 1.0}), diag({3.0, 1.0}),
                           r.witnesses[0], r.witnesses[1]);
    CHECK(std::abs(check) == doctest::Approx(r.objective).epsilon(1e-12));
}

TEST_CASE("alternating_bilinear_max: zero factor short-circuits") {
    OrbitResult r = orbit::alternating_bilinear_max(Matrix::Zero(3, 3),
                                                    diag({1.0, 2.0, 3.0}));
    CHECK(r.objective == 0.0);
    CHECK(r.value == Complex(0, 0));
    CHECK(r.iterations == 1);
}

TEST_CASE("alternating_bilinear_max: meets the certificate on random pairs") {
    for (std::uint64_t seed : {321ull, 322ull, 323ull}) {
        Matrix c = testutil::random_matrix(5, 5, seed);
        Matrix t = testutil::random_matrix(5, 5, seed + 31);
        OrbitResult r = orbit::alternating_bilinear_max(c, t);
        double cert = orbit::singular_pairing(c, t);
        CHECK(r.objective <= cert + 1e-9);
        CHECK(r.objective == doctest::Approx(cert).epsilon(1e-8));
        // history never decreases beyond rounding
        for (std::size_t j = 1; j < r.history.size(); ++j)
            CHECK(r.history[j] + 1e-12 * std::max(1.0, r.history[j - 1]) >=
                  r.history[j - 1]);
        for (const Matrix& w : r.witnesses) CHECK(core::is_unitary(w, 1e-9));
    }
}

TEST_CASE("alternating_bilinear_max: rectangular factors") {
    // c: 3x5, t: 5x3 -> certificate over the three nonzero pairs
    Matrix c = testutil::random_matrix(3, 5, 331);
    Matrix t = testutil::random_matrix(5, 3, 332);
    OrbitResult r = orbit::alternating_bilinear_max(c, t);
    CHECK(r.objective ==
          doctest::Approx(orbit::singular_pairing(c, t)).epsilon(1e-8));
    CHECK(r.witnesses[0].rows() == 5);  // u: t-rows x t-rows? no: c-cols
    CHECK(r.witnesses[1].rows() == 3);
    CHECK_THROWS_AS(orbit::alternating_bilinear_max(c, c), ShapeMismatch);
}

TEST_CASE("alternating_bilinear_max: phase covariance of the value") {
    Matrix c = testutil::random_matrix(3, 3, 341);
    Matrix t = testutil::random_matrix(3, 3, 342);
    OrbitResult r = orbit::alternating_bilinear_max(c, t);
    for (int k = 0; k < 8; ++k) {
        double phi = 2.0 * M_PI * k / 8.0;
        Complex w = std::polar(1.0, phi);
        Complex rotated = orbit::orbit_value(c, t, w * r.witnesses[0],
                                             r.witnesses[1]);
        CHECK(std::abs(rotated - w * r.value) < 1e-12);
    }
}

TEST_CASE("similarity_orbit_ascent: hermitian extremes at the two angles") {
    Matrix c = diag({2.0, -1.0});
    Matrix t = diag({3.0, -5.0});
    OrbitResult up = orbit::similarity_orbit_ascent(c, t, 0.0);
    CHECK(up.objective == doctest::Approx(11.0).epsilon(1e-6));
    OrbitResult down = orbit::similarity_orbit_ascent(c, t, M_PI);
    // the attained value at theta = pi is the interval's left end
    CHECK(-down.objective == doctest::Approx(-13.0).epsilon(1e-6));
    CHECK(std::abs(up.value - Complex(11, 0)) < 1e-5);
    CHECK(std::abs(down.value - Complex(-13, 0)) < 1e-5);
    REQUIRE(up.witnesses.size() == 1);
    CHECK(core::is_unitary(up.witnesses[0], 1e-9));
    Complex reattained = orbit::orbit_value(c, t, up.witnesses[0]);
    CHECK(std::abs(reattained - up.value) < 1e-10);
}

TEST_CASE("similarity_orbit_ascent: constant on the orbit of a scalar") {
    // C = I/3 makes every orbit point tr(T)/3
    Matrix c = Matrix::Identity(3, 3) / 3.0;
    Matrix t = testutil::random_matrix(3, 3, 351);
    OrbitResult r = orbit::similarity_orbit_ascent(c, t, 0.3);
    Complex expected = core::trace(t) / 3.0;
    CHECK(std::abs(r.value - expected) < 1e-10);
}

TEST_CASE("similarity_orbit_ascent: geometric pair meets its radius") {
    const int n = 6;
    Matrix c = Matrix::Zero(n, n), t = Matrix::Zero(n, n);
    for (int j = 0; j < n; ++j) c(j, j) = std::pow(2.0, -(j + 1));
    for (int k = 1; k < n; ++k) t(k, k) = std::pow(2.0, -k);
    double radius = orbit::singular_pairing(c, t);
    OrbitResult r = orbit::similarity_orbit_ascent(c, t, 0.0);
    CHECK(r.objective == doctest::Approx(radius).epsilon(1e-8));
}

TEST_CASE("similarity_orbit_ascent: history is monotone") {
    Matrix c = testutil::random_hermitian(4, 361);
    Matrix t = testutil::random_hermitian(4, 362);
    OrbitResult r = orbit::similarity_orbit_ascent(c, t, 0.0);
    for (std::size_t j = 1; j < r.history.size(); ++j)
        CHECK(r.history[j] >= r.history[j - 1] - 1e-12);
    CHECK(r.iterations >= 1);
    CHECK(r.restarts_used >= 1);
}

TEST_CASE("similarity_target_descent: reaches an attainable target") {
    Matrix c = diag({1.0, -1.0});  // trace zero
    Matrix t = testutil::random_hermitian(2, 371);
    // 0 is always attainable for a trace-zero hermitian C against any
    // hermitian T on some unitary orbit point (interval straddles 0)
    OrbitResult r = orbit::similarity_target_descent(c, t, Complex(0, 0));
    CHECK(r.objective < 1e-6);
    CHECK(std::abs(r.value) < 1e-6);
    REQUIRE(r.witnesses.size() == 1);
    Complex reattained = orbit::orbit_value(c, t, r.witnesses[0]);
    CHECK(std::abs(reattained - r.value) < 1e-10);
}

TEST_CASE("similarity_target_descent: zero residual at a known orbit point") {
    Matrix c = testutil::random_hermitian(3, 381);
    Matrix t = testutil::random_hermitian(3, 382);
    Matrix u = testutil::random_unitary(3, 383);
    Complex z = orbit::orbit_value(c, t, u);
    OrbitParams params;
    params.warm_starts = {u};
    OrbitResult r = orbit::similarity_target_descent(c, t, z, params);
    CHECK(r.objective < 1e-10);
}

TEST_CASE("optimizers respect restart budget and report history") {
    Matrix c = testutil::random_hermitian(3, 391);
    Matrix t = testutil::random_hermitian(3, 392);
    OrbitParams lean;
    lean.restarts = 2;
    lean.max_iter = 50;
    OrbitResult r = orbit::similarity_orbit_ascent(c, t, 0.0, lean);
    CHECK(r.restarts_used <= 2);
    CHECK(!r.history.empty());
    CHECK(r.history.back() == doctest::Approx(r.objective).epsilon(1e-12));
    OrbitParams bad;
    bad.tol = 0.0;
    CHECK_THROWS_AS(orbit::alternating_bilinear_max(c, t, bad),
                    std::invalid_argument);
}
