#pragma once

#include <cstdint>
#include <vector>

#include "schatten/operator_core.hpp"

namespace schatten {

// Knobs shared by the orbit optimizers. All randomness (restart points,
// sampling) is derived from `seed` by per-use sub-seeding, so a run is
// reproducible from the single master seed.
struct OrbitParams {
    int restarts = 8;
    double tol = 1e-10;
    int max_iter = 5000;
    std::uint64_t seed = 42;
    // Extra starting unitaries tried before the default restart schedule
    // (identity first, Haar points after). Used to warm-start related solves.
    std::vector<Matrix> warm_starts;
};

// Outcome of an orbit optimization. `witnesses` holds the optimal unitaries
// (one for similarity orbits, two for equivalence orbits); `history` is the
// objective after each accepted step of the winning restart.
struct OrbitResult {
    Complex value{0.0, 0.0};
    double objective = 0.0;
    std::vector<Matrix> witnesses;
    int iterations = 0;
    std::vector<double> history;
    int restarts_used = 0;
};

namespace orbit {

// Haar-distributed unitary: QR of a complex Ginibre sample with the phase
// correction that makes R's diagonal positive. Deterministic in (n, seed).
Matrix haar_unitary(int n, std::uint64_t seed);

// Re-projects a drifted near-unitary onto the unitary group (QR with the
// same phase fix), keeping it close to the input.
Matrix reunitarize(const Matrix& u);

// exp(s) for skew-hermitian s, via the eigendecomposition of i*s.
Matrix exp_skew(const Matrix& s);

// Adjoint of the unitary polar factor of m: the unitary w maximizing
// Re tr(m w), which makes tr(m w) = ||m||_1. Building block of the
// alternating updates (and of the half-step optimality checks).
Matrix optimal_partner(const Matrix& m);

// tr(C U* T U). Gates: u unitary to tol::unitary, shapes consistent.
Complex orbit_value(const Matrix& c, const Matrix& t, const Matrix& u);

// tr(C U T V) for the two-sided orbit.
Complex orbit_value(const Matrix& c, const Matrix& t, const Matrix& u,
                    const Matrix& v);

// Maximizes |tr(C U T V)| over unitary pairs by alternating exact polar
// updates (each half-step is the closed-form optimum for its factor, so the
// objective is non-decreasing; a decrease beyond rounding raises
// NonConvergence). Stops a restart when the gain drops below params.tol and
// stops everything early once the singular-value certificate
// sum_j s_j(C) s_j(T) is met to 1e-12 relative.
OrbitResult alternating_bilinear_max(const Matrix& c, const Matrix& t,
                                     const OrbitParams& params = {});

// Maximizes Re(e^{-i theta} tr(C U* T U)) over the unitary group by
// Riemannian gradient ascent (tangent step, backtracking halving from 1.0,
// retraction through exp_skew, re-orthonormalization every 50 steps).
OrbitResult similarity_orbit_ascent(const Matrix& c, const Matrix& t,
                                    double theta,
                                    const OrbitParams& params = {});

// Minimizes |tr(C U* T U) - z|^2 by the same ascent machinery (negated
// objective). objective = attained distance |value - z|.
OrbitResult similarity_target_descent(const Matrix& c, const Matrix& t,
                                      Complex z,
                                      const OrbitParams& params = {});

// sum_j s_j(C) s_j(T): the certificate value for the bilinear maximum.
double singular_pairing(const Matrix& c, const Matrix& t);

}  // namespace orbit
}  // namespace schatten
