#pragma once

#include <Eigen/Dense>
#include <complex>
#include <limits>

#include "schatten/errors.hpp"
#include "schatten/util.hpp"

namespace schatten {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Tolerances shared across the library. Gate values are preconditions on
// inputs; claim values bound what computed outputs are tested against.
namespace tol {
inline constexpr double orthonormal = 1e-10;   // frame columns
inline constexpr double hermitian = 1e-10;     // symmetry gate
inline constexpr double normal = 1e-9;         // commutator gate
inline constexpr double unitary = 1e-8;        // isometry gate
inline constexpr double reconstruct = 1e-9;    // factorization residuals
inline constexpr double rank_clamp = 1e-12;    // relative singular-value floor
inline constexpr double diag_residual = 1e-8;  // Schur off-diagonal cap
inline constexpr double algebraic = 1e-9;      // identity claims
inline constexpr double optimizer = 1e-6;      // optimizer-vs-formula claims
}  // namespace tol

// p-index of a Schatten norm: a real p >= 1 or infinity (operator norm).
class SchattenIndex {
  public:
    explicit SchattenIndex(double p);
    static SchattenIndex inf();

    bool is_inf() const { return inf_; }
    // Finite value; only valid when !is_inf().
    double value() const { return p_; }
    // Hoelder conjugate: 1 <-> inf, otherwise p/(p-1).
    SchattenIndex conjugate() const;

  private:
    SchattenIndex() : p_(0), inf_(true) {}
    double p_;
    bool inf_;
};

// Schmidt form of a finite matrix: A = sum_j s_j g_j f_j^*, with the
// singular values non-increasing and both frames orthonormal.
struct SchmidtForm {
    RealVector singular_values;  // length min(rows, cols), clamped at zero
    Matrix left_frame;           // columns g_j (rows = A.rows())
    Matrix right_frame;          // columns f_j (rows = A.cols())

    Matrix reconstruct() const;
    int rank() const;  // count of singular values above the relative floor
};

// Positive and negative parts of a hermitian matrix: A = P - N with
// P, N hermitian positive semidefinite and PN = 0.
struct HermitianSplit {
    Matrix positive_part;
    Matrix negative_part;
};

namespace core {

// Full Schmidt decomposition (thin SVD). Values below
// tol::rank_clamp * s_1 are clamped to exactly zero.
SchmidtForm schmidt_decompose(const Matrix& a);

// ||A||_p. p finite: (sum s_j^p)^(1/p); p = inf: s_1. Zero matrix -> 0.
double schatten_norm(const Matrix& a, const SchattenIndex& p);

// Largest singular value.
double operator_norm(const Matrix& a);

Complex trace(const Matrix& a);

// Matrix product; inner dimensions must match.
Matrix compose(const Matrix& a, const Matrix& b);

// Conjugate transpose.
Matrix adjoint(const Matrix& a);

// Splits a hermitian matrix into positive/negative parts via its spectral
// decomposition. Gate: hermitian to tol::hermitian.
HermitianSplit positive_negative_parts(const Matrix& a);

// Leading n x n compression wrt the first n columns b_1..b_n of `basis`:
// block(i, j) = <b_i, A b_j>. Gate: those columns orthonormal.
Matrix cut_out_block(const Matrix& a, const Matrix& basis, int n);

// Pi_k A Pi_k at full size, Pi_k the orthogonal projection onto the span of
// the first k columns of `basis`.
Matrix truncate_projection(const Matrix& a, const Matrix& basis, int k);

// `a` embedded in the top-left corner of a rows x cols zero matrix.
Matrix zero_pad(const Matrix& a, int rows, int cols);

bool is_hermitian(const Matrix& a, double eps = tol::hermitian);
bool is_normal(const Matrix& a, double eps = tol::normal);
bool is_unitary(const Matrix& u, double eps = tol::unitary);

// Columns of the first n of `basis` pairwise orthonormal to eps.
bool has_orthonormal_columns(const Matrix& basis, int n,
                             double eps = tol::orthonormal);

}  // namespace core
}  // namespace schatten
