#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "schatten/operator_core.hpp"

namespace schatten {

// Padding rule attached to an eigenvalue list: where the zero eigenvalues of
// the underlying operator sit relative to the listed nonzero ones.
struct RankModel {
    enum class Kind {
        FiniteRank,      // values first, zeros fill the tail
        FiniteKernel,    // kernel_dim leading zeros, then values, then tail
        InterleavedZeros // one zero before each value, remainder appended
    };

    Kind kind = Kind::FiniteRank;
    int kernel_dim = 0;  // meaningful only for FiniteKernel

    static RankModel finite_rank() { return {Kind::FiniteRank, 0}; }
    static RankModel finite_kernel(int k);
    static RankModel interleaved() { return {Kind::InterleavedZeros, 0}; }

    // "finite_rank" | "finite_kernel:<k>" | "interleave"
    std::string tag() const;
    static RankModel from_tag(const std::string& tag);

    bool operator==(const RankModel& o) const {
        return kind == o.kind && kernel_dim == o.kernel_dim;
    }
};

// A finite window of an operator's eigenvalue sequence, ordered by
// non-increasing modulus with zeros placed according to the rank model.
struct EigenSequence {
    std::vector<Complex> values;
    RankModel model;

    int size() const { return static_cast<int>(values.size()); }
};

// Eigenvalue sequence of a normal matrix together with the diagonalizing
// frame: column j of `basis` is the eigenvector for sequence entry j.
struct EigenDecomposition {
    EigenSequence sequence;
    Matrix basis;
};

// Pairing sums sum_j c_j * t_sigma(j); exhaustive = every permutation visited.
struct CSpectrumSample {
    std::vector<Complex> points;
    bool exhaustive = false;
};

enum class SpectrumMode { Exhaustive, Sampled };

// Hermitian orbit extremes per the positive/negative-part pairing formulas.
struct HermitianExtremes {
    double max = 0.0;
    double min = 0.0;
};

namespace spectra {

// Canonical ordering used everywhere: non-increasing modulus, ties broken by
// increasing principal argument, zeros last (original order preserved).
void canonical_sort(std::vector<Complex>& values);

// Diagonalizes a normal matrix. Gates: commutator norm <= tol::normal and
// Schur form diagonal to tol::diag_residual (borderline near-normal inputs
// are rejected so the reconstruction postcondition always holds). Entries of
// modulus below tol::rank_clamp * max-modulus are clamped to exact zero.
EigenDecomposition eigen_decompose_normal(const Matrix& t);

// Builds the modified sequence of `length` entries from the nonzero
// eigenvalues and the padding rule. `nonzero` must be sorted by
// non-increasing modulus, zero-free, and short enough for the rule to fit
// (finite rank: length >= r; finite kernel k: length >= r + k;
// interleave: length >= 2r).
EigenSequence modified_sequence(const std::vector<Complex>& nonzero,
                                const RankModel& model, int length);

// Pairing sums over permutations of the T side. Exhaustive mode enumerates
// all n! permutations (n <= 8); sampled mode draws `budget` uniformly seeded
// permutations. Points are deduplicated to 1e-12.
CSpectrumSample c_spectrum(const EigenSequence& c_values,
                           const EigenSequence& t_values, SpectrumMode mode,
                           int budget = 20000, std::uint64_t seed = 42);

// max / min of tr(C U* T U) over the unitary orbit closure, evaluated by the
// sorted pairings of positive and negative parts. Gate: both hermitian.
HermitianExtremes hermitian_orbit_extremes(const Matrix& c, const Matrix& t);

// n^(-1/q) * sum_{k<n} <b_k, C b_k> for the first n columns of `basis`.
// q must be finite.
Complex scaled_diagonal_sum(const Matrix& c, const Matrix& basis, int n,
                            const SchattenIndex& q);

// Sorted pairing helpers shared by the extremes formulas and the oracles.
// Both take unsorted real lists; they sort copies non-increasingly.
double descending_pairing(std::vector<double> a, std::vector<double> b);

}  // namespace spectra
}  // namespace schatten
