#include "schatten/spectra.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace schatten {

RankModel RankModel::finite_kernel(int k) {
    if (k < 0)
        throw std::invalid_argument("finite_kernel: kernel dimension < 0");
    return {Kind::FiniteKernel, k};
}

std::string RankModel::tag() const {
    switch (kind) {
        case Kind::FiniteRank:
            return "finite_rank";
        case Kind::FiniteKernel:
            return "finite_kernel:" + std::to_string(kernel_dim);
        case Kind::InterleavedZeros:
            return "interleave";
    }
    throw std::invalid_argument("RankModel: bad kind");
}

RankModel RankModel::from_tag(const std::string& tag) {
    if (tag == "finite_rank") return finite_rank();
    if (tag == "interleave") return interleaved();
    const std::string prefix = "finite_kernel:";
    if (tag.rfind(prefix, 0) == 0) {
        std::size_t pos = 0;
        int k = 0;
        const std::string digits = tag.substr(prefix.size());
        try {
            k = std::stoi(digits, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("RankModel: bad tag '" + tag + "'");
        }
        if (pos != digits.size() || k < 0)
            throw std::invalid_argument("RankModel: bad tag '" + tag + "'");
        return finite_kernel(k);
    }
    throw std::invalid_argument("RankModel: bad tag '" + tag + "'");
}

namespace spectra {

namespace {

bool canonical_less(const Complex& a, const Complex& b) {
    double ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma > mb;
    return std::arg(a) < std::arg(b);
}

}  // namespace

void canonical_sort(std::vector<Complex>& values) {
    // stable so clamped zeros keep their relative order at the tail
    std::stable_sort(values.begin(), values.end(), [](const Complex& a,
                                                      const Complex& b) {
        bool za = (a == Complex(0.0, 0.0));
        bool zb = (b == Complex(0.0, 0.0));
        if (za != zb) return zb;  // nonzeros first
        if (za && zb) return false;
        return canonical_less(a, b);
    });
}

EigenDecomposition eigen_decompose_normal(const Matrix& t) {
    if (t.rows() != t.cols())
        throw ShapeMismatch("eigen_decompose_normal: matrix must be square");
    if (!core::is_normal(t))
        throw NotNormal("eigen_decompose_normal: commutator norm above gate");

    Eigen::ComplexSchur<Matrix> schur(t, /*computeU=*/true);
    if (schur.info() != Eigen::Success)
        throw DecompositionFailure(
            "eigen_decompose_normal: Schur iteration did not converge");

    Matrix diag = schur.matrixT();
    Matrix frame = schur.matrixU();
    // a normal matrix has diagonal Schur form; borderline near-normal inputs
    // that pass the commutator gate but triangularize with visible
    // off-diagonal mass are rejected, keeping the reconstruction contract
    Matrix off = diag;
    off.diagonal().setZero();
    if (off.cwiseAbs().maxCoeff() > tol::diag_residual)
        throw NotNormal(
            "eigen_decompose_normal: Schur form not diagonal to tolerance");

    const Eigen::Index n = t.rows();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    Vector raw = diag.diagonal();
    double top = raw.cwiseAbs().maxCoeff();
    double floor = tol::rank_clamp * top;
    std::vector<Complex> vals(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        Complex v = raw(j);
        vals[j] = (std::abs(v) <= floor) ? Complex(0.0, 0.0) : v;
    }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        bool za = (vals[a] == Complex(0.0, 0.0));
        bool zb = (vals[b] == Complex(0.0, 0.0));
        if (za != zb) return zb;
        if (za && zb) return false;
        return canonical_less(vals[a], vals[b]);
    });

    EigenDecomposition out;
    out.sequence.values.resize(n);
    out.basis.resize(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        out.sequence.values[j] = vals[order[j]];
        out.basis.col(j) = frame.col(order[j]);
    }
    out.sequence.model = RankModel::finite_rank();
    return out;
}

EigenSequence modified_sequence(const std::vector<Complex>& nonzero,
                                const RankModel& model, int length) {
    for (const Complex& v : nonzero)
        if (v == Complex(0.0, 0.0))
            throw std::invalid_argument(
                "modified_sequence: nonzero list contains a zero");
    for (std::size_t j = 1; j < nonzero.size(); ++j)
        if (std::abs(nonzero[j]) > std::abs(nonzero[j - 1]))
            throw std::invalid_argument(
                "modified_sequence: values not sorted by modulus");
    if (length < 1)
        throw std::invalid_argument("modified_sequence: length must be >= 1");

    const int r = static_cast<int>(nonzero.size());
    int required = r;
    switch (model.kind) {
        case RankModel::Kind::FiniteRank:
            required = r;
            break;
        case RankModel::Kind::FiniteKernel:
            required = r + model.kernel_dim;
            break;
        case RankModel::Kind::InterleavedZeros:
            required = 2 * r;
            break;
    }
    if (length < required)
        throw LengthTooSmall("modified_sequence: length " +
                             std::to_string(length) + " cannot hold " +
                             std::to_string(required) + " mandatory entries");

    EigenSequence out;
    out.model = model;
    out.values.assign(length, Complex(0.0, 0.0));
    switch (model.kind) {
        case RankModel::Kind::FiniteRank:
            for (int j = 0; j < r; ++j) out.values[j] = nonzero[j];
            break;
        case RankModel::Kind::FiniteKernel:
            for (int j = 0; j < r; ++j)
                out.values[model.kernel_dim + j] = nonzero[j];
            break;
        case RankModel::Kind::InterleavedZeros:
            for (int j = 0; j < r; ++j) out.values[2 * j + 1] = nonzero[j];
            break;
    }
    return out;
}

CSpectrumSample c_spectrum(const EigenSequence& c_values,
                           const EigenSequence& t_values, SpectrumMode mode,
                           int budget, std::uint64_t seed) {
    const int n = c_values.size();
    if (n != t_values.size())
        throw ShapeMismatch("c_spectrum: sequence lengths differ (" +
                            std::to_string(n) + " vs " +
                            std::to_string(t_values.size()) + ")");
    if (n == 0) throw ShapeMismatch("c_spectrum: empty sequences");

    std::vector<Complex> points;
    auto pairing = [&](const std::vector<int>& perm) {
        Complex acc(0.0, 0.0);
        for (int j = 0; j < n; ++j)
            acc += c_values.values[j] * t_values.values[perm[j]];
        return acc;
    };

    CSpectrumSample out;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    if (mode == SpectrumMode::Exhaustive) {
        if (n > 8)
            throw TooLargeForExhaustive(
                "c_spectrum: exhaustive mode capped at n = 8, got " +
                std::to_string(n));
        do {
            points.push_back(pairing(perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
        out.exhaustive = true;
    } else {
        if (budget < 1)
            throw std::invalid_argument("c_spectrum: budget must be >= 1");
        std::mt19937_64 rng(seed);
        points.reserve(budget);
        for (int k = 0; k < budget; ++k) {
            std::shuffle(perm.begin(), perm.end(), rng);
            points.push_back(pairing(perm));
        }
        out.exhaustive = false;
    }

    // dedup to 1e-12: sort by (re, im), then cluster against the last kept
    std::sort(points.begin(), points.end(), [](const Complex& a,
                                               const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    constexpr double kDedup = 1e-12;
    for (const Complex& z : points) {
        if (out.points.empty() || std::abs(z - out.points.back()) > kDedup)
            out.points.push_back(z);
    }
    return out;
}

double descending_pairing(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end(), std::greater<double>());
    std::sort(b.begin(), b.end(), std::greater<double>());
    const std::size_t n = std::min(a.size(), b.size());
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += a[j] * b[j];
    return acc;
}

HermitianExtremes hermitian_orbit_extremes(const Matrix& c, const Matrix& t) {
    if (!core::is_hermitian(c))
        throw NotHermitian("hermitian_orbit_extremes: c not hermitian");
    if (!core::is_hermitian(t))
        throw NotHermitian("hermitian_orbit_extremes: t not hermitian");

    auto eigenvalues = [](const Matrix& m) {
        Eigen::SelfAdjointEigenSolver<Matrix> es((m + m.adjoint()) / 2.0);
        if (es.info() != Eigen::Success)
            throw DecompositionFailure(
                "hermitian_orbit_extremes: eigensolver did not converge");
        return es.eigenvalues();
    };
    RealVector lc = eigenvalues(c);
    RealVector lt = eigenvalues(t);

    std::vector<double> c_pos, c_neg, t_pos, t_neg;
    for (Eigen::Index j = 0; j < lc.size(); ++j) {
        if (lc(j) > 0) c_pos.push_back(lc(j));
        if (lc(j) < 0) c_neg.push_back(-lc(j));
    }
    for (Eigen::Index j = 0; j < lt.size(); ++j) {
        if (lt(j) > 0) t_pos.push_back(lt(j));
        if (lt(j) < 0) t_neg.push_back(-lt(j));
    }

    HermitianExtremes out;
    out.max = descending_pairing(c_pos, t_pos) +
              descending_pairing(c_neg, t_neg);
    out.min = -descending_pairing(c_pos, t_neg) -
              descending_pairing(c_neg, t_pos);
    return out;
}

Complex scaled_diagonal_sum(const Matrix& c, const Matrix& basis, int n,
                            const SchattenIndex& q) {
    if (c.rows() != c.cols())
        throw ShapeMismatch("scaled_diagonal_sum: c must be square");
    if (n < 1)
        throw std::invalid_argument("scaled_diagonal_sum: n must be >= 1");
    if (basis.rows() != c.rows() || basis.cols() < n)
        throw ShapeMismatch("scaled_diagonal_sum: basis must be " +
                            std::to_string(c.rows()) + " x >=" +
                            std::to_string(n));
    if (q.is_inf())
        throw std::invalid_argument("scaled_diagonal_sum: q must be finite");
    if (!core::has_orthonormal_columns(basis, n))
        throw std::invalid_argument(
            "scaled_diagonal_sum: first n basis columns not orthonormal");

    Complex acc(0.0, 0.0);
    for (int k = 0; k < n; ++k) {
        Vector bk = basis.col(k);
        acc += bk.dot(c * bk);  // Eigen dot conjugates the left argument
    }
    return std::pow(static_cast<double>(n), -1.0 / q.value()) * acc;
}

}  // namespace spectra
}  // namespace schatten
