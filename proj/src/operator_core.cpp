#include "schatten/operator_core.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <thread>

namespace schatten {

namespace util {

std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << v;
    return os.str();
}

int thread_count() {
    if (const char* env = std::getenv("SCHATTEN_THREADS")) {
        char* end = nullptr;
        long n = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && n > 0) return static_cast<int>(n);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(int n, const std::function<void(int)>& body) {
    if (n <= 0) return;
    int workers = std::min(thread_count(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    int chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        int lo = w * chunk;
        int hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] {
            for (int i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace util

SchattenIndex::SchattenIndex(double p) : p_(p), inf_(false) {
    if (std::isinf(p) && p > 0) {
        inf_ = true;
        p_ = std::numeric_limits<double>::infinity();
        return;
    }
    if (!(p >= 1.0) || std::isnan(p))
        throw std::invalid_argument("Schatten index requires p >= 1");
}

SchattenIndex SchattenIndex::inf() { return SchattenIndex(); }

SchattenIndex SchattenIndex::conjugate() const {
    if (inf_) return SchattenIndex(1.0);
    if (p_ == 1.0) return inf();
    return SchattenIndex(p_ / (p_ - 1.0));
}

Matrix SchmidtForm::reconstruct() const {
    return left_frame * singular_values.asDiagonal() * right_frame.adjoint();
}

int SchmidtForm::rank() const {
    if (singular_values.size() == 0) return 0;
    double floor = tol::rank_clamp * singular_values(0);
    int r = 0;
    for (Eigen::Index j = 0; j < singular_values.size(); ++j)
        if (singular_values(j) > floor) ++r;
    return r;
}

namespace core {

namespace {

void require_square(const Matrix& a, const char* who) {
    if (a.rows() != a.cols())
        throw ShapeMismatch(std::string(who) + ": matrix must be square, got " +
                            std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()));
}

}  // namespace

SchmidtForm schmidt_decompose(const Matrix& a) {
    if (a.size() == 0) throw ShapeMismatch("schmidt_decompose: empty matrix");
    Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.info() != Eigen::Success)
        throw DecompositionFailure("schmidt_decompose: SVD did not converge");
    SchmidtForm form;
    form.singular_values = svd.singularValues();
    form.left_frame = svd.matrixU();
    form.right_frame = svd.matrixV();
    double floor = form.singular_values.size() > 0
                       ? tol::rank_clamp * form.singular_values(0)
                       : 0.0;
    for (Eigen::Index j = 0; j < form.singular_values.size(); ++j)
        if (form.singular_values(j) <= floor) form.singular_values(j) = 0.0;
    return form;
}

double schatten_norm(const Matrix& a, const SchattenIndex& p) {
    if (a.size() == 0) throw ShapeMismatch("schatten_norm: empty matrix");
    Eigen::JacobiSVD<Matrix> svd(a);
    if (svd.info() != Eigen::Success)
        throw DecompositionFailure("schatten_norm: SVD did not converge");
    const RealVector& s = svd.singularValues();
    if (s.size() == 0) return 0.0;
    if (p.is_inf()) return s(0);
    if (p.value() == 1.0) return s.sum();
    if (p.value() == 2.0) return s.norm();
    if (s(0) == 0.0) return 0.0;
    // factor out s_1 so the powers stay in [0, 1]
    double acc = 0.0;
    for (Eigen::Index j = 0; j < s.size(); ++j)
        acc += std::pow(s(j) / s(0), p.value());
    return s(0) * std::pow(acc, 1.0 / p.value());
}

double operator_norm(const Matrix& a) {
    return schatten_norm(a, SchattenIndex::inf());
}

Complex trace(const Matrix& a) {
    require_square(a, "trace");
    return a.trace();
}

Matrix compose(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw ShapeMismatch("compose: inner dimensions " +
                            std::to_string(a.cols()) + " vs " +
                            std::to_string(b.rows()));
    return a * b;
}

Matrix adjoint(const Matrix& a) { return a.adjoint(); }

HermitianSplit positive_negative_parts(const Matrix& a) {
    require_square(a, "positive_negative_parts");
    if (!is_hermitian(a))
        throw NotHermitian("positive_negative_parts: input not hermitian");
    Matrix h = (a + a.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    if (es.info() != Eigen::Success)
        throw DecompositionFailure(
            "positive_negative_parts: eigensolver did not converge");
    RealVector pos = es.eigenvalues().cwiseMax(0.0);
    RealVector neg = (-es.eigenvalues()).cwiseMax(0.0);
    HermitianSplit split;
    const Matrix& v = es.eigenvectors();
    split.positive_part = v * pos.asDiagonal() * v.adjoint();
    split.negative_part = v * neg.asDiagonal() * v.adjoint();
    return split;
}

Matrix cut_out_block(const Matrix& a, const Matrix& basis, int n) {
    require_square(a, "cut_out_block");
    if (n < 1)
        throw std::invalid_argument("cut_out_block: n must be positive");
    if (basis.rows() != a.rows() || basis.cols() < n)
        throw ShapeMismatch("cut_out_block: basis must be " +
                            std::to_string(a.rows()) + " x >=" +
                            std::to_string(n));
    if (!has_orthonormal_columns(basis, n))
        throw std::invalid_argument(
            "cut_out_block: first n basis columns not orthonormal");
    Matrix bn = basis.leftCols(n);
    return bn.adjoint() * a * bn;
}

Matrix truncate_projection(const Matrix& a, const Matrix& basis, int k) {
    require_square(a, "truncate_projection");
    if (k < 1)
        throw std::invalid_argument("truncate_projection: k must be positive");
    if (basis.rows() != a.rows() || basis.cols() < k)
        throw ShapeMismatch("truncate_projection: basis must be " +
                            std::to_string(a.rows()) + " x >=" +
                            std::to_string(k));
    if (!has_orthonormal_columns(basis, k))
        throw std::invalid_argument(
            "truncate_projection: first k basis columns not orthonormal");
    Matrix bk = basis.leftCols(k);
    Matrix proj = bk * bk.adjoint();
    return proj * a * proj;
}

Matrix zero_pad(const Matrix& a, int rows, int cols) {
    if (rows < a.rows() || cols < a.cols())
        throw ShapeMismatch("zero_pad: target smaller than source");
    Matrix out = Matrix::Zero(rows, cols);
    out.topLeftCorner(a.rows(), a.cols()) = a;
    return out;
}

bool is_hermitian(const Matrix& a, double eps) {
    if (a.rows() != a.cols()) return false;
    return (a - a.adjoint()).cwiseAbs().maxCoeff() <= eps;
}

bool is_normal(const Matrix& a, double eps) {
    if (a.rows() != a.cols()) return false;
    Matrix comm = a.adjoint() * a - a * a.adjoint();
    return operator_norm(comm) <= eps;
}

bool is_unitary(const Matrix& u, double eps) {
    if (u.rows() != u.cols()) return false;
    Matrix gram = u.adjoint() * u;
    gram -= Matrix::Identity(u.rows(), u.cols());
    return gram.cwiseAbs().maxCoeff() <= eps;
}

bool has_orthonormal_columns(const Matrix& basis, int n, double eps) {
    if (n < 0 || basis.cols() < n) return false;
    Matrix bn = basis.leftCols(n);
    Matrix gram = bn.adjoint() * bn;
    gram -= Matrix::Identity(n, n);
    return gram.cwiseAbs().maxCoeff() <= eps;
}

}  // namespace core
}  // namespace schatten
