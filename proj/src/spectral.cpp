// Floating-point tier of the regularity check. Nothing here feeds an exact
// field; results are reported separately and flagged as numerical.

#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "quiver/dimvec.hpp"

namespace quiver {

namespace {

double inf_norm(const Eigen::VectorXd& v) { return v.cwiseAbs().maxCoeff(); }
double inf_norm(const Eigen::MatrixXd& m) { return m.cwiseAbs().rowwise().sum().maxCoeff(); }

// Index of the eigenvalue of largest modulus, and the largest modulus among
// the others.
std::pair<Index, double> dominant(const Eigen::VectorXcd& values) {
    Index best = 0;
    for (Index k = 1; k < values.size(); ++k)
        if (std::abs(values(k)) > std::abs(values(best))) best = k;
    double second = 0;
    for (Index k = 0; k < values.size(); ++k)
        if (k != best) second = std::max(second, std::abs(values(k)));
    return {best, second};
}

} // namespace

std::optional<SpectralBound> spectral_tail_bound(const IntMatrix& step, const DimVector& y_exact) {
    const Index n = step.rows();
    if (n == 0 || y_exact.size() != n) return std::nullopt;

    Eigen::MatrixXd a(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) a(i, j) = step(i, j).convert_to<double>();

    Eigen::EigenSolver<Eigen::MatrixXd> right(a);
    if (right.info() != Eigen::Success) return std::nullopt;
    const auto [k, second] = dominant(right.eigenvalues());
    const std::complex<double> lambda = right.eigenvalues()(k);
    const double rho = lambda.real();
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (std::abs(lambda.imag()) > 1e-9 * rho || rho <= 1.0 + 1e-9 || second >= rho * (1.0 - 1e-9))
        return std::nullopt;

    Eigen::VectorXd v = right.eigenvectors().col(k).real();
    if (v.sum() < 0) v = -v;
    v /= inf_norm(v);
    if (v.minCoeff() <= 0) return std::nullopt;

    Eigen::EigenSolver<Eigen::MatrixXd> left(a.transpose());
    if (left.info() != Eigen::Success) return std::nullopt;
    Index kl = 0;
    for (Index j = 1; j < n; ++j)
        if (std::abs(left.eigenvalues()(j) - rho) < std::abs(left.eigenvalues()(kl) - rho)) kl = j;
    Eigen::VectorXd u = left.eigenvectors().col(kl).real();
    const double uv = u.dot(v);
    if (std::abs(uv) < 1e-12 * inf_norm(u)) return std::nullopt;
    u /= uv;

    // Complement of the dominant eigenprojection, scaled by 1/rho.
    const Eigen::MatrixXd scaled = (a - rho * v * u.transpose()) / rho;

    int block = 0;
    Eigen::MatrixXd power = Eigen::MatrixXd::Identity(n, n);
    for (int s = 1; s <= 400; ++s) {
        power = scaled * power;
        if (inf_norm(power) <= 0.5) {
            block = s;
            break;
        }
    }
    if (block == 0) return std::nullopt;

    Eigen::VectorXd y(n);
    for (Index i = 0; i < n; ++i) y(i) = y_exact(i).convert_to<double>();
    const double y_norm = inf_norm(y);
    if (!(y_norm > 0) || !std::isfinite(y_norm)) return std::nullopt;
    y /= y_norm;

    SpectralBound bound;
    bound.rho = rho;
    bound.block = block;
    bound.coefficient = u.dot(y);
    bound.min_eigvec = v.minCoeff();
    Eigen::VectorXd tail = y;
    double tail_max = 0;
    for (int s = 1; s <= block; ++s) {
        tail = scaled * tail;
        tail_max = std::max(tail_max, inf_norm(tail));
    }
    bound.tail_bound = tail_max;
    bound.margin = bound.coefficient * bound.min_eigvec - tail_max;

    // Eigenpair residuals plus accumulated rounding over `block` products.
    const double res_v = inf_norm(Eigen::VectorXd(a * v - rho * v)) / rho;
    const double res_u = inf_norm(Eigen::VectorXd(a.transpose() * u - rho * u)) / rho;
    const double scale = 1.0 + std::abs(bound.coefficient) + tail_max + inf_norm(u);
    bound.error_radius =
        2.0 * block * (res_v + res_u) * scale + 64.0 * n * (block + 1) * eps * scale * (1.0 + inf_norm(a) / rho);
    if (bound.margin <= bound.error_radius) return std::nullopt;
    return bound;
}

} // namespace quiver
