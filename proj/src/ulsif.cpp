#include "qcpd/ulsif.hpp"

#include "qcpd/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace qcpd {

namespace {

/// Kernel design matrix: K(i, j) = rbf(samples.row(i), centers.row(j), l).
Eigen::MatrixXd kernel_matrix(const Eigen::MatrixXd& samples, const Eigen::MatrixXd& centers,
                              double l) {
    const Eigen::Index n = samples.rows();
    const Eigen::Index m = centers.rows();
    Eigen::MatrixXd sqdist(n, m);
    sqdist = -2.0 * samples * centers.transpose();
    sqdist.colwise() += samples.rowwise().squaredNorm();
    sqdist.rowwise() += centers.rowwise().squaredNorm().transpose();
    return (sqdist.array().max(0.0) * (-0.5 / (l * l))).exp();
}

Eigen::MatrixXd select_centers(const Eigen::MatrixXd& samples_p, const UlsifConfig& cfg) {
    const Eigen::Index n = samples_p.rows();
    const Eigen::Index m = cfg.num_basis < 0 ? n : cfg.num_basis;
    if (m < 1) throw std::invalid_argument("ulsif: num_basis must be >= 1");
    if (m > n) throw std::invalid_argument("ulsif: num_basis exceeds p-side sample count");
    if (std::holds_alternative<FirstM>(cfg.center_strategy)) return samples_p.topRows(m);
    const auto& indices = std::get<IndexList>(cfg.center_strategy).indices;
    if (static_cast<Eigen::Index>(indices.size()) != m)
        throw std::invalid_argument("ulsif: index list length does not match num_basis");
    Eigen::MatrixXd centers(m, samples_p.cols());
    for (Eigen::Index j = 0; j < m; ++j) {
        if (indices[static_cast<std::size_t>(j)] < 0 || indices[static_cast<std::size_t>(j)] >= n)
            throw std::invalid_argument("ulsif: center index out of range");
        centers.row(j) = samples_p.row(indices[static_cast<std::size_t>(j)]);
    }
    return centers;
}

}  // namespace

double rbf(const Eigen::VectorXd& x, const Eigen::VectorXd& c, double l) {
    if (x.size() != c.size()) throw std::invalid_argument("rbf: dimension mismatch");
    if (!(l > 0)) throw std::invalid_argument("rbf: scale must be positive");
    return std::exp(-(x - c).squaredNorm() / (2.0 * l * l));
}

UlsifModel fit(const Eigen::MatrixXd& samples_p, const Eigen::MatrixXd& samples_q,
               const UlsifConfig& cfg) {
    if (samples_p.rows() < 1 || samples_q.rows() < 1)
        throw std::invalid_argument("ulsif: empty sample set");
    if (samples_p.cols() != samples_q.cols())
        throw std::invalid_argument("ulsif: sample dimensions differ");
    if (!(cfg.scale > 0)) throw std::invalid_argument("ulsif: scale must be positive");
    if (!(cfg.regularization > 0)) throw std::invalid_argument("ulsif: lambda must be positive");

    const Eigen::MatrixXd centers = select_centers(samples_p, cfg);
    const Eigen::Index m = centers.rows();

    const Eigen::MatrixXd k_q = kernel_matrix(samples_q, centers, cfg.scale);
    const Eigen::MatrixXd k_p = kernel_matrix(samples_p, centers, cfg.scale);
    const Eigen::MatrixXd big_h =
        (k_q.transpose() * k_q) / static_cast<double>(samples_q.rows());
    const Eigen::VectorXd small_h = k_p.colwise().mean();
    if (!big_h.allFinite() || !small_h.allFinite())
        throw NumericError("ulsif: non-finite kernel sums");

    Eigen::MatrixXd system = big_h;
    system.diagonal().array() += cfg.regularization;
    Eigen::LDLT<Eigen::MatrixXd> solver(system);
    Eigen::VectorXd alpha = solver.solve(small_h);
    // One step of iterative refinement keeps the residual comfortably under
    // the 1e-8 contract even for ill-scaled kernel sums.
    alpha += solver.solve(small_h - system * alpha);

    UlsifModel model;
    model.centers = centers;
    model.scale = cfg.scale;
    model.alpha_pre = alpha;
    model.alpha = alpha.cwiseMax(0.0);
    return model;
}

double evaluate(const UlsifModel& model, const Eigen::VectorXd& x) {
    if (x.size() != model.centers.cols())
        throw std::invalid_argument("ulsif: evaluation point dimension mismatch");
    double acc = 0.0;
    for (Eigen::Index j = 0; j < model.centers.rows(); ++j)
        acc += model.alpha(j) * rbf(x, model.centers.row(j), model.scale);
    return acc;
}

double estimate_pe(const UlsifModel& model, const Eigen::MatrixXd& samples_p) {
    const Eigen::Index n = samples_p.rows();
    if (n < 1) throw std::invalid_argument("ulsif: empty sample set");
    double acc = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) acc += evaluate(model, samples_p.row(i));
    return 0.5 * acc / static_cast<double>(n) - 0.5;
}

}  // namespace qcpd
