#ifndef QCPD_ULSIF_HPP
#define QCPD_ULSIF_HPP

#include <Eigen/Dense>
#include <variant>
#include <vector>

namespace qcpd {

/// Kernel centers come either from the first m samples of the p-side set
/// (time order) or from an explicit index list into it.
struct FirstM {};
struct IndexList {
    std::vector<Eigen::Index> indices;
};
using CenterStrategy = std::variant<FirstM, IndexList>;

struct UlsifConfig {
    double scale = 1.0;            // RBF scale l
    double regularization = 0.1;   // lambda
    Eigen::Index num_basis = -1;   // m; -1 means "all" (every p-side sample)
    CenterStrategy center_strategy = FirstM{};
};

/// Fitted density-ratio model g(x) = sum_j alpha_j exp(-|x-c_j|^2 / (2 l^2))
/// with alpha >= 0 after truncation.
struct UlsifModel {
    Eigen::MatrixXd centers;  // m x d
    double scale = 1.0;
    Eigen::VectorXd alpha;      // truncated, >= 0
    Eigen::VectorXd alpha_pre;  // analytic minimizer before truncation
};

/// Gaussian RBF kernel exp(-|x-c|^2 / (2 l^2)).
double rbf(const Eigen::VectorXd& x, const Eigen::VectorXd& c, double l);

/// Least-squares fit of the ratio p/q from samples (rows of each matrix):
/// solves (H + lambda I) alpha = h for the empirical moment matrices and
/// truncates negative coefficients.
UlsifModel fit(const Eigen::MatrixXd& samples_p, const Eigen::MatrixXd& samples_q,
               const UlsifConfig& cfg);

double evaluate(const UlsifModel& model, const Eigen::VectorXd& x);

/// Plug-in Pearson divergence estimate (1/2n) sum_i g(x_i) - 1/2 over the
/// p-side samples; bounded below by -1/2.
double estimate_pe(const UlsifModel& model, const Eigen::MatrixXd& samples_p);

}  // namespace qcpd

#endif
