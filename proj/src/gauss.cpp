#include "rosym/detail/gauss.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <stdexcept>

#include "rosym/common.hpp"

namespace rosym::detail {

namespace {

std::pair<std::vector<double>, std::vector<double>> compute_gauss_legendre(int order) {
    if (order < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    std::vector<double> x(order), w(order);
    for (int i = 0; i < order; ++i) {
        double t = std::cos(kPi * (i + 0.75) / (order + 0.5));
        double dp = 0;
        for (int it = 0; it < 100; ++it) {
            // Legendre recurrence for P_order(t) and its derivative.
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= order; ++k) {
                double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (t * p1 - p0) / (t * t - 1.0);
            double dt = p1 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        x[order - 1 - i] = t;
        w[order - 1 - i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
    return {x, w};
}

}  // namespace

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int order) {
    static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_gauss_legendre(order)).first;
    return it->second;
}

std::pair<std::vector<double>, std::vector<double>> gauss_gegenbauer(int order, double alpha) {
    if (order < 1) throw std::invalid_argument("gauss_gegenbauer: order must be >= 1");
    if (alpha <= -1) throw std::invalid_argument("gauss_gegenbauer: alpha must be > -1");

    // mu0 = int_{-1}^{1} (1-t^2)^alpha dt
    double mu0 = std::sqrt(kPi) * std::exp(std::lgamma(alpha + 1.0) - std::lgamma(alpha + 1.5));

    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(order, order);
    for (int k = 1; k < order; ++k) {
        double num = k * (k + 2.0 * alpha);
        double den = (2.0 * k + 2.0 * alpha - 1.0) * (2.0 * k + 2.0 * alpha + 1.0);
        double b = std::sqrt(num / den);
        jac(k, k - 1) = b;
        jac(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
    std::vector<double> x(order), w(order);
    for (int i = 0; i < order; ++i) {
        x[i] = es.eigenvalues()[i];
        double v0 = es.eigenvectors()(0, i);
        w[i] = mu0 * v0 * v0;
    }
    return {x, w};
}

}  // namespace rosym::detail
