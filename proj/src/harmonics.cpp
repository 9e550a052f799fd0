#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "rosym/perturbation.hpp"

namespace rosym {

double sphere_monomial_moment(int n, const std::array<uint8_t, kMaxDim>& exps) {
    int total = 0;
    for (int i = 0; i < n; ++i) {
        if (exps[static_cast<size_t>(i)] % 2 != 0) return 0.0;
        total += exps[static_cast<size_t>(i)];
    }
    double lg = -std::lgamma((n + total) / 2.0);
    for (int i = 0; i < n; ++i) lg += std::lgamma((exps[static_cast<size_t>(i)] + 1) / 2.0);
    return 2.0 * std::exp(lg);
}

HarmonicPoly::HarmonicPoly(int dim, int degree, int index, std::vector<Monomial> monomials)
    : dim_(dim), degree_(degree), index_(index), monomials_(std::move(monomials)) {}

double HarmonicPoly::eval(const double* x) const {
    double v = 0;
    for (const auto& m : monomials_) {
        double t = m.coeff;
        for (int i = 0; i < dim_; ++i) {
            int e = m.exp[static_cast<size_t>(i)];
            for (int k = 0; k < e; ++k) t *= x[i];
        }
        v += t;
    }
    return v;
}

void HarmonicPoly::gradient(const double* x, double* out) const {
    for (int i = 0; i < dim_; ++i) out[i] = 0;
    for (const auto& m : monomials_) {
        for (int i = 0; i < dim_; ++i) {
            int e = m.exp[static_cast<size_t>(i)];
            if (e == 0) continue;
            double dterm = m.coeff * e;
            for (int j = 0; j < dim_; ++j) {
                int ej = m.exp[static_cast<size_t>(j)];
                if (j == i) ej -= 1;
                for (int k = 0; k < ej; ++k) dterm *= x[j];
            }
            out[i] += dterm;
        }
    }
}

double HarmonicPoly::laplacian_residual() const {
    std::map<std::array<uint8_t, kMaxDim>, double> lap;
    double scale = 0;
    for (const auto& m : monomials_) {
        scale = std::max(scale, std::abs(m.coeff));
        for (int i = 0; i < dim_; ++i) {
            int e = m.exp[static_cast<size_t>(i)];
            if (e < 2) continue;
            auto key = m.exp;
            key[static_cast<size_t>(i)] = static_cast<uint8_t>(e - 2);
            lap[key] += m.coeff * e * (e - 1);
        }
    }
    double worst = 0;
    for (const auto& [k, c] : lap) worst = std::max(worst, std::abs(c));
    return scale > 0 ? worst / scale : 0.0;
}

namespace {

using Exps = std::array<uint8_t, kMaxDim>;

void enumerate_monomials(int dim, int degree, int pos, Exps& cur, std::vector<Exps>& out) {
    if (pos == dim - 1) {
        cur[static_cast<size_t>(pos)] = static_cast<uint8_t>(degree);
        out.push_back(cur);
        cur[static_cast<size_t>(pos)] = 0;
        return;
    }
    for (int e = degree; e >= 0; --e) {
        cur[static_cast<size_t>(pos)] = static_cast<uint8_t>(e);
        enumerate_monomials(dim, degree - e, pos + 1, cur, out);
    }
    cur[static_cast<size_t>(pos)] = 0;
}

std::vector<Exps> monomials_of_degree(int dim, int degree) {
    std::vector<Exps> out;
    Exps cur{};
    enumerate_monomials(dim, degree, 0, cur, out);
    return out;
}

std::vector<HarmonicPoly> build_degree_block(int dim, int degree, double sphere_measure) {
    std::vector<HarmonicPoly> block;
    if (degree == 0) {
        block.emplace_back(dim, 0, 0, std::vector<Monomial>{{1.0, Exps{}}});
        return block;
    }
    if (degree == 1) {
        for (int k = 0; k < dim; ++k) {
            Exps e{};
            e[static_cast<size_t>(k)] = 1;
            block.emplace_back(dim, 1, k, std::vector<Monomial>{{1.0, e}});
        }
        return block;
    }

    auto monos = monomials_of_degree(dim, degree);
    auto lower = monomials_of_degree(dim, degree - 2);
    std::map<Exps, int> lower_index;
    for (size_t i = 0; i < lower.size(); ++i) lower_index[lower[i]] = static_cast<int>(i);

    // Harmonicity as a linear constraint on the monomial coefficients.
    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(lower.size()),
                                                static_cast<Eigen::Index>(monos.size()));
    for (size_t c = 0; c < monos.size(); ++c) {
        for (int i = 0; i < dim; ++i) {
            int e = monos[c][static_cast<size_t>(i)];
            if (e < 2) continue;
            Exps key = monos[c];
            key[static_cast<size_t>(i)] = static_cast<uint8_t>(e - 2);
            lap(lower_index.at(key), static_cast<Eigen::Index>(c)) += e * (e - 1);
        }
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(lap);
    Eigen::MatrixXd kernel = lu.kernel();

    Eigen::MatrixXd gram(static_cast<Eigen::Index>(monos.size()),
                         static_cast<Eigen::Index>(monos.size()));
    for (size_t a = 0; a < monos.size(); ++a) {
        for (size_t b = a; b < monos.size(); ++b) {
            Exps sum{};
            for (int i = 0; i < dim; ++i)
                sum[static_cast<size_t>(i)] = static_cast<uint8_t>(
                    monos[a][static_cast<size_t>(i)] + monos[b][static_cast<size_t>(i)]);
            double m = sphere_monomial_moment(dim, sum);
            gram(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = m;
            gram(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(a)) = m;
        }
    }

    // Modified Gram-Schmidt (two passes) in the sphere inner product,
    // normalized to spherical mean square one.
    std::vector<Eigen::VectorXd> ortho;
    for (Eigen::Index c = 0; c < kernel.cols(); ++c) {
        Eigen::VectorXd v = kernel.col(c);
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& u : ortho) {
                double proj = u.dot(gram * v) / sphere_measure;
                v -= proj * u;
            }
        }
        double nrm_sq = v.dot(gram * v);
        if (nrm_sq <= 1e-24) continue;
        v *= std::sqrt(sphere_measure / nrm_sq);
        ortho.push_back(v);
    }

    for (size_t idx = 0; idx < ortho.size(); ++idx) {
        const auto& v = ortho[idx];
        double vmax = v.cwiseAbs().maxCoeff();
        std::vector<Monomial> ms;
        for (size_t c = 0; c < monos.size(); ++c) {
            double coef = v[static_cast<Eigen::Index>(c)];
            if (std::abs(coef) > 1e-14 * vmax) ms.push_back({coef, monos[c]});
        }
        block.emplace_back(dim, degree, static_cast<int>(idx), std::move(ms));
    }
    return block;
}

}  // namespace

HarmonicBasis::HarmonicBasis(int dim, int max_degree) : dim_(dim), max_degree_(max_degree) {
    double half_n = 0.5 * dim;
    double sphere_measure = dim * std::pow(kPi, half_n) / std::tgamma(half_n + 1.0);
    degree_offset_.assign(static_cast<size_t>(max_degree) + 2, 0);
    for (int j = 0; j <= max_degree; ++j) {
        degree_offset_[static_cast<size_t>(j)] = static_cast<int>(polys_.size());
        auto block = build_degree_block(dim, j, sphere_measure);
        for (auto& p : block) polys_.push_back(std::move(p));
    }
    degree_offset_[static_cast<size_t>(max_degree) + 1] = static_cast<int>(polys_.size());
}

int HarmonicBasis::degree_count(int degree) const {
    if (degree < 0 || degree > max_degree_) throw std::invalid_argument("degree out of range");
    return degree_offset_[static_cast<size_t>(degree) + 1] -
           degree_offset_[static_cast<size_t>(degree)];
}

int HarmonicBasis::flat_index(int degree, int index) const {
    if (degree < 0 || degree > max_degree_ || index < 0 || index >= degree_count(degree)) {
        std::ostringstream os;
        os << "harmonic basis: no element (degree=" << degree << ", index=" << index << ")";
        throw std::invalid_argument(os.str());
    }
    return degree_offset_[static_cast<size_t>(degree)] + index;
}

const HarmonicPoly& HarmonicBasis::element(int degree, int index) const {
    return polys_[static_cast<size_t>(flat_index(degree, index))];
}

std::shared_ptr<const HarmonicBasis> HarmonicBasis::get(int dim, int max_degree) {
    if (dim < 2 || dim > kMaxDim) throw std::invalid_argument("HarmonicBasis: dim must be in 2..16");
    if (max_degree < 0) throw std::invalid_argument("HarmonicBasis: max_degree must be >= 0");
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const HarmonicBasis>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(dim, max_degree);
    auto it = cache.find(key);
    if (it == cache.end()) {
        auto basis = std::shared_ptr<const HarmonicBasis>(new HarmonicBasis(dim, max_degree));
        it = cache.emplace(key, std::move(basis)).first;
    }
    return it->second;
}

}  // namespace rosym
