#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "rosym/perturbation.hpp"

namespace rosym {

namespace {

int default_grid(int n) { return n >= 12 ? 8192 : 4096; }

}  // namespace

namespace detail {

std::vector<VecN> quasi_uniform_grid(int n, int points) {
    // Deterministic normalized-Gaussian cloud; the seed is fixed so the grid
    // is part of the library contract.
    std::vector<VecN> grid;
    grid.reserve(static_cast<size_t>(points));
    Rng rng(0x5eedc1d0u ^ (static_cast<uint64_t>(n) << 32));
    while (static_cast<int>(grid.size()) < points) {
        VecN v = VecN::zero(n);
        double nrm = 0;
        for (int i = 0; i < n; ++i) {
            v[i] = rng.next_gaussian();
            nrm += v[i] * v[i];
        }
        if (nrm == 0) continue;
        v.scale(1.0 / std::sqrt(nrm));
        grid.push_back(v);
    }
    return grid;
}

std::vector<double> evaluate_at_nodes(const Perturbation& p, const SphereRule& rule) {
    std::vector<double> vals(static_cast<size_t>(rule.count()), 0.0);
    const auto& basis = p.basis();
    const auto& coeffs = p.coefficients();
    for (int i = 0; i < rule.count(); ++i) {
        const double* x = rule.node(i);
        double v = 0;
        for (int b = 0; b < basis.size(); ++b) {
            double c = coeffs[static_cast<size_t>(b)];
            if (c != 0.0) v += c * basis.element(b).eval(x);
        }
        vals[static_cast<size_t>(i)] = v;
    }
    return vals;
}

double graph_volume(const PhiPsiAnchor& anchor, double R, const std::vector<double>& vals,
                    const SphereRule& rule) {
    KahanSum sum;
    for (int i = 0; i < rule.count(); ++i) {
        double rbar = R * (1.0 + vals[static_cast<size_t>(i)]);
        if (!(rbar > 0.0))
            throw NonFiniteIntegrand("graph_volume: radial graph is not positive (rho <= -1)");
        sum.add(rule.weights[static_cast<size_t>(i)] * anchor.phi_at(rbar));
    }
    return sum.value();
}

VecN graph_barycenter(const PhiPsiAnchor& anchor, double R, const std::vector<double>& vals,
                      const SphereRule& rule) {
    int n = rule.dim;
    std::vector<KahanSum> sums(static_cast<size_t>(n));
    for (int i = 0; i < rule.count(); ++i) {
        double rbar = R * (1.0 + vals[static_cast<size_t>(i)]);
        if (!(rbar > 0.0))
            throw NonFiniteIntegrand("graph_barycenter: radial graph is not positive (rho <= -1)");
        double psi = anchor.psi_at(rbar);
        double w = rule.weights[static_cast<size_t>(i)];
        const double* x = rule.node(i);
        for (int k = 0; k < n; ++k) sums[static_cast<size_t>(k)].add(w * psi * x[k]);
    }
    VecN out = VecN::zero(n);
    for (int k = 0; k < n; ++k) out[k] = sums[static_cast<size_t>(k)].value();
    return out;
}

}  // namespace detail

Perturbation::Perturbation(SpaceSpec space, double R, std::shared_ptr<const HarmonicBasis> basis,
                           std::vector<double> coeffs)
    : space_(space), R_(R), basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
    if (R_ <= 0) throw std::invalid_argument("Perturbation: base radius must be > 0");
}

Perturbation::Perturbation(SpaceSpec space, double R, int band_limit)
    : Perturbation(space, R, HarmonicBasis::get(space.n, band_limit), {}) {
    coeffs_.assign(static_cast<size_t>(basis_->size()), 0.0);
}

Perturbation::Perturbation(SpaceSpec space, double R, int band_limit,
                           const std::vector<PerturbationTerm>& terms)
    : Perturbation(space, R, band_limit) {
    for (const auto& t : terms) coeffs_[static_cast<size_t>(basis_->flat_index(t.degree, t.index))] += t.coeff;
    check_admissible();
}

void Perturbation::check_admissible() const {
    if (min_value_on_grid() <= -1.0)
        throw std::invalid_argument("Perturbation: rho must stay above -1 (graph condition)");
}

double Perturbation::coefficient(int degree, int index) const {
    return coeffs_[static_cast<size_t>(basis_->flat_index(degree, index))];
}

std::vector<PerturbationTerm> Perturbation::terms() const {
    std::vector<PerturbationTerm> out;
    for (int j = 0; j <= basis_->max_degree(); ++j) {
        for (int i = 0; i < basis_->degree_count(j); ++i) {
            double c = coefficient(j, i);
            if (c != 0.0) out.push_back({j, i, c});
        }
    }
    return out;
}

bool Perturbation::is_zero() const {
    for (double c : coeffs_)
        if (c != 0.0) return false;
    return true;
}

Perturbation Perturbation::with_coefficients(std::vector<double> coeffs) const {
    if (coeffs.size() != coeffs_.size())
        throw std::invalid_argument("with_coefficients: wrong coefficient count");
    return Perturbation(space_, R_, basis_, std::move(coeffs));
}

Perturbation Perturbation::with_shift(double delta) const {
    auto coeffs = coeffs_;
    coeffs[static_cast<size_t>(basis_->flat_index(0, 0))] += delta;
    return Perturbation(space_, R_, basis_, std::move(coeffs));
}

Perturbation Perturbation::scaled(double factor) const {
    auto coeffs = coeffs_;
    for (double& c : coeffs) c *= factor;
    return Perturbation(space_, R_, basis_, std::move(coeffs));
}

double Perturbation::evaluate(const double* phi) const {
    double v = 0;
    for (int b = 0; b < basis_->size(); ++b) {
        double c = coeffs_[static_cast<size_t>(b)];
        if (c != 0.0) v += c * basis_->element(b).eval(phi);
    }
    return v;
}

VecN Perturbation::tangent_gradient(const VecN& phi) const {
    VecN out = VecN::zero(space_.n);
    double grad[kMaxDim];
    for (int b = 0; b < basis_->size(); ++b) {
        double c = coeffs_[static_cast<size_t>(b)];
        if (c == 0.0) continue;
        const auto& poly = basis_->element(b);
        poly.gradient(phi.a.data(), grad);
        double val = poly.eval(phi.a.data());
        // homogeneity: the radial derivative of a degree-j homogeneous
        // polynomial on the sphere equals j * poly
        double j = poly.degree();
        for (int i = 0; i < space_.n; ++i) out[i] += c * (grad[i] - j * val * phi[i]);
    }
    return out;
}

double Perturbation::c1_norm(int grid_points) const {
    if (grid_points == 0) grid_points = default_grid(space_.n);
    if (grid_points < 1000) throw std::invalid_argument("c1_norm: grid density must be >= 1000");
    const auto grid = detail::quasi_uniform_grid(space_.n, grid_points);
    double worst = 0;
    for (const auto& phi : grid) {
        double v = std::abs(evaluate(phi));
        double g = tangent_gradient(phi).norm();
        worst = std::max(worst, v + g);
    }
    return 1.05 * worst;
}

double Perturbation::min_value_on_grid(int grid_points) const {
    if (grid_points == 0) grid_points = default_grid(space_.n);
    const auto grid = detail::quasi_uniform_grid(space_.n, grid_points);
    double lo = std::numeric_limits<double>::infinity();
    for (const auto& phi : grid) lo = std::min(lo, evaluate(phi));
    return lo;
}

Perturbation Perturbation::rotated(const std::vector<double>& Q) const {
    int n = space_.n;
    if (static_cast<int>(Q.size()) != n * n)
        throw std::invalid_argument("rotated: Q must be n*n row-major");

    using Exps = std::array<uint8_t, kMaxDim>;
    std::map<Exps, double> acc;

    for (int b = 0; b < basis_->size(); ++b) {
        double c = coeffs_[static_cast<size_t>(b)];
        if (c == 0.0) continue;
        for (const auto& m : basis_->element(b).monomials()) {
            // expand prod_i (sum_j Q[i][j] x_j)^{e_i}
            std::map<Exps, double> poly;
            poly[Exps{}] = c * m.coeff;
            for (int i = 0; i < n; ++i) {
                int e = m.exp[static_cast<size_t>(i)];
                for (int rep = 0; rep < e; ++rep) {
                    std::map<Exps, double> next;
                    for (const auto& [ex, co] : poly) {
                        for (int j = 0; j < n; ++j) {
                            double q = Q[static_cast<size_t>(i) * n + j];
                            if (q == 0.0) continue;
                            Exps ex2 = ex;
                            ex2[static_cast<size_t>(j)] =
                                static_cast<uint8_t>(ex2[static_cast<size_t>(j)] + 1);
                            next[ex2] += co * q;
                        }
                    }
                    poly = std::move(next);
                }
            }
            for (const auto& [ex, co] : poly) acc[ex] += co;
        }
    }

    // Project the composed polynomial back onto the basis via exact sphere
    // moments. Q is orthogonal, so each degree block maps to itself.
    std::vector<double> coeffs(static_cast<size_t>(basis_->size()), 0.0);
    double measure = 0;
    {
        double half_n = 0.5 * n;
        measure = n * std::pow(kPi, half_n) / std::tgamma(half_n + 1.0);
    }
    for (int b = 0; b < basis_->size(); ++b) {
        const auto& poly = basis_->element(b);
        double inner = 0;
        for (const auto& [ex, co] : acc) {
            int deg = 0;
            for (int i = 0; i < n; ++i) deg += ex[static_cast<size_t>(i)];
            if (deg != poly.degree()) continue;
            for (const auto& pm : poly.monomials()) {
                Exps sum{};
                for (int i = 0; i < n; ++i)
                    sum[static_cast<size_t>(i)] =
                        static_cast<uint8_t>(ex[static_cast<size_t>(i)] + pm.exp[static_cast<size_t>(i)]);
                inner += co * pm.coeff * sphere_monomial_moment(n, sum);
            }
        }
        double self = 0;
        for (const auto& pa : poly.monomials()) {
            for (const auto& pb : poly.monomials()) {
                Exps sum{};
                for (int i = 0; i < n; ++i)
                    sum[static_cast<size_t>(i)] = static_cast<uint8_t>(
                        pa.exp[static_cast<size_t>(i)] + pb.exp[static_cast<size_t>(i)]);
                self += pa.coeff * pb.coeff * sphere_monomial_moment(n, sum);
            }
        }
        (void)measure;
        coeffs[static_cast<size_t>(b)] = inner / self;
    }
    return Perturbation(space_, R_, basis_, std::move(coeffs));
}

namespace {

struct VolumeSolve {
    double shift = 0;
    std::vector<double> vals;  // updated in place
};

// Solves for the degree-0 shift making the graph volume match the ball.
// vals are the current rho node values; on return they include the shift.
double solve_volume_shift(const RadialKernels& kernels, const PhiPsiAnchor& anchor, double R,
                          std::vector<double>& vals, const SphereRule& rule) {
    const double target = kernels.space().n * kernels.unit_ball_volume() * anchor.phi_base();
    const double tol = 1e-12 * target;

    auto defect = [&](double c) {
        KahanSum sum;
        for (size_t i = 0; i < vals.size(); ++i) {
            double rbar = R * (1.0 + vals[i] + c);
            if (!(rbar > 0.0)) throw NonFiniteIntegrand("volume_normalize: rho + c <= -1");
            sum.add(rule.weights[i] * anchor.phi_at(rbar));
        }
        return sum.value() - target;
    };
    auto defect_deriv = [&](double c) {
        KahanSum sum;
        for (size_t i = 0; i < vals.size(); ++i) {
            double rbar = R * (1.0 + vals[i] + c);
            sum.add(rule.weights[i] * kernels.phi_deriv(rbar, 1) * R);
        }
        return sum.value();
    };

    double min_rho = *std::min_element(vals.begin(), vals.end());
    double lo = -1.0 - min_rho + 1e-9;
    double hi = 1.0;
    double flo = defect(lo);
    double fhi = defect(hi);
    if (!(flo < 0.0) || !(fhi > 0.0))
        throw NormalizationFailure("volume_normalize: [" + std::to_string(lo) + ", 1] does not bracket the volume constraint");

    // a few bisection steps to localize, then Newton
    double c = 0.0;
    double fc = defect(c);
    if (fc > 0)
        hi = c;
    else
        lo = c;
    for (int it = 0; it < 120; ++it) {
        if (std::abs(fc) <= tol) break;
        double step = fc / defect_deriv(c);
        double cn = c - step;
        if (!(cn > lo) || !(cn < hi)) cn = 0.5 * (lo + hi);  // fall back to bisection
        c = cn;
        fc = defect(c);
        if (fc > 0)
            hi = c;
        else
            lo = c;
        if (it == 119)
            throw NormalizationFailure("volume_normalize: did not converge, defect " +
                                       std::to_string(fc));
    }
    for (double& v : vals) v += c;
    return c;
}

}  // namespace

Perturbation volume_normalize(const RadialKernels& kernels, const Perturbation& p,
                              const SphereRule& rule) {
    if (rule.dim != p.space().n) throw std::invalid_argument("volume_normalize: rule dimension mismatch");
    PhiPsiAnchor anchor(kernels, p.base_radius());
    auto vals = detail::evaluate_at_nodes(p, rule);
    double c = solve_volume_shift(kernels, anchor, p.base_radius(), vals, rule);
    return p.with_shift(c);
}

Perturbation barycenter_normalize(const RadialKernels& kernels, const Perturbation& p,
                                  const SphereRule& rule) {
    if (rule.dim != p.space().n)
        throw std::invalid_argument("barycenter_normalize: rule dimension mismatch");
    const int n = p.space().n;
    const double R = p.base_radius();
    PhiPsiAnchor anchor(kernels, R);
    const double vol_target = n * kernels.unit_ball_volume() * anchor.phi_base();
    const double vol_tol = 1e-12 * vol_target;
    const double bar_tol = 1e-10 * anchor.psi_base() * n * kernels.unit_ball_volume();

    Perturbation cur = p;
    auto vals = detail::evaluate_at_nodes(cur, rule);

    auto bar_defect = [&](const std::vector<double>& v) {
        return detail::graph_barycenter(anchor, R, v, rule);
    };

    VecN defect = bar_defect(vals);
    for (int it = 0; it < 100; ++it) {
        // volume first: a monotone 1-D problem
        double c = solve_volume_shift(kernels, anchor, R, vals, rule);
        if (c != 0.0) cur = cur.with_shift(c);
        defect = bar_defect(vals);
        double vol_defect = detail::graph_volume(anchor, R, vals, rule) - vol_target;
        if (defect.norm() <= bar_tol && std::abs(vol_defect) <= vol_tol) return cur;

        // Newton on the degree-1 coefficients: d defect_k / d a_l =
        // int phi_k phi_l psi'(rbar) R dphi with psi'(r) = r phi'(r).
        Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
        for (int i = 0; i < rule.count(); ++i) {
            double rbar = R * (1.0 + vals[static_cast<size_t>(i)]);
            double w = rule.weights[static_cast<size_t>(i)] * rbar * kernels.phi_deriv(rbar, 1) * R;
            const double* x = rule.node(i);
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) jac(k, l) += w * x[k] * x[l];
        }
        Eigen::VectorXd rhs(n);
        for (int k = 0; k < n; ++k) rhs[k] = -defect[k];
        Eigen::VectorXd step = jac.partialPivLu().solve(rhs);

        // damped update of the degree-1 coefficients
        double base_norm = defect.norm();
        double damp = 1.0;
        for (int attempt = 0; attempt < 6; ++attempt) {
            auto coeffs = cur.coefficients();
            auto trial_vals = vals;
            for (int k = 0; k < n; ++k) {
                coeffs[static_cast<size_t>(cur.basis().flat_index(1, k))] += damp * step[k];
            }
            for (int i = 0; i < rule.count(); ++i) {
                const double* x = rule.node(i);
                double dv = 0;
                for (int k = 0; k < n; ++k) dv += damp * step[k] * x[k];
                trial_vals[static_cast<size_t>(i)] += dv;
            }
            VecN trial_defect = bar_defect(trial_vals);
            if (trial_defect.norm() < base_norm || damp < 0.1) {
                cur = cur.with_coefficients(std::move(coeffs));
                vals = std::move(trial_vals);
                defect = trial_defect;
                break;
            }
            damp *= 0.5;
        }
    }
    std::ostringstream os;
    os << "barycenter_normalize: no convergence after 100 iterations, defect norm "
       << defect.norm();
    throw NormalizationFailure(os.str());
}

Perturbation random_band_limited(const RadialKernels& kernels, double R, int band_limit,
                                 double amplitude, uint64_t seed, const SphereRule& rule) {
    if (band_limit < 2) throw std::invalid_argument("random_band_limited: band limit must be >= 2");
    if (amplitude < 0) throw std::invalid_argument("random_band_limited: amplitude must be >= 0");
    const SpaceSpec& space = kernels.space();
    Perturbation zero(space, R, band_limit);
    if (amplitude == 0.0) return zero;

    auto basis = HarmonicBasis::get(space.n, band_limit);
    std::vector<double> coeffs(static_cast<size_t>(basis->size()));
    Rng rng(seed);
    for (double& c : coeffs) c = rng.next_gaussian();

    Perturbation raw = zero.with_coefficients(std::move(coeffs));
    double c1 = raw.c1_norm();
    if (c1 == 0.0) return zero;
    double scale = amplitude / c1;

    for (int attempt = 0; attempt < 12; ++attempt) {
        Perturbation candidate = raw.scaled(scale);
        Perturbation normalized = barycenter_normalize(kernels, candidate, rule);
        double c1n = normalized.c1_norm();
        if (c1n <= amplitude * (1.0 + 1e-9)) return normalized;
        scale *= amplitude / c1n;
    }
    throw NormalizationFailure("random_band_limited: could not reach the amplitude budget");
}

}  // namespace rosym
