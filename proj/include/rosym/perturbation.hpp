#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "rosym/common.hpp"
#include "rosym/quadrature.hpp"
#include "rosym/space.hpp"

namespace rosym {

struct Monomial {
    double coeff = 0;
    std::array<uint8_t, kMaxDim> exp{};
};

// Integral of x^a over S^{n-1}; zero when any exponent is odd, otherwise
// 2 prod_i Gamma((a_i+1)/2) / Gamma((n+|a|)/2).
double sphere_monomial_moment(int n, const std::array<uint8_t, kMaxDim>& exps);

// Homogeneous harmonic polynomial on R^n, stored as sparse monomials.
class HarmonicPoly {
  public:
    HarmonicPoly(int dim, int degree, int index, std::vector<Monomial> monomials);

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    int index() const { return index_; }
    const std::vector<Monomial>& monomials() const { return monomials_; }

    double eval(const double* x) const;
    double eval(const VecN& x) const { return eval(x.a.data()); }
    void gradient(const double* x, double* out) const;

    // Largest coefficient of the Euclidean Laplacian applied to the stored
    // monomials, relative to the polynomial's own scale. ~0 for a basis
    // element; the constructor does not enforce it.
    double laplacian_residual() const;

  private:
    int dim_;
    int degree_;
    int index_;
    std::vector<Monomial> monomials_;
};

// Orthogonal basis of homogeneous harmonic polynomials of degree 0..L on
// R^n, orthogonalized in the round-sphere inner product. Degree 0 is the
// constant 1 and degree 1 are the bare coordinates x_k; higher degrees are
// normalized to unit spherical mean square.
class HarmonicBasis {
  public:
    static std::shared_ptr<const HarmonicBasis> get(int dim, int max_degree);

    int dim() const { return dim_; }
    int max_degree() const { return max_degree_; }
    int size() const { return static_cast<int>(polys_.size()); }
    int degree_count(int degree) const;
    int flat_index(int degree, int index) const;
    const HarmonicPoly& element(int flat) const { return polys_[static_cast<size_t>(flat)]; }
    const HarmonicPoly& element(int degree, int index) const;

  private:
    HarmonicBasis(int dim, int max_degree);
    int dim_;
    int max_degree_;
    std::vector<HarmonicPoly> polys_;
    std::vector<int> degree_offset_;
};

struct PerturbationTerm {
    int degree = 0;
    int index = 0;
    double coeff = 0;
};

// Band-limited radial perturbation rho of the unit sphere; the perturbed
// boundary is { R(1+rho(phi)) phi }. Immutable; all mutators return copies.
class Perturbation {
  public:
    Perturbation(SpaceSpec space, double R, int band_limit);
    Perturbation(SpaceSpec space, double R, int band_limit, const std::vector<PerturbationTerm>& terms);

    const SpaceSpec& space() const { return space_; }
    double base_radius() const { return R_; }
    int band_limit() const { return basis_->max_degree(); }
    const HarmonicBasis& basis() const { return *basis_; }
    const std::vector<double>& coefficients() const { return coeffs_; }
    double coefficient(int degree, int index) const;
    std::vector<PerturbationTerm> terms() const;
    bool is_zero() const;

    Perturbation with_coefficients(std::vector<double> coeffs) const;
    Perturbation with_shift(double delta) const;  // degree-0 shift
    Perturbation scaled(double factor) const;

    double evaluate(const VecN& phi) const { return evaluate(phi.a.data()); }
    double evaluate(const double* phi) const;

    // Round-sphere tangent gradient at phi (orthogonal to phi).
    VecN tangent_gradient(const VecN& phi) const;

    // sup |rho| + |grad rho| over a deterministic quasi-uniform grid,
    // inflated by a 1.05 Lipschitz safety factor. grid_points = 0 picks the
    // default density (>= 1000 points enforced).
    double c1_norm(int grid_points = 0) const;
    double min_value_on_grid(int grid_points = 0) const;

    // p(Q x) for an orthogonal matrix Q (n*n row-major), as an exact
    // polynomial composition over the same basis degrees.
    Perturbation rotated(const std::vector<double>& Q) const;

  private:
    Perturbation(SpaceSpec space, double R, std::shared_ptr<const HarmonicBasis> basis,
                 std::vector<double> coeffs);
    void check_admissible() const;

    SpaceSpec space_;
    double R_;
    std::shared_ptr<const HarmonicBasis> basis_;
    std::vector<double> coeffs_;
};

// Shifts the degree-0 coefficient so the radial-graph volume (in the rule's
// measure) matches the geodesic ball of radius R. Monotone 1-D solve;
// |defect| <= 1e-12 * ball volume on success.
Perturbation volume_normalize(const RadialKernels& kernels, const Perturbation& p,
                              const SphereRule& rule);

// Damped Newton on the degree-1 coefficients, interleaved with volume
// renormalization, until the barycenter defect norm is <= 1e-10 * psi(R) *
// n*omega_n and the volume defect tolerance holds simultaneously.
Perturbation barycenter_normalize(const RadialKernels& kernels, const Perturbation& p,
                                  const SphereRule& rule);

// Seeded band-limited perturbation, rescaled to c1_norm <= amplitude and
// volume + barycenter normalized.
Perturbation random_band_limited(const RadialKernels& kernels, double R, int band_limit,
                                 double amplitude, uint64_t seed, const SphereRule& rule);

namespace detail {

// rho evaluated at every rule node.
std::vector<double> evaluate_at_nodes(const Perturbation& p, const SphereRule& rule);

// Volume of the radial graph r = R(1+vals) in the rule's measure.
double graph_volume(const PhiPsiAnchor& anchor, double R, const std::vector<double>& vals,
                    const SphereRule& rule);

// Barycenter defect vector int phi * psi(R(1+rho)) dphi.
VecN graph_barycenter(const PhiPsiAnchor& anchor, double R, const std::vector<double>& vals,
                      const SphereRule& rule);

std::vector<VecN> quasi_uniform_grid(int n, int points);

}  // namespace detail

}  // namespace rosym
