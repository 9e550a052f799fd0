#pragma once

#include <string>
#include <vector>

#include "rosym/common.hpp"

namespace rosym {

enum class Algebra { Real, Complex, Quaternion, Octonion };

int algebra_dim(Algebra a);
char algebra_letter(Algebra a);

// Ambient rank-one space K H^m: division algebra, K-dimension m,
// real dimension n = m*d.
struct SpaceSpec {
    Algebra algebra = Algebra::Real;
    int m = 2;
    int d = 1;
    int n = 2;

    static SpaceSpec make(Algebra a, int m);
    static SpaceSpec parse(const std::string& name);  // "RH2", "CH2", ...
    std::string name() const;

    int horizontal_dim() const { return d - 1; }
    int vertical_dim() const { return n - d; }

    bool operator==(const SpaceSpec& o) const { return algebra == o.algebra && m == o.m; }
};

// The five instances the CLI and test campaigns use.
const std::vector<SpaceSpec>& builtin_spaces();

// coeff * sinh(r)^p * cosh(r)^q
struct SinhCoshTerm {
    double coeff;
    int p;
    int q;
};

// Closed-form radial kernels of the ambient space: the volume density
// omega_g, the ball profile phi with derivatives up to fourth order, the
// moment profile psi, and the normalized densities omega_k = phi^(k)/r^(n-k).
//
// All evaluators are pure; derivatives come from sinh/cosh monomial lists,
// and the omega_k use a sinh(r)/r factorization so small radii never divide
// by r^(n-k).
class RadialKernels {
  public:
    explicit RadialKernels(SpaceSpec s);

    const SpaceSpec& space() const { return space_; }

    // omega_g(r) = sinh^{n-1}(r) cosh^{d-1}(r) / r^{n-1}; equals 1 at r = 0.
    double volume_density(double r) const;

    // k = 0 -> phi(r); k = 1..3 -> closed-form derivative. Rejects k outside 0..3.
    double phi_deriv(double r, int k) const;

    double phi(double r) const;
    double psi(double r) const;

    // omega_k(r) = phi^(k)(r)/r^(n-k), k in 1..4 (k = 4 exists for the
    // constant optimizers; evenness/convexity are claimed only for k <= 3).
    double omega(int k, double r) const;

    // d/dr omega_k; accurate away from r = 0 (use r >= ~1e-3).
    double omega_prime(int k, double r) const;

    // omega_1^1 = sinh^2 r / r^2, omega_1^2 = sinh^2 r cosh^2 r / r^2.
    double omega1i(int i, double r) const;
    double omega1i_prime(int i, double r) const;

    // d/dr of the volume density.
    double volume_density_prime(double r) const { return omega_prime(1, r); }

    double ball_volume(double R) const;
    double ball_perimeter(double R) const;

    // Euclidean unit-ball volume omega_n.
    double unit_ball_volume() const { return unit_ball_vol_; }
    double sphere_measure() const { return space_.n * unit_ball_vol_; }

    double series_cutoff() const { return series_cutoff_; }

    const std::vector<SinhCoshTerm>& phi_deriv_terms(int k) const;

  private:
    SpaceSpec space_;
    std::array<std::vector<SinhCoshTerm>, 5> dphi_;  // dphi_[k], k = 1..4
    double unit_ball_vol_ = 0;
    double series_cutoff_ = 1e-3;
};

// phi/psi evaluator anchored at a base radius R: values at x close to R are
// the anchor value plus a fixed-order Gauss-Legendre increment over [R, x].
// This is the hot path for radial-graph functionals, where every node radius
// sits within a C^0 neighborhood of R.
class PhiPsiAnchor {
  public:
    PhiPsiAnchor(const RadialKernels& kernels, double R);

    double base_radius() const { return R_; }
    double phi_base() const { return phi_R_; }
    double psi_base() const { return psi_R_; }

    // Either output may be null.
    void eval(double x, double* phi_out, double* psi_out) const;

    double phi_at(double x) const {
        double v;
        eval(x, &v, nullptr);
        return v;
    }
    double psi_at(double x) const {
        double v;
        eval(x, nullptr, &v);
        return v;
    }

  private:
    const RadialKernels* kernels_;
    double R_;
    double phi_R_;
    double psi_R_;
};

}  // namespace rosym
