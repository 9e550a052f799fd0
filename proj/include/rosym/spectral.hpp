#pragma once

#include "rosym/common.hpp"
#include "rosym/perturbation.hpp"
#include "rosym/quadrature.hpp"
#include "rosym/space.hpp"

namespace rosym {

// Lower bound for the j-th nonzero Laplacian eigenvalue on the geodesic
// sphere of radius R:
//   [j(j + d - 2) + j(n - d) cosh^2 R] / (sinh^2 R cosh^2 R),
// with equality at j = 1.
double eigenvalue_lower_bound(const SpaceSpec& space, double R, int j);

struct SpectralBounds {
    double R = 0;
    double lambda1 = 0;        // exact first eigenvalue
    double lambda2_lower = 0;  // j = 2 lower bound
    double ratio_bound = 0;    // lambda1 / lambda2_lower, always < 1/2
};

SpectralBounds spectral_bounds(const SpaceSpec& space, double R);

// Closed form of lambda1/lambda2_lower: ((d-1)+(n-d)cosh^2 R)/(2d+2(n-d)cosh^2 R).
double spectral_ratio_closed_form(const SpaceSpec& space, double R);

struct LowHarmonics {
    double c0 = 0;  // mean against the constant eigenfunction
    VecN c1;        // coefficients against sqrt(n) x^k / R
};

// Coefficients of rho against the degree-0/1 eigenfunctions, normalized by
// the sphere perimeter as in the stability estimates.
LowHarmonics low_harmonic_coefficients(const RadialKernels& kernels, double R,
                                       const Perturbation& p, const SphereRule& rule);

}  // namespace rosym
