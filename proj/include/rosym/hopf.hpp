#pragma once

#include <vector>

#include "rosym/common.hpp"
#include "rosym/space.hpp"

namespace rosym {

// Division-algebra product in R^d coordinates, d = dim(K). The quaternion
// and octonion tables come from Cayley-Dickson doubling with the convention
// (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)).
void algebra_multiply(Algebra a, const double* x, const double* y, double* out);
void algebra_conjugate(Algebra a, const double* x, double* out);

// Convenience wrapper for the octonion product on 8-vectors.
VecN octonion_multiply(const VecN& a, const VecN& b);

// The d-1 skew orthogonal maps J_alpha on R^n ~ K^m, acting componentwise by
// right multiplication with the imaginary unit e_alpha. For unit phi the
// vectors {J_alpha phi} are an orthonormal frame of the Hopf fiber direction.
class ImaginaryAction {
  public:
    explicit ImaginaryAction(SpaceSpec space);

    const SpaceSpec& space() const { return space_; }
    int count() const { return space_.d - 1; }  // number of imaginary units

    // out = v * e_alpha componentwise, alpha in [0, d-2].
    VecN apply(int alpha, const VecN& v) const;

  private:
    SpaceSpec space_;
    // (q e_alpha)_k = sign[alpha][k] * q[perm[alpha][k]] within each K block
    std::vector<std::array<int, 8>> perm_;
    std::vector<std::array<double, 8>> sign_;
};

struct TangentSplit {
    VecN horizontal;  // component in span{J_alpha phi}
    VecN vertical;    // remainder, orthogonal to phi and every J_alpha phi
};

// Splits a tangent vector at unit phi into fiber (horizontal) and vertical
// parts. For K = R the horizontal bundle is empty and everything is vertical.
// Rejects |phi| != 1 beyond 1e-12 and non-tangent v beyond 1e-10 * |v|.
TangentSplit split_tangent(const SpaceSpec& space, const VecN& phi, const VecN& v);

// Same split against a precomputed action (hot path; no validation).
TangentSplit split_tangent(const ImaginaryAction& action, const VecN& phi, const VecN& v);

}  // namespace rosym
