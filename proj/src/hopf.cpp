#include "rosym/hopf.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

namespace rosym {

namespace {

// (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)), recursing on half-size
// blocks; dim 1 is the real product.
void cd_multiply(int dim, const double* x, const double* y, double* out) {
    if (dim == 1) {
        out[0] = x[0] * y[0];
        return;
    }
    int h = dim / 2;
    const double *a = x, *b = x + h, *c = y, *d = y + h;
    double t1[4], t2[4], cj[4];

    // out_lo = a*c - conj(d)*b
    cd_multiply(h, a, c, t1);
    cj[0] = d[0];
    for (int i = 1; i < h; ++i) cj[i] = -d[i];
    cd_multiply(h, cj, b, t2);
    for (int i = 0; i < h; ++i) out[i] = t1[i] - t2[i];

    // out_hi = d*a + b*conj(c)
    cd_multiply(h, d, a, t1);
    cj[0] = c[0];
    for (int i = 1; i < h; ++i) cj[i] = -c[i];
    cd_multiply(h, b, cj, t2);
    for (int i = 0; i < h; ++i) out[h + i] = t1[i] + t2[i];
}

}  // namespace

void algebra_multiply(Algebra a, const double* x, const double* y, double* out) {
    cd_multiply(algebra_dim(a), x, y, out);
}

void algebra_conjugate(Algebra a, const double* x, double* out) {
    int d = algebra_dim(a);
    out[0] = x[0];
    for (int i = 1; i < d; ++i) out[i] = -x[i];
}

VecN octonion_multiply(const VecN& a, const VecN& b) {
    if (a.n != 8 || b.n != 8) throw std::invalid_argument("octonion_multiply: expected 8-vectors");
    VecN out = VecN::zero(8);
    cd_multiply(8, a.a.data(), b.a.data(), out.a.data());
    return out;
}

ImaginaryAction::ImaginaryAction(SpaceSpec space) : space_(space) {
    int d = space_.d;
    perm_.resize(static_cast<size_t>(count()));
    sign_.resize(static_cast<size_t>(count()));
    double unit[8], basis[8], prod[8];
    for (int alpha = 0; alpha < count(); ++alpha) {
        std::memset(unit, 0, sizeof(unit));
        unit[alpha + 1] = 1.0;  // e_{alpha+1} is the imaginary unit
        auto& perm = perm_[static_cast<size_t>(alpha)];
        auto& sign = sign_[static_cast<size_t>(alpha)];
        perm.fill(0);
        sign.fill(0.0);
        for (int j = 0; j < d; ++j) {
            std::memset(basis, 0, sizeof(basis));
            basis[j] = 1.0;
            cd_multiply(d, basis, unit, prod);
            // basis_j * e_alpha lands on exactly one coordinate with sign +-1
            for (int k = 0; k < d; ++k) {
                if (prod[k] != 0.0) {
                    perm[static_cast<size_t>(k)] = j;
                    sign[static_cast<size_t>(k)] = prod[k];
                }
            }
        }
    }
}

VecN ImaginaryAction::apply(int alpha, const VecN& v) const {
    if (alpha < 0 || alpha >= count()) throw std::invalid_argument("ImaginaryAction: bad alpha");
    const auto& perm = perm_[static_cast<size_t>(alpha)];
    const auto& sign = sign_[static_cast<size_t>(alpha)];
    int d = space_.d;
    VecN out = VecN::zero(space_.n);
    for (int blk = 0; blk < space_.m; ++blk) {
        const int base = blk * d;
        for (int k = 0; k < d; ++k)
            out[base + k] = sign[static_cast<size_t>(k)] * v[base + perm[static_cast<size_t>(k)]];
    }
    return out;
}

TangentSplit split_tangent(const ImaginaryAction& action, const VecN& phi, const VecN& v) {
    TangentSplit split;
    split.horizontal = VecN::zero(phi.n);
    for (int alpha = 0; alpha < action.count(); ++alpha) {
        VecN fiber = action.apply(alpha, phi);
        split.horizontal.axpy(v.dot(fiber), fiber);
    }
    split.vertical = v - split.horizontal;
    return split;
}

TangentSplit split_tangent(const SpaceSpec& space, const VecN& phi, const VecN& v) {
    if (phi.n != space.n || v.n != space.n)
        throw std::invalid_argument("split_tangent: dimension mismatch");
    if (std::abs(phi.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("split_tangent: phi must be a unit vector");
    if (std::abs(v.dot(phi)) > 1e-10 * std::max(v.norm(), 1e-300))
        throw std::invalid_argument("split_tangent: v must be tangent to the sphere at phi");
    ImaginaryAction action(space);
    return split_tangent(action, phi, v);
}

}  // namespace rosym
