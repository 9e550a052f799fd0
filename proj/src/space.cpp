#include "rosym/space.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <algorithm>
#include <cmath>
#include <map>

#include "rosym/detail/gauss.hpp"

namespace rosym {

int algebra_dim(Algebra a) {
    switch (a) {
        case Algebra::Real: return 1;
        case Algebra::Complex: return 2;
        case Algebra::Quaternion: return 4;
        case Algebra::Octonion: return 8;
    }
    throw std::invalid_argument("unknown algebra");
}

char algebra_letter(Algebra a) {
    switch (a) {
        case Algebra::Real: return 'R';
        case Algebra::Complex: return 'C';
        case Algebra::Quaternion: return 'H';
        case Algebra::Octonion: return 'O';
    }
    throw std::invalid_argument("unknown algebra");
}

SpaceSpec SpaceSpec::make(Algebra a, int m) {
    if (m < 2) throw std::invalid_argument("SpaceSpec: m must be >= 2");
    if (a == Algebra::Octonion && m != 2)
        throw std::invalid_argument("SpaceSpec: only the Cayley plane OH2 exists (m = 2)");
    SpaceSpec s;
    s.algebra = a;
    s.m = m;
    s.d = algebra_dim(a);
    s.n = s.m * s.d;
    if (s.n > kMaxDim) throw std::invalid_argument("SpaceSpec: real dimension exceeds 16");
    return s;
}

SpaceSpec SpaceSpec::parse(const std::string& name) {
    if (name.size() < 3 || name[1] != 'H')
        throw std::invalid_argument("SpaceSpec: expected <letter>H<m>, got '" + name + "'");
    Algebra a;
    switch (name[0]) {
        case 'R': a = Algebra::Real; break;
        case 'C': a = Algebra::Complex; break;
        case 'H': a = Algebra::Quaternion; break;
        case 'O': a = Algebra::Octonion; break;
        default: throw std::invalid_argument("SpaceSpec: unknown algebra letter in '" + name + "'");
    }
    int m = 0;
    try {
        size_t pos = 0;
        m = std::stoi(name.substr(2), &pos);
        if (pos != name.size() - 2) throw std::invalid_argument("");
    } catch (...) {
        throw std::invalid_argument("SpaceSpec: bad dimension in '" + name + "'");
    }
    return make(a, m);
}

std::string SpaceSpec::name() const {
    return std::string(1, algebra_letter(algebra)) + "H" + std::to_string(m);
}

const std::vector<SpaceSpec>& builtin_spaces() {
    static const std::vector<SpaceSpec> spaces = {
        SpaceSpec::make(Algebra::Real, 2),       SpaceSpec::make(Algebra::Real, 3),
        SpaceSpec::make(Algebra::Complex, 2),    SpaceSpec::make(Algebra::Quaternion, 2),
        SpaceSpec::make(Algebra::Octonion, 2),
    };
    return spaces;
}

namespace {

// d/dr of a sinh/cosh monomial list.
std::vector<SinhCoshTerm> differentiate(const std::vector<SinhCoshTerm>& terms) {
    std::map<std::pair<int, int>, double> acc;
    for (const auto& t : terms) {
        if (t.p != 0) acc[{t.p - 1, t.q + 1}] += t.coeff * t.p;
        if (t.q != 0) acc[{t.p + 1, t.q - 1}] += t.coeff * t.q;
    }
    std::vector<SinhCoshTerm> out;
    for (const auto& [pq, c] : acc)
        if (c != 0.0) out.push_back({c, pq.first, pq.second});
    return out;
}

double ipow(double x, int e) {
    double r = 1.0;
    double b = x;
    int k = e;
    if (k < 0) {
        b = 1.0 / x;
        k = -k;
    }
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

double eval_terms(const std::vector<SinhCoshTerm>& terms, double s, double c) {
    double v = 0;
    for (const auto& t : terms) v += t.coeff * ipow(s, t.p) * ipow(c, t.q);
    return v;
}

}  // namespace

RadialKernels::RadialKernels(SpaceSpec s) : space_(s) {
    dphi_[1] = {{1.0, s.n - 1, s.d - 1}};
    for (int k = 2; k <= 4; ++k) dphi_[k] = differentiate(dphi_[k - 1]);
    for (int k = 1; k <= 4; ++k)
        for (const auto& t : dphi_[k])
            if (t.p < 0 || t.p < s.n - k)
                throw std::logic_error("RadialKernels: unexpected sinh power");
    double half_n = 0.5 * s.n;
    unit_ball_vol_ = std::pow(kPi, half_n) / std::tgamma(half_n + 1.0);
}

const std::vector<SinhCoshTerm>& RadialKernels::phi_deriv_terms(int k) const {
    if (k < 1 || k > 4) throw std::invalid_argument("phi_deriv_terms: k must be in 1..4");
    return dphi_[static_cast<size_t>(k)];
}

double RadialKernels::volume_density(double r) const {
    if (r < 0) throw std::invalid_argument("volume_density: r must be >= 0");
    return ipow(sinhc(r), space_.n - 1) * ipow(std::cosh(r), space_.d - 1);
}

double RadialKernels::phi_deriv(double r, int k) const {
    if (r < 0) throw std::invalid_argument("phi_deriv: r must be >= 0");
    if (k < 0 || k > 3) throw std::invalid_argument("phi_deriv: k must be in 0..3");
    if (k == 0) return phi(r);
    return eval_terms(dphi_[static_cast<size_t>(k)], std::sinh(r), std::cosh(r));
}

double RadialKernels::phi(double r) const {
    if (r < 0) throw std::invalid_argument("phi: r must be >= 0");
    if (r == 0) return 0;
    if (space_.algebra == Algebra::Complex) return ipow(std::sinh(r), space_.n) / space_.n;
    auto integrand = [this](double t) { return phi_deriv(t, 1); };
    return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(integrand, 0.0, r, 15,
                                                                         1e-13);
}

double RadialKernels::psi(double r) const {
    if (r < 0) throw std::invalid_argument("psi: r must be >= 0");
    if (r == 0) return 0;
    auto integrand = [this](double t) { return t * phi_deriv(t, 1); };
    return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(integrand, 0.0, r, 15,
                                                                         1e-13);
}

double RadialKernels::omega(int k, double r) const {
    if (k < 1 || k > 4) throw std::invalid_argument("omega: k must be in 1..4");
    double x = std::abs(r);  // omega_k is even
    double shc = sinhc(x);
    double s = std::sinh(x);
    double c = std::cosh(x);
    int nk = space_.n - k;
    double v = 0;
    for (const auto& t : dphi_[static_cast<size_t>(k)])
        v += t.coeff * ipow(shc, nk) * ipow(s, t.p - nk) * ipow(c, t.q);
    return v;
}

double RadialKernels::omega_prime(int k, double r) const {
    if (k < 1 || k > 3) throw std::invalid_argument("omega_prime: k must be in 1..3");
    if (r == 0) return 0;
    return (omega(k + 1, r) - (space_.n - k) * omega(k, r)) / r;
}

double RadialKernels::omega1i(int i, double r) const {
    double shc = sinhc(r);
    if (i == 1) return shc * shc;
    if (i == 2) {
        double c = std::cosh(r);
        return shc * shc * c * c;
    }
    throw std::invalid_argument("omega1i: i must be 1 or 2");
}

double RadialKernels::omega1i_prime(int i, double r) const {
    double shc = sinhc(r);
    double cms = cosh_minus_sinhc(r);
    if (r == 0) return 0;
    if (i == 1) return 2.0 * shc * cms / r;
    if (i == 2) {
        double s = std::sinh(r);
        double c = std::cosh(r);
        return 2.0 * shc * c * (c * cms + s * s) / r;
    }
    throw std::invalid_argument("omega1i_prime: i must be 1 or 2");
}

double RadialKernels::ball_volume(double R) const {
    if (R <= 0) throw std::invalid_argument("ball_volume: R must be > 0");
    return space_.n * unit_ball_vol_ * phi(R);
}

double RadialKernels::ball_perimeter(double R) const {
    if (R <= 0) throw std::invalid_argument("ball_perimeter: R must be > 0");
    return space_.n * unit_ball_vol_ * phi_deriv(R, 1);
}

PhiPsiAnchor::PhiPsiAnchor(const RadialKernels& kernels, double R)
    : kernels_(&kernels), R_(R), phi_R_(kernels.phi(R)), psi_R_(kernels.psi(R)) {}

void PhiPsiAnchor::eval(double x, double* phi_out, double* psi_out) const {
    const auto& [gx, gw] = detail::gauss_legendre(16);
    double mid = 0.5 * (R_ + x);
    double half = 0.5 * (x - R_);
    double phi_inc = 0, psi_inc = 0;
    for (size_t i = 0; i < gx.size(); ++i) {
        double t = mid + half * gx[i];
        double fp = kernels_->phi_deriv(t, 1);
        phi_inc += gw[i] * fp;
        if (psi_out) psi_inc += gw[i] * t * fp;
    }
    if (phi_out) *phi_out = phi_R_ + half * phi_inc;
    if (psi_out) *psi_out = psi_R_ + half * psi_inc;
}

}  // namespace rosym
