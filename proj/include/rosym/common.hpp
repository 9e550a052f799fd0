#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace rosym {

inline constexpr double kPi = 3.14159265358979323846;

// Hard cap on the ambient dimension (OH2 has n = 16).
inline constexpr int kMaxDim = 16;

struct NonFiniteIntegrand : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NormalizationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Fixed-capacity vector in R^n, n <= 16. Cheap to copy, no allocation.
struct VecN {
    int n = 0;
    std::array<double, kMaxDim> a{};

    static VecN zero(int n) {
        VecN v;
        v.n = n;
        return v;
    }

    double& operator[](int i) { return a[static_cast<size_t>(i)]; }
    double operator[](int i) const { return a[static_cast<size_t>(i)]; }

    double dot(const VecN& o) const {
        double s = 0;
        for (int i = 0; i < n; ++i) s += a[i] * o.a[i];
        return s;
    }
    double norm_sq() const { return dot(*this); }
    double norm() const { return std::sqrt(norm_sq()); }

    VecN& axpy(double c, const VecN& o) {
        for (int i = 0; i < n; ++i) a[i] += c * o.a[i];
        return *this;
    }
    VecN& scale(double c) {
        for (int i = 0; i < n; ++i) a[i] *= c;
        return *this;
    }
    VecN operator-(const VecN& o) const {
        VecN r = *this;
        for (int i = 0; i < n; ++i) r.a[i] -= o.a[i];
        return r;
    }
    VecN operator+(const VecN& o) const {
        VecN r = *this;
        for (int i = 0; i < n; ++i) r.a[i] += o.a[i];
        return r;
    }
};

// Neumaier compensated summation; deterministic for a fixed visit order.
class KahanSum {
  public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0;
    double comp_ = 0;
};

// sinh(r)/r with a series branch; accurate for all r >= 0.
inline double sinhc(double r) {
    double x = std::abs(r);
    if (x < 1e-4) {
        double r2 = r * r;
        return 1.0 + r2 / 6.0 * (1.0 + r2 / 20.0 * (1.0 + r2 / 42.0));
    }
    return std::sinh(r) / r;
}

// cosh(r) - sinh(r)/r, series-stable near zero (~ r^2/3).
inline double cosh_minus_sinhc(double r) {
    double x = std::abs(r);
    if (x < 1e-2) {
        double r2 = r * r;
        return r2 * (1.0 / 3.0 + r2 * (1.0 / 30.0 + r2 * (1.0 / 840.0 + r2 / 45360.0)));
    }
    return std::cosh(r) - sinhc(r);
}

// Deterministic, platform-independent uniform / Gaussian streams built on
// splitmix64. Used wherever seeded reproducibility is part of the contract.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in (0, 1]
    double next_uniform() {
        uint64_t u = next_u64();
        return (static_cast<double>(u >> 11) + 1.0) * 0x1.0p-53;
    }

    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_uniform();
        double u2 = next_uniform();
        double m = std::sqrt(-2.0 * std::log(u1));
        double th = 2.0 * kPi * u2;
        spare_ = m * std::sin(th);
        have_spare_ = true;
        return m * std::cos(th);
    }

  private:
    uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0;
};

}  // namespace rosym
