#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "rosym/common.hpp"

namespace rosym {

enum class RuleKind { ProductGauss, MonteCarlo };

// Quadrature rule on S^{n-1}. Weights are normalized so they sum to the
// total surface measure n*omega_n; every node has unit norm.
struct SphereRule {
    int dim = 0;
    RuleKind kind = RuleKind::ProductGauss;
    std::optional<int> exact_degree;
    std::optional<uint64_t> seed;
    std::vector<double> nodes;  // count * dim, row-major
    std::vector<double> weights;

    int count() const { return static_cast<int>(weights.size()); }
    const double* node(int i) const { return nodes.data() + static_cast<size_t>(i) * dim; }
    VecN node_vec(int i) const;
    double total_measure() const;
};

// Iterated Gauss rule over spherical angles; exact for polynomials of degree
// <= 2*level - 1 restricted to the sphere. Rejects n > 8.
SphereRule product_rule(int n, int level);

// Equal-weight rule on normalized Gaussian draws; deterministic from seed.
// Requires N >= 1000.
SphereRule monte_carlo_rule(int n, int N, uint64_t seed);

struct IntegralResult {
    double value = 0;
    std::optional<double> stderr_;  // populated for Monte Carlo rules
};

// Compensated fixed-order reduction; throws NonFiniteIntegrand when f
// produces a non-finite value.
IntegralResult integrate(const SphereRule& rule, const std::function<double(const double*)>& f);

// One node + weight per line, plain text.
void save_rule(const SphereRule& rule, std::ostream& os);
SphereRule load_rule(std::istream& is);

}  // namespace rosym
