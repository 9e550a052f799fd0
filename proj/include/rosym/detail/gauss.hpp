#pragma once

#include <utility>
#include <vector>

namespace rosym::detail {

// Gauss-Legendre nodes/weights on [-1, 1], cached per order.
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int order);

// Gauss-Gegenbauer nodes/weights on [-1, 1] for the weight (1 - t^2)^alpha,
// via Golub-Welsch on the Jacobi recurrence.
std::pair<std::vector<double>, std::vector<double>> gauss_gegenbauer(int order, double alpha);

}  // namespace rosym::detail
