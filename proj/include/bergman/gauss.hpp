#pragma once

#include <vector>

namespace bergman {

struct gauss_rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule for integration against dx on [a, b].
gauss_rule gauss_legendre(int n, double a, double b);

/// Gauss-Jacobi rule for integration against (1-u)^alpha du on [0, 1].
/// Requires alpha > -1.
gauss_rule gauss_jacobi01(int n, double alpha);

}  // namespace bergman
