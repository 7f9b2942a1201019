#include "bergman/gauss.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "bergman/errors.hpp"

namespace bergman {

namespace {

// Golub-Welsch: nodes are eigenvalues of the symmetric tridiagonal recurrence
// matrix, weights are mu0 times the squared first eigenvector components.
gauss_rule golub_welsch(const std::vector<double>& a, const std::vector<double>& b,
                        double mu0) {
  const int n = static_cast<int>(a.size());
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    jac(i, i) = a[i];
    if (i + 1 < n) {
      const double off = std::sqrt(b[i + 1]);
      jac(i, i + 1) = off;
      jac(i + 1, i) = off;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
  gauss_rule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

// Monic Jacobi recurrence coefficients for weight (1-x)^alpha (1+x)^beta on [-1,1].
void jacobi_recurrence(int n, double alpha, double beta, std::vector<double>& a,
                       std::vector<double>& b) {
  a.resize(n);
  b.resize(n);
  const double ab = alpha + beta;
  a[0] = (beta - alpha) / (ab + 2.0);
  b[0] = 0.0;
  for (int k = 1; k < n; ++k) {
    const double den = (2.0 * k + ab) * (2.0 * k + ab + 2.0);
    a[k] = (beta * beta - alpha * alpha) / den;
    const double num = 4.0 * k * (k + alpha) * (k + beta) * (k + ab);
    const double d2 = (2.0 * k + ab) * (2.0 * k + ab);
    b[k] = num / (d2 * (2.0 * k + ab + 1.0) * (2.0 * k + ab - 1.0));
  }
}

}  // namespace

gauss_rule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw parameter_error("gauss_legendre: need at least one node");
  std::vector<double> ra, rb;
  jacobi_recurrence(n, 0.0, 0.0, ra, rb);
  gauss_rule rule = golub_welsch(ra, rb, 2.0);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = mid + half * rule.nodes[i];
    rule.weights[i] *= half;
  }
  return rule;
}

gauss_rule gauss_jacobi01(int n, double alpha) {
  if (n < 1) throw parameter_error("gauss_jacobi01: need at least one node");
  if (alpha <= -1.0) throw parameter_error("gauss_jacobi01: alpha must exceed -1");
  std::vector<double> ra, rb;
  jacobi_recurrence(n, alpha, 0.0, ra, rb);
  // mu0 = int_{-1}^{1} (1-x)^alpha dx = 2^(alpha+1)/(alpha+1)
  const double mu0 = std::pow(2.0, alpha + 1.0) / (alpha + 1.0);
  gauss_rule rule = golub_welsch(ra, rb, mu0);
  // map x in [-1,1] to u = (x+1)/2 in [0,1]; (1-x)^alpha dx = 2^(alpha+1) (1-u)^alpha du
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = 0.5 * (rule.nodes[i] + 1.0);
    rule.weights[i] *= std::pow(2.0, -alpha - 1.0);
  }
  return rule;
}

}  // namespace bergman
