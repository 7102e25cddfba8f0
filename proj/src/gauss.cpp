#include "oht/gauss.hpp"

#include <Eigen/Eigenvalues>
#include <boost/math/special_functions/gamma.hpp>
#include <map>
#include <mutex>
#include <utility>

namespace oht {

namespace {

void check_args(double alpha, int n) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw DomainError("laguerre_rule: alpha must lie in [0,1)");
  if (n < 1 || n > kMaxRuleOrder) throw ParamError("laguerre_rule: n must lie in [1, 64]");
}

// Jacobi matrix of the Laguerre polynomials with parameter b = -alpha:
// diagonal 2k + 1 + b, off-diagonal sqrt(k (k + b)).
QuadratureRuleL golub_welsch(double alpha, int n) {
  using Vec = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
  using Mat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  const long double b = -static_cast<long double>(alpha);
  Vec diag(n);
  Vec off(std::max(n - 1, 0));
  for (int k = 0; k < n; ++k) diag(k) = 2.0L * k + 1.0L + b;
  for (int k = 1; k < n; ++k) off(k - 1) = std::sqrt(k * (k + b));

  Eigen::SelfAdjointEigenSolver<Mat> es;
  es.computeFromTridiagonal(diag, off, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success) throw SolveError("laguerre_rule: eigen-solver failed");

  const long double mu0 = boost::math::tgamma(1.0L + b);
  QuadratureRuleL r;
  r.alpha = alpha;
  r.n = n;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int k = 0; k < n; ++k) {
    const long double v = es.eigenvectors()(0, k);
    r.nodes[k] = es.eigenvalues()(k);
    r.weights[k] = mu0 * v * v;
  }
  return r;
}

struct Cache {
  std::mutex mu;
  std::map<std::pair<double, int>, QuadratureRuleL> ext;
  std::map<std::pair<double, int>, QuadratureRule> dbl;
};

Cache& cache() {
  static Cache c;
  return c;
}

const QuadratureRuleL& ext_locked(Cache& c, double alpha, int n) {
  const auto key = std::make_pair(alpha, n);
  auto it = c.ext.find(key);
  if (it == c.ext.end()) it = c.ext.emplace(key, golub_welsch(alpha, n)).first;
  return it->second;
}

}  // namespace

const QuadratureRuleL& laguerre_rule_ext(double alpha, int n) {
  check_args(alpha, n);
  Cache& c = cache();
  std::lock_guard lock(c.mu);
  return ext_locked(c, alpha, n);
}

const QuadratureRule& laguerre_rule(double alpha, int n) {
  check_args(alpha, n);
  Cache& c = cache();
  std::lock_guard lock(c.mu);
  const auto key = std::make_pair(alpha, n);
  if (auto it = c.dbl.find(key); it != c.dbl.end()) return it->second;
  const QuadratureRuleL& e = ext_locked(c, alpha, n);
  QuadratureRule r;
  r.alpha = alpha;
  r.n = n;
  r.nodes.assign(e.nodes.begin(), e.nodes.end());
  r.weights.assign(e.weights.begin(), e.weights.end());
  return c.dbl.emplace(key, std::move(r)).first->second;
}

}  // namespace oht
