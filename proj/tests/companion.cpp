#include <Eigen/Eigenvalues>

#include "test_support.hpp"

namespace modcone::testing {

std::vector<complex> companion_roots(const std::vector<complex>& a) {
  const int n = static_cast<int>(a.size()) - 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) m(i, n - 1) = -a[static_cast<std::size_t>(i)] / a.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
  std::vector<complex> roots;
  for (int i = 0; i < n; ++i) roots.push_back(es.eigenvalues()(i));
  return roots;
}

}  // namespace modcone::testing
