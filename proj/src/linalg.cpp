#include "wf/linalg.hpp"

#include <stdexcept>

namespace wf {

RVec solve_rational(const IntMat& A, const RVec& b) {
  int n = A.rows();
  if (A.cols() != n || static_cast<int>(b.size()) != n) throw std::invalid_argument("solve_rational: shape");
  std::vector<RVec> m(n, RVec(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rat(A(i, j));
    m[i][n] = b[i];
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m[p][c] == Rat(0)) ++p;
    if (p == n) throw std::domain_error("solve_rational: singular matrix");
    std::swap(m[p], m[c]);
    for (int i = 0; i < n; ++i) {
      if (i == c || m[i][c] == Rat(0)) continue;
      Rat f = m[i][c] / m[c][c];
      for (int j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  RVec x(n);
  for (int i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return x;
}

Rat rdot(const RVec& a, const Vec& b) {
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace wf
