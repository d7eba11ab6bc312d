#include "gkm/types.hpp"

namespace gkm {

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Int(s));
  return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

QMat inverse_exact(const QMat& a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw Error("inverse_exact: not square");
  QMat m = a;
  QMat inv = QMat::Identity(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) throw Error("inverse_exact: singular matrix");
    if (p != c) {
      m.row(p).swap(m.row(c));
      inv.row(p).swap(inv.row(c));
    }
    Rational piv = m(c, c);
    for (Eigen::Index j = 0; j < n; ++j) {
      m(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == c || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (Eigen::Index j = 0; j < n; ++j) {
        m(i, j) -= f * m(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

QVec solve_exact(const QMat& a, const QVec& b) {
  const Eigen::Index n = a.rows();
  QMat m(n, n + 1);
  m.leftCols(n) = a;
  m.col(n) = b;
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) throw Error("solve_exact: singular system");
    if (p != c) m.row(p).swap(m.row(c));
    Rational piv = m(c, c);
    for (Eigen::Index j = c; j <= n; ++j) m(c, j) /= piv;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == c || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (Eigen::Index j = c; j <= n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return m.col(n);
}

int rank_exact(QMat m) {
  int r = 0;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    m.row(p).swap(m.row(r));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(r, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace gkm
