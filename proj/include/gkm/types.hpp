#pragma once
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkm {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using QMat = Mat<Rational>;
using QVec = Vec<Rational>;
using IMat = Mat<std::int64_t>;
using IVec = Vec<std::int64_t>;
using ZMat = Mat<Int>;
using ZVec = Vec<Int>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rational rat(long p, long q = 1) { return Rational(p, q); }

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

// floor for exact rationals
inline Int floor_q(const Rational& r) {
  Int n = num(r), d = den(r);
  Int q = n / d;
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

inline std::string to_string(const Rational& r) { return r.str(); }
inline std::string to_string(const Int& z) { return z.str(); }

// Parse "p/q" or "p"
Rational parse_rational(const std::string& s);

template <class S, class T>
Mat<T> cast(const Mat<S>& m) {
  Mat<T> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = T(m(i, j));
  return out;
}

template <class S, class T>
Vec<T> cast(const Vec<S>& v) {
  Vec<T> out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = T(v(i));
  return out;
}

template <class S>
S quad(const Mat<S>& g, const Vec<S>& x) {
  return x.dot(g * x);
}

template <class S>
S bilin(const Mat<S>& g, const Vec<S>& x, const Vec<S>& y) {
  return x.dot(g * y);
}

// Exact determinant by fraction-free elimination (Bareiss), any exact scalar.
template <class S>
S det_exact(Mat<S> a) {
  const Eigen::Index n = a.rows();
  if (n == 0) return S(1);
  S sign(1), prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return S(0);
      a.row(k).swap(a.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// Exact inverse via Gauss-Jordan over the rationals.
QMat inverse_exact(const QMat& a);

// Solve a x = b exactly; throws if singular.
QVec solve_exact(const QMat& a, const QVec& b);

// Rank over Q.
int rank_exact(QMat a);

std::int64_t ipow(std::int64_t b, int e);

bool is_prime(long n);

}  // namespace gkm
