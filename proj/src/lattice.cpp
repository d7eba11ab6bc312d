#include "gkm/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>

namespace gkm {

bool GramLattice::is_integral() const {
  for (Eigen::Index i = 0; i < gram.rows(); ++i)
    for (Eigen::Index j = 0; j < gram.cols(); ++j)
      if (!is_integer(gram(i, j))) return false;
  return true;
}

bool GramLattice::is_even() const {
  if (!is_integral()) return false;
  for (Eigen::Index i = 0; i < gram.rows(); ++i)
    if (num(gram(i, i)) % 2 != 0) return false;
  return true;
}

namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

// echelon form over the first ncols columns, applying row operations to the whole matrix
int echelon(ZMat& a, Eigen::Index ncols, std::vector<Eigen::Index>* pivots) {
  const Eigen::Index m = a.rows();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < ncols && r < m; ++c) {
    while (true) {
      Eigen::Index best = -1;
      for (Eigen::Index i = r; i < m; ++i)
        if (a(i, c) != 0 && (best < 0 || abs(a(i, c)) < abs(a(best, c)))) best = i;
      if (best < 0) break;
      if (best != r) a.row(best).swap(a.row(r));
      bool clean = true;
      for (Eigen::Index i = r + 1; i < m; ++i) {
        if (a(i, c) == 0) continue;
        Int q = floor_div(a(i, c), a(r, c));
        for (Eigen::Index j = 0; j < a.cols(); ++j)
          if (a(r, j) != 0) a(i, j) -= q * a(r, j);
        if (a(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (r < m && a(r, c) != 0) {
      if (a(r, c) < 0) a.row(r) = (-a.row(r)).eval();
      for (Eigen::Index k = 0; k < r; ++k) {
        Int q = floor_div(a(k, c), a(r, c));
        if (q != 0)
          for (Eigen::Index j = 0; j < a.cols(); ++j) a(k, j) -= q * a(r, j);
      }
      if (pivots) pivots->push_back(c);
      ++r;
    }
  }
  return int(r);
}

}  // namespace

ZMat hnf_rows(const ZMat& gens) {
  ZMat a = gens;
  int r = echelon(a, a.cols(), nullptr);
  return a.topRows(r);
}

ZVec hnf_reduce(const ZMat& h, ZVec v) {
  for (Eigen::Index r = 0; r < h.rows(); ++r) {
    Eigen::Index c = 0;
    while (h(r, c) == 0) ++c;
    Int q = floor_div(v(c), h(r, c));
    if (q != 0)
      for (Eigen::Index j = 0; j < v.size(); ++j) v(j) -= q * h(r, j);
  }
  return v;
}

ZMat left_kernel(const ZMat& a) {
  const Eigen::Index m = a.rows(), k = a.cols();
  ZMat aug(m, k + m);
  aug.leftCols(k) = a;
  aug.rightCols(m) = ZMat::Identity(m, m);
  int r = echelon(aug, k, nullptr);
  return aug.bottomRows(m - r).rightCols(m);
}

ZMat lll_transform(const QMat& gram, const Rational& delta) {
  const int n = int(gram.rows());
  Int scale = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scale = boost::multiprecision::lcm(scale, den(gram(i, j)));
  ZMat g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = num(gram(i, j) * scale);
  ZMat u = ZMat::Identity(n, n);
  const double dl = delta.convert_to<double>();
  std::vector<std::vector<double>> mu(n, std::vector<double>(n));
  std::vector<double> bs(n);
  auto gso = [&]() {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < i; ++j) {
        double s = g(i, j).convert_to<double>();
        for (int k = 0; k < j; ++k) s -= mu[j][k] * mu[i][k] * bs[k];
        mu[i][j] = s / bs[j];
      }
      double s = g(i, i).convert_to<double>();
      for (int k = 0; k < i; ++k) s -= mu[i][k] * mu[i][k] * bs[k];
      bs[i] = s;
    }
  };
  auto reduce = [&](int k, int j, const Int& q) {
    u.row(k) -= q * u.row(j);
    g.row(k) -= q * g.row(j);
    g.col(k) -= q * g.col(j);
  };
  gso();
  int k = 1;
  long guard = 0;
  while (k < n) {
    if (++guard > 10000000) throw Error("lll_transform: no convergence");
    for (int j = k - 1; j >= 0; --j) {
      double q = std::nearbyint(mu[k][j]);
      if (q != 0) {
        reduce(k, j, Int((long long)q));
        gso();
      }
    }
    if (bs[k] < (dl - mu[k][k - 1] * mu[k][k - 1]) * bs[k - 1] * (1 - 1e-12)) {
      u.row(k).swap(u.row(k - 1));
      g.row(k).swap(g.row(k - 1));
      g.col(k).swap(g.col(k - 1));
      gso();
      k = std::max(k - 1, 1);
    } else {
      ++k;
    }
  }
  return u;
}

CosetEnumerator::CosetEnumerator(const QMat& gram, const QVec& offset) : n_(int(gram.rows())) {
  Int gs = 1;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) gs = boost::multiprecision::lcm(gs, den(gram(i, j)));
  gscale_ = gs.convert_to<long>();
  gint_.resize(n_ * n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) gint_[i * n_ + j] = num(gram(i, j) * gs).convert_to<long>();
  Int pd = 1;
  for (Eigen::Index i = 0; i < offset.size(); ++i) pd = boost::multiprecision::lcm(pd, den(offset(i)));
  pden_ = pd.convert_to<long>();
  pnum_.assign(n_, 0);
  p_.assign(n_, 0.0);
  for (Eigen::Index i = 0; i < offset.size(); ++i) {
    pnum_[i] = num(offset(i) * pd).convert_to<long>();
    p_[i] = double(pnum_[i]) / double(pden_);
  }
  scale_ = Int(gscale_) * pden_ * pden_;
  // Cholesky-type decomposition Q(x) = sum q_ii (x_i + sum_{j>i} q_ij x_j)^2
  q_.assign(n_ * n_, 0.0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) q_[i * n_ + j] = gram(i, j).convert_to<double>();
  for (int i = 0; i < n_; ++i) {
    if (q_[i * n_ + i] <= 0) throw Error("CosetEnumerator: Gram matrix not positive definite");
    for (int j = i + 1; j < n_; ++j) {
      q_[j * n_ + i] = q_[i * n_ + j];
      q_[i * n_ + j] /= q_[i * n_ + i];
    }
    for (int k = i + 1; k < n_; ++k)
      for (int l = k; l < n_; ++l) q_[k * n_ + l] -= q_[k * n_ + i] * q_[i * n_ + l];
  }
}

void CosetEnumerator::run(const Rational& bound, const std::function<void(const std::vector<long>&, long)>& f) const {
  if (bound < 0) return;
  const int n = n_;
  const Int sb = floor_q(bound * Rational(scale_));
  const long sbound = sb.convert_to<long>();
  const double b = bound.convert_to<double>() * (1 + 1e-9) + 1e-9;
  std::vector<long> x(n), hi(n), z(n);
  std::vector<double> rem(n + 1), center(n);
  auto qq = [&](int i, int j) { return q_[i * n + j]; };
  auto set_range = [&](int i) -> bool {
    double c = 0;
    for (int j = i + 1; j < n; ++j) c -= qq(i, j) * (double(x[j]) + p_[j]);
    center[i] = c;
    double t = rem[i + 1] / qq(i, i);
    if (t < 0) t = 0;
    double s = std::sqrt(t);
    long lo = long(std::ceil(c - s - p_[i] - 1e-9));
    hi[i] = long(std::floor(c + s - p_[i] + 1e-9));
    x[i] = lo;
    return lo <= hi[i];
  };
  auto exact = [&]() -> long {
    for (int i = 0; i < n; ++i) z[i] = pden_ * x[i] + pnum_[i];
    __int128 s = 0;
    for (int i = 0; i < n; ++i) {
      if (z[i] == 0) continue;
      __int128 row = 0;
      for (int j = 0; j < n; ++j) row += (__int128)gint_[i * n + j] * z[j];
      s += row * z[i];
    }
    return (long)s;
  };
  if (n == 0) {
    f(x, 0);
    return;
  }
  rem[n] = b;
  int i = n - 1;
  if (!set_range(i)) return;
  while (true) {
    if (x[i] > hi[i]) {
      ++i;
      if (i >= n) return;
      ++x[i];
      continue;
    }
    double d = double(x[i]) + p_[i] - center[i];
    rem[i] = rem[i + 1] - qq(i, i) * d * d;
    if (i == 0) {
      if (rem[0] >= -1e-6) {
        long s = exact();
        if (s <= sbound) f(x, s);
      }
      ++x[0];
      continue;
    }
    --i;
    if (!set_range(i)) {
      ++i;
      ++x[i];
    }
  }
}

std::vector<LatticeVector> short_vectors(const GramLattice& L, const Rational& bound, const std::optional<QVec>& offset) {
  const int n = L.rank();
  QVec p = offset ? *offset : QVec::Zero(n);
  CosetEnumerator en(L.gram, p);
  std::vector<std::pair<long, std::vector<long>>> raw;
  en.run(bound, [&](const std::vector<long>& x, long s) { raw.emplace_back(s, x); });
  std::sort(raw.begin(), raw.end());
  std::vector<LatticeVector> out;
  out.reserve(raw.size());
  for (auto& [s, x] : raw) {
    LatticeVector v;
    v.coeffs.resize(n);
    for (int i = 0; i < n; ++i) v.coeffs(i) = Rational(x[i]) + p(i);
    v.norm = Rational(Int(s)) / Rational(en.scale());
    out.push_back(std::move(v));
  }
  return out;
}

Rational minimum_norm(const GramLattice& L) {
  ZMat u = lll_transform(L.gram);
  QMat uq = cast<Int, Rational>(u);
  QMat g = uq * L.gram * uq.transpose();
  Rational b = g(0, 0);
  for (int i = 1; i < g.rows(); ++i) b = std::min(b, Rational(g(i, i)));
  CosetEnumerator en(g);
  long best = -1;
  en.run(b, [&](const std::vector<long>&, long s) {
    if (s > 0 && (best < 0 || s < best)) best = s;
  });
  return Rational(Int(best)) / Rational(en.scale());
}

QSeries normalized(const QSeries& s) {
  long g = s.denom();
  for (auto& [k, c] : s.terms()) g = std::gcd(g, k);
  if (!s.is_exact()) g = std::gcd(g, s.exact_below());
  if (g <= 1) return s;
  QSeries out(s.denom() / g, s.is_exact() ? QSeries::kExact : s.exact_below() / g);
  for (auto& [k, c] : s.terms()) out.set(k / g, c);
  return out;
}

QSeries theta_series(const GramLattice& L, const std::optional<QVec>& offset, const Rational& truncation) {
  const int n = L.rank();
  QVec p = offset ? *offset : QVec::Zero(n);
  CosetEnumerator en(L.gram, p);
  const long d = (en.scale() * 2).convert_to<long>();
  Rational eb = truncation * d;
  long ebn = floor_q(eb).convert_to<long>();
  if (Rational(ebn) != eb) ++ebn;
  std::map<long, long> counts;
  en.run(truncation * 2, [&](const std::vector<long>&, long s) {
    if (s < ebn) ++counts[s];
  });
  QSeries out(d, ebn);
  for (auto& [s, c] : counts) out.set(s, Rational(c));
  return normalized(out);
}

int legendre(long a, long p) {
  a = ((a % p) + p) % p;
  if (a == 0) return 0;
  for (long x = 1; x < p; ++x)
    if (x * x % p == a) return 1;
  return -1;
}

ResidueTable residue_counts(long M, long N, ResidueMode mode) {
  if (!is_prime(N)) throw Error("residue_counts: N not prime");
  ResidueTable t;
  t.M = M;
  t.N = N;
  t.rho_tilde.assign(N, 0);
  if (mode == ResidueMode::Classes) {
    if (M != leech_M(N)) throw Error("residue_counts: class mode needs M = 24/(N+1)");
    for (auto& c : discriminant_classes(fixed_lattice(N).lattice)) {
      Rational k = c.half_norm_mod1 * N;
      if (!is_integer(k)) throw Error("residue_counts: half-norm outside (1/N)Z");
      t.rho_tilde[num(k).convert_to<long>()] += 1;
    }
  } else if (mode == ResidueMode::Brute) {
    std::vector<long> x(M, 0);
    while (true) {
      long s = 0;
      for (long v : x) s += v * v;
      t.rho_tilde[s % N] += 1;
      long i = 0;
      while (i < M && ++x[i] == N) x[i++] = 0;
      if (i == M) break;
    }
  } else {
    Int NM = Int(ipow(N, int(M)));
    if (M % 2 == 0) {
      Int h = Int(ipow(N, int(M / 2)));
      Int sgn = (M / 2) % 2 == 0 ? 1 : -1;
      for (long r = 1; r < N; ++r) t.rho_tilde[r] = (NM - sgn * h) / N;
      t.rho_tilde[0] = NM / N + sgn * (h - h / N);
    } else {
      Int h = Int(ipow(N, int((M + 1) / 2)));
      long sign = ((M - 1) / 2) % 2 == 0 ? 1 : -1;
      for (long r = 1; r < N; ++r) t.rho_tilde[r] = (NM + legendre(sign * r, N) * h) / N;
      t.rho_tilde[0] = NM / N;
    }
  }
  t.rho = t.rho_tilde;
  t.rho[0] -= 1;
  return t;
}

std::vector<DiscriminantClass> discriminant_classes(const GramLattice& L) {
  if (!L.is_integral()) throw Error("discriminant_classes: lattice not integral");
  const int n = L.rank();
  ZMat g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = num(L.gram(i, j));
  ZMat h = hnf_rows(g);
  QMat ginv = inverse_exact(L.gram);
  auto key = [](const ZVec& v) {
    std::vector<Int> k(v.data(), v.data() + v.size());
    return k;
  };
  std::map<std::vector<Int>, ZVec> seen;
  std::deque<ZVec> queue;
  ZVec zero = ZVec::Zero(n);
  seen.emplace(key(zero), zero);
  queue.push_back(zero);
  while (!queue.empty()) {
    ZVec y = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      ZVec z = y;
      z(i) += 1;
      z = hnf_reduce(h, z);
      if (seen.emplace(key(z), z).second) queue.push_back(z);
    }
  }
  std::vector<DiscriminantClass> out;
  for (auto& [k, y] : seen) {
    DiscriminantClass c;
    c.y = y;
    QVec cq = ginv * cast<Int, Rational>(y);
    for (int i = 0; i < n; ++i) {
      Rational f = cq(i);
      Int r = floor_q(f + Rational(1, 2));
      cq(i) = f - Rational(r);
    }
    c.rep = cq;
    Rational hn = quad<Rational>(L.gram, cq) / 2;
    c.half_norm_mod1 = hn - Rational(floor_q(hn));
    out.push_back(std::move(c));
  }
  return out;
}

QSeries theta_sum(long N, const Rational& truncation) {
  long M = leech_M(N);
  ResidueTable t = residue_counts(M, N, ResidueMode::ClosedForm);
  QSeries s = theta_rhs(N, -1, truncation);
  for (long r = 0; r < N; ++r) s = s + Rational(t.rho[r]) * theta_rhs(N, r, truncation);
  return s;
}

}  // namespace gkm
