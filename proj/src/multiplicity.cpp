#include "gkm/multiplicity.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>

namespace gkm {

namespace {

using u128 = unsigned __int128;
constexpr int kLane = 12;
constexpr long kLaneMax = (1L << (kLane - 1)) - 1;

u128 pack(const std::vector<long>& v) {
  u128 k = 0;
  for (std::size_t i = 0; i < v.size(); ++i) k |= u128(v[i]) << (kLane * i);
  return k;
}

std::vector<long> unpack(u128 k, int n) {
  std::vector<long> v(n);
  for (int i = 0; i < n; ++i) v[i] = long((k >> (kLane * i)) & ((1u << kLane) - 1));
  return v;
}

struct U128Hash {
  std::size_t operator()(u128 k) const {
    std::uint64_t a = std::uint64_t(k), b = std::uint64_t(k >> 64);
    a ^= b * 0x9e3779b97f4a7c15ULL;
    a ^= a >> 31;
    a *= 0xbf58476d1ce4e5b9ULL;
    return std::size_t(a ^ (a >> 29));
  }
};

std::string coeff_key(const std::vector<long>& v) {
  std::string s;
  for (long x : v) s += std::to_string(x) + ",";
  return s;
}

long gcd_all(const std::vector<long>& v) {
  long g = 0;
  for (long x : v) g = std::gcd(g, x);
  return g;
}

Int lcm_den(const QMat& b) {
  Int l = 1;
  for (Eigen::Index i = 0; i < b.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) l = boost::multiprecision::lcm(l, den(b(i, j)));
  return l;
}

long to_long(const Rational& r) {
  if (!is_integer(r)) throw Error("expected an integer, got " + r.str());
  return num(r).convert_to<long>();
}

QMat sub_matrix(const QMat& b, const std::vector<int>& nodes) {
  QMat s(nodes.size(), nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < nodes.size(); ++j) s(i, j) = b(nodes[i], nodes[j]);
  return s;
}

QMat cartan_from_edges(int n, std::initializer_list<std::pair<int, int>> edges, long weight = -1) {
  QMat b = QMat::Zero(n, n);
  for (int i = 0; i < n; ++i) b(i, i) = 2;
  for (auto [i, j] : edges) b(i - 1, j - 1) = b(j - 1, i - 1) = weight;
  return b;
}

// ambient (f; c) coordinates of the explicit basis to basis coefficients
QVec from_fc(long N, std::initializer_list<long> fc) {
  const FixedLattice& F = [&]() -> const FixedLattice& {
    static std::map<long, FixedLattice> cache;
    static std::mutex mu;
    std::lock_guard lk(mu);
    auto it = cache.find(N);
    if (it == cache.end()) it = cache.emplace(N, fixed_lattice(N)).first;
    return it->second;
  }();
  QVec v(fc.size());
  int i = 0;
  for (long x : fc) v(i++) = x;
  return solve_exact(QMat(F.fc.transpose()), v);
}

RPoint fix_point(QVec pos) { return {PointKind::Fix, std::move(pos)}; }

QVec coeffs(std::initializer_list<long> c) {
  QVec v(c.size());
  int i = 0;
  for (long x : c) v(i++) = x;
  return v;
}

}  // namespace

// ---------------------------------------------------------------- G_N roots

const GkmContext& GkmContext::get(long N) {
  static std::map<long, GkmContext> cache;
  static std::mutex mu;
  std::lock_guard lk(mu);
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  GkmContext c;
  c.N = N;
  c.M = leech_M(N);
  c.gram = fixed_lattice(N).lattice.gram;
  c.shape = CycleShape::leech_prime(N);
  return cache.emplace(N, std::move(c)).first->second;
}

Rational lorentz_inner(const LorentzRoot& a, const LorentzRoot& b, const QMat& gram) {
  return bilin(gram, a.lambda, b.lambda) - Rational(a.m * b.n + a.n * b.m);
}

Rational lorentz_norm(const LorentzRoot& r, const QMat& gram) { return lorentz_inner(r, r, gram); }

LorentzRoot operator+(const LorentzRoot& a, const LorentzRoot& b) {
  return {QVec(a.lambda + b.lambda), a.m + b.m, a.n + b.n};
}

LorentzRoot operator*(const Int& k, const LorentzRoot& r) {
  return {QVec(r.lambda * Rational(k)), k * r.m, k * r.n};
}

bool in_L(const LorentzRoot& r) {
  for (Eigen::Index i = 0; i < r.lambda.size(); ++i)
    if (!is_integer(r.lambda(i))) return false;
  return true;
}

bool in_L_star(const LorentzRoot& r, const QMat& gram) {
  QVec y = gram * r.lambda;
  for (Eigen::Index i = 0; i < y.size(); ++i)
    if (!is_integer(y(i))) return false;
  return true;
}

bool in_NL_star(const LorentzRoot& r, long N, const QMat& gram) {
  if (r.m % N != 0 || r.n % N != 0) return false;
  QVec y = gram * r.lambda;
  for (Eigen::Index i = 0; i < y.size(); ++i)
    if (!is_integer(y(i) / N)) return false;
  return true;
}

LorentzRoot lift(const RPoint& p, long N, const QMat& gram) {
  if (p.kind == PointKind::Fix) {
    Rational n = quad(gram, p.pos) / 2 - 1;
    return {p.pos, 1, Int(to_long(n))};
  }
  QVec mu = p.pos * Rational(N);
  Rational n = Rational(N) * quad(gram, p.pos) / 2 - 1;
  return {mu, N, Int(to_long(n))};
}

LorentzRoot imaginary_simple_root(long n) {
  return {QVec(), 0, n};
}

Int imaginary_simple_mult(long n, const CycleShape& shape) {
  if (n < 1) throw Error("imaginary_simple_mult: n must be positive");
  Int s = 0;
  for (auto& [a, b] : shape.parts)
    if (n % a == 0) s += b;
  return s;
}

Int gkm_mult(const LorentzRoot& r, long N) {
  const GkmContext& g = GkmContext::get(N);
  if (!in_L(r)) return 0;
  Rational norm = lorentz_norm(r, g.gram);
  Int m = p_sigma(g.shape, to_long(1 - norm / 2));
  if (in_NL_star(r, N, g.gram)) m += p_sigma(g.shape, to_long(1 - norm / (2 * N)));
  return m;
}

Rational TraceTerms::mult() const { return tr_r - tr_rN / tr_div() + dim_rN / tr_div(); }

namespace {

struct ThetaCache {
  std::mutex mu;
  std::map<std::pair<long, long>, QSeries> series;
  const QSeries& get(long N, long idx, const Rational& upto) {
    std::lock_guard lk(mu);
    auto k = std::make_pair(N, idx);
    auto it = series.find(k);
    if (it == series.end() || it->second.exact_below_exponent() <= upto) {
      Rational t = std::max(Rational(upto + 1), Rational(4));
      series[k] = theta_rhs(N, idx, t);
      it = series.find(k);
    }
    return it->second;
  }
};

ThetaCache& theta_cache() {
  static ThetaCache c;
  return c;
}

}  // namespace

TraceTerms gkm_trace_terms(const LorentzRoot& r, long N) {
  const GkmContext& g = GkmContext::get(N);
  TraceTerms t;
  t.N = N;
  if (in_L(r)) t.tr_r = Rational(p_sigma(g.shape, to_long(1 - lorentz_norm(r, g.gram) / 2)));
  if (!in_NL_star(r, N, g.gram)) return t;
  LorentzRoot s{QVec(r.lambda / Rational(N)), r.m / N, r.n / N};
  Rational s2 = lorentz_norm(s, g.gram);
  if (in_L(s)) t.tr_rN = Rational(p_sigma(g.shape, to_long(1 - s2 / 2)));
  Rational e = 1 - s2 / 2;
  if (e < 0) return t;
  long idx = -1;
  if (!in_L(s)) {
    Rational h = quad(g.gram, s.lambda) / 2;
    h -= Rational(floor_q(h));
    idx = to_long(h * N) % N;
  }
  const QSeries& th = theta_cache().get(N, idx, e);
  Rational dim = 0;
  for (long j = 0; Rational(j) <= e; ++j) dim += Rational(colored_partitions(24, j)) * th.at(e - j);
  t.dim_rN = dim;
  return t;
}

Int gkm_mult_via_trace(const LorentzRoot& r, long N) {
  Rational m = gkm_trace_terms(r, N).mult();
  if (!is_integer(m)) throw Error("gkm_mult_via_trace: non-integral result " + m.str());
  return num(m);
}

RootClass root_class(const LorentzRoot& r, long N) {
  const QMat& g = GkmContext::get(N).gram;
  if (!in_L(r)) return RootClass::OffL;
  if (!in_NL_star(r, N, g)) return RootClass::InL;
  return in_L({QVec(r.lambda / Rational(N)), 0, 0}) ? RootClass::InNL : RootClass::InNLstar;
}

std::vector<LorentzRoot> sample_roots(long N, int count, std::uint64_t seed) {
  const QMat& g = GkmContext::get(N).gram;
  const QMat gi = inverse_exact(g);
  const int n = int(g.rows());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> small(-1, 1), mdist(1, 2), ndist(0, 2);
  std::vector<LorentzRoot> out;
  while (int(out.size()) < count) {
    RootClass want = RootClass(out.size() % 4);
    const bool scaled = want == RootClass::InNLstar || want == RootClass::InNL;
    const bool dual = want == RootClass::OffL || want == RootClass::InNLstar;
    QVec y(n);
    for (int i = 0; i < n; ++i) y(i) = small(rng);
    QVec lam = dual ? QVec(gi * y) : y;
    long m = mdist(rng);
    Rational top = scaled ? Rational(2, N) : Rational(2);
    Int nn = -floor_q((top - quad(g, lam)) / (2 * m)) + ndist(rng);
    LorentzRoot r{lam, m, nn};
    if (scaled) r = Int(N) * r;
    if (root_class(r, N) == want) out.push_back(r);
  }
  return out;
}

Rational gkm_cartan_entry(const LorentzRoot& a, const LorentzRoot& b, long N) {
  const QMat& g = GkmContext::get(N).gram;
  auto fix = [&](const LorentzRoot& r) {
    return r.lambda.size() ? r : LorentzRoot{QVec::Zero(g.rows()), r.m, r.n};
  };
  return lorentz_inner(fix(a), fix(b), g);
}

QMat gkm_cartan_matrix(const std::vector<LorentzRoot>& roots, long N) {
  QMat c(roots.size(), roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = 0; j < roots.size(); ++j) c(i, j) = gkm_cartan_entry(roots[i], roots[j], N);
  return c;
}

// ---------------------------------------------------------------- Peterson

PetersonTable::PetersonTable(const QMat& cartan, const std::vector<long>& box) : b_(cartan), box_(box) {
  const int n = rank();
  if (n < 1 || n * kLane > 128) throw Error("peterson: unsupported rank");
  if (int(box.size()) != n) throw Error("peterson: box size mismatch");
  for (long x : box)
    if (x < 0 || x > kLaneMax) throw Error("peterson: box out of range");
  const Int s = lcm_den(cartan);
  std::vector<std::vector<long>> bi(n, std::vector<long>(n));
  long maxdiag = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bi[i][j] = to_long(cartan(i, j) * Rational(s));
      if (i == j) {
        if (bi[i][i] <= 0) throw Error("peterson: simple roots must be real");
        maxdiag = std::max(maxdiag, bi[i][i]);
      }
    }

  struct Entry {
    u128 key;
    long height;
    long norm;  // scaled
    std::vector<long> bb;  // scaled B beta
    Int mult = 0;
    Rational c;
    bool done = false;
  };
  std::vector<Entry> ents;
  std::unordered_map<u128, std::size_t, U128Hash> index;
  long maxh = std::accumulate(box.begin(), box.end(), 0L);
  std::vector<std::vector<std::size_t>> buckets(maxh + 1);

  auto add = [&](const std::vector<long>& v, long norm, std::vector<long> bb) {
    Entry e;
    e.key = pack(v);
    e.height = std::accumulate(v.begin(), v.end(), 0L);
    e.norm = norm;
    e.bb = std::move(bb);
    index.emplace(e.key, ents.size());
    buckets[e.height].push_back(ents.size());
    ents.push_back(std::move(e));
  };

  // candidates: every box vector with norm at most the largest simple-root norm
  {
    std::vector<long> x(n, 0), bb(n, 0);
    long norm = 0;
    for (;;) {
      int i = 0;
      while (i < n && x[i] == box[i]) {
        long d = -x[i];
        norm += 2 * d * bb[i] + d * d * bi[i][i];
        for (int k = 0; k < n; ++k) bb[k] += d * bi[k][i];
        x[i] = 0;
        ++i;
      }
      if (i == n) break;
      norm += 2 * bb[i] + bi[i][i];
      for (int k = 0; k < n; ++k) bb[k] += bi[k][i];
      ++x[i];
      if (norm <= maxdiag) add(x, norm, bb);
    }
  }

  auto find = [&](const std::vector<long>& v) -> const Entry* {
    for (int i = 0; i < n; ++i)
      if (v[i] < 0 || v[i] > box[i]) return nullptr;
    auto it = index.find(pack(v));
    return it == index.end() ? nullptr : &ents[it->second];
  };
  auto mult_of = [&](const std::vector<long>& v) -> Int {
    const Entry* e = find(v);
    if (!e) return 0;
    if (!e->done) throw Error("peterson: lookup before evaluation");
    return e->mult;
  };

  std::vector<std::size_t> order;
  std::vector<long> heights;
  for (long h = 1; h <= maxh; ++h) {
    for (std::size_t bi_idx = 0; bi_idx < buckets[h].size(); ++bi_idx) {
      const std::size_t idx = buckets[h][bi_idx];
      std::vector<long> beta = unpack(ents[idx].key, n);
      const long norm = ents[idx].norm;
      const std::vector<long> bb = ents[idx].bb;
      Int mult = 0;
      Rational c;
      const long g = gcd_all(beta);
      int up = -1;
      for (int i = 0; i < n && up < 0; ++i)
        if (bb[i] > 0) up = i;
      if (h == 1) {
        mult = 1;
      } else if (up >= 0) {
        if ((2 * bb[up]) % bi[up][up] == 0) {
          std::vector<long> low = beta;
          low[up] -= 2 * bb[up] / bi[up][up];
          if (low[up] >= 0) mult = mult_of(low);
        }
      } else {
        long denom = norm;
        for (int i = 0; i < n; ++i) denom -= beta[i] * bi[i][i];
        Rational rhs = 0;
        const long half = h / 2;
        for (std::size_t k = 0; k < order.size() && heights[k] <= half; ++k) {
          const Entry& a = ents[order[k]];
          if (a.c == 0) continue;
          std::vector<long> av = unpack(a.key, n);
          bool le = true;
          for (int i = 0; i < n && le; ++i) le = av[i] <= beta[i];
          if (!le) continue;
          std::vector<long> rest(n);
          for (int i = 0; i < n; ++i) rest[i] = beta[i] - av[i];
          const Entry* r = find(rest);
          if (!r || r->c == 0) continue;
          long prod = -a.norm;
          for (int i = 0; i < n; ++i) prod += a.bb[i] * beta[i];
          Rational term = Rational(prod) * a.c * r->c;
          rhs += 2 * a.height == h ? term : 2 * term;
        }
        ++recursions_;
        if (denom == 0) {
          if (rhs != 0) throw Error("peterson: vanishing denominator at " + coeff_key(beta));
          c = 0;
        } else {
          c = rhs / Rational(denom);
        }
        Rational m = c;
        for (long k = 2; k <= g; ++k) {
          if (g % k) continue;
          std::vector<long> d = beta;
          for (long& x : d) x /= k;
          m -= Rational(mult_of(d)) / Rational(k);
        }
        if (!is_integer(m) || m < 0) throw Error("peterson: non-integral multiplicity " + m.str() + " at " + coeff_key(beta));
        mult = num(m);
      }
      if (up >= 0 || h == 1) {
        c = Rational(mult);
        for (long k = 2; k <= g; ++k) {
          if (g % k) continue;
          std::vector<long> d = beta;
          for (long& x : d) x /= k;
          c += Rational(mult_of(d)) / Rational(k);
        }
      }
      Entry& e = ents[idx];
      e.mult = mult;
      e.c = c;
      e.done = true;
      order.push_back(idx);
      heights.push_back(h);
      // multiples of real roots carry c = mult / k
      if (mult > 0 && norm > 0) {
        for (long k = 2;; ++k) {
          std::vector<long> kv = beta;
          bool inside = true;
          for (int i = 0; i < n; ++i) {
            kv[i] *= k;
            inside = inside && kv[i] <= box[i];
          }
          if (!inside) break;
          if (index.count(pack(kv))) continue;
          std::vector<long> kbb = bb;
          for (long& x : kbb) x *= k;
          add(kv, norm * k * k, kbb);
        }
      }
    }
  }
  for (auto& e : ents) {
    keys_.push_back(unpack(e.key, n));
    if (e.mult != 0) mult_[coeff_key(keys_.back())] = e.mult;
  }
}

Int PetersonTable::mult(const std::vector<long>& coeffs) const {
  if (coeffs.size() != box_.size()) throw Error("peterson: wrong coefficient count");
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] < 0 || coeffs[i] > box_[i]) throw Error("peterson: " + coeff_key(coeffs) + " outside the box");
  auto it = mult_.find(coeff_key(coeffs));
  return it == mult_.end() ? Int(0) : it->second;
}

Rational PetersonTable::norm(const std::vector<long>& coeffs) const {
  QVec v(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) v(i) = coeffs[i];
  return quad(b_, v);
}

bool PetersonTable::dominant(const std::vector<long>& coeffs) const {
  QVec v(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) v(i) = coeffs[i];
  QVec y = b_ * v;
  for (Eigen::Index i = 0; i < y.size(); ++i)
    if (y(i) > 0) return false;
  return true;
}

std::vector<std::vector<long>> dominant_vectors(const QMat& cartan, long max_norm, long max_height) {
  const int n = int(cartan.rows());
  QMat inv = inverse_exact(cartan);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (inv(i, j) > 0) throw Error("dominant_vectors: the inverse Cartan matrix must be nonpositive");
  // beta = -inv t / s with t = -s (beta, alpha_i) >= 0 integer
  const Int s = lcm_den(cartan);
  QMat w = inv / Rational(s);  // beta = -w t
  std::vector<Rational> hstep(n);
  for (int i = 0; i < n; ++i) {
    hstep[i] = -w.col(i).sum();
    if (hstep[i] <= 0) throw Error("dominant_vectors: degenerate column");
  }
  QMat q = w.transpose() * cartan * w;  // norm = t^T q t, all entries <= 0
  std::vector<std::vector<long>> out;
  std::vector<long> t(n, 0);
  std::function<void(int, Rational, Rational)> rec = [&](int i, Rational height, Rational norm) {
    if (i == n) {
      QVec tv(n);
      for (int k = 0; k < n; ++k) tv(k) = t[k];
      QVec beta = -(w * tv);
      std::vector<long> b(n);
      bool ok = true, nonzero = false;
      for (int k = 0; k < n && ok; ++k) {
        ok = is_integer(beta(k));
        if (ok) b[k] = to_long(beta(k));
        nonzero = nonzero || b[k] != 0;
      }
      if (ok && nonzero) out.push_back(b);
      return;
    }
    for (long v = 0;; ++v) {
      t[i] = v;
      Rational h = height + hstep[i] * v;
      if (h > max_height) break;
      // contribution of t_i to the norm with the earlier t and itself
      Rational add = q(i, i) * v * v;
      for (int k = 0; k < i; ++k) add += 2 * q(i, k) * v * t[k];
      Rational nn = norm + add;
      if (nn < -max_norm) break;
      rec(i + 1, h, nn);
    }
    t[i] = 0;
  };
  rec(0, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- embeddings

bool SubalgebraEmbedding::simply_laced() const {
  // all simple roots of one norm
  for (int i = 1; i < rank(); ++i)
    if (cartan(i, i) != cartan(0, 0)) return false;
  return true;
}

std::vector<std::vector<int>> SubalgebraEmbedding::affine_subdiagrams() const {
  std::vector<std::vector<int>> out;
  const int n = rank();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> nodes;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) nodes.push_back(i);
    QMat s = sub_matrix(cartan, nodes);
    if (components(s).size() == 1 && classify(s) == DiagramClass::Affine) out.push_back(nodes);
  }
  return out;
}

std::optional<int> SubalgebraEmbedding::level_node() const {
  auto aff = affine_subdiagrams();
  if (aff.size() != 1 || int(aff[0].size()) != rank() - 1) return std::nullopt;
  for (int i = 0; i < rank(); ++i)
    if (std::find(aff[0].begin(), aff[0].end(), i) == aff[0].end()) return i;
  return std::nullopt;
}

std::vector<std::string> embedding_names() { return {"AE3", "H71", "AE4", "AE7", "DE8", "DE10", "T433"}; }

SubalgebraEmbedding embedding(const std::string& name) {
  SubalgebraEmbedding e;
  e.name = name;
  if (name == "AE3") {
    e.N = 23;
    e.points = {fix_point(coeffs({1, 0})), fix_point(coeffs({0, 1})), fix_point(coeffs({0, 0}))};
    e.cartan = cartan_from_edges(3, {{2, 3}});
    e.cartan(0, 1) = e.cartan(1, 0) = -2;
  } else if (name == "H71") {
    e.N = 11;
    e.points = {fix_point(from_fc(11, {0, 0, 0, 0})), fix_point(from_fc(11, {8, 0, 0, 0})),
                fix_point(from_fc(11, {4, 2, 0, -2}))};
    e.cartan = cartan_from_edges(3, {{1, 2}, {1, 3}, {2, 3}}, -2);
  } else if (name == "AE4") {
    e.N = 11;
    e.points = {fix_point(from_fc(11, {0, 0, 0, 0})), fix_point(from_fc(11, {5, 1, 1, 1})),
                fix_point(from_fc(11, {5, -1, 1, -1})), fix_point(from_fc(11, {4, 4, 0, 0}))};
    e.cartan = cartan_from_edges(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}});
  } else if (name == "AE7") {
    e.cartan = cartan_from_edges(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 2}});
  } else if (name == "DE8") {
    e.cartan = cartan_from_edges(8, {{1, 2}, {2, 3}, {3, 5}, {5, 6}, {6, 8}, {3, 4}, {6, 7}});
  } else if (name == "DE10") {
    e.cartan = cartan_from_edges(10, {{1, 2}, {2, 3}, {3, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 10}, {3, 4}, {8, 9}});
  } else if (name == "T433") {
    e.cartan = cartan_from_edges(8, {{1, 2}, {2, 3}, {3, 4}, {4, 7}, {7, 8}, {4, 5}, {5, 6}});
  } else {
    throw Error("unknown algebra " + name);
  }
  e.host_N = e.N ? e.N : e.rank() <= 8 ? 3 : 2;
  if (e.N) {
    const QMat& g = GkmContext::get(e.N).gram;
    for (auto& p : e.points) e.roots.push_back(lift(p, e.N, g));
    validate(e);
  }
  return e;
}

void validate(const SubalgebraEmbedding& e) {
  if (!e.N) return;
  QMat c = gkm_cartan_matrix(e.roots, e.N);
  if (c != e.cartan) throw Error("embedding " + e.name + ": inner products do not reproduce the Cartan matrix");
  if (classify(e.cartan) != DiagramClass::Hyperbolic) throw Error("embedding " + e.name + ": not hyperbolic");
}

LorentzRoot embed(const SubalgebraEmbedding& e, const std::vector<long>& c) {
  if (!e.N) throw Error("embedding " + e.name + " has no roots in G_N");
  LorentzRoot r{QVec::Zero(e.roots[0].lambda.size()), 0, 0};
  for (int i = 0; i < e.rank(); ++i) r = r + Int(c[i]) * e.roots[i];
  return r;
}

MultRow embed_and_bound(const SubalgebraEmbedding& e, const std::vector<long>& c, const PetersonTable& t) {
  MultRow row;
  row.coeffs = c;
  row.norm = t.norm(c);
  row.mult = t.mult(c);
  if (auto l = e.level_node()) row.level = c[*l];
  if (e.N) {
    LorentzRoot r = embed(e, c);
    const QMat& g = GkmContext::get(e.N).gram;
    if (lorentz_norm(r, g) != row.norm) throw Error("embed_and_bound: norm mismatch");
    row.in_NL_star = in_NL_star(r, e.N, g);
    row.bound = gkm_mult(r, e.N);
  }
  if (e.simply_laced()) row.global = global_bound(e.rank(), row.norm);
  row.p_rank = colored_partitions(e.rank() - 2, to_long(1 - row.norm / 2));
  return row;
}

namespace {

std::vector<long> box_of(const std::vector<std::vector<long>>& vs, int n) {
  std::vector<long> box(n, 0);
  for (auto& v : vs)
    for (int i = 0; i < n; ++i) box[i] = std::max(box[i], v[i]);
  return box;
}

}  // namespace

std::vector<MultRow> mult_rows(const SubalgebraEmbedding& e, const std::vector<std::vector<long>>& cs) {
  for (auto& c : cs)
    if (int(c.size()) != e.rank()) throw Error("mult_rows: coefficient count for " + e.name);
  PetersonTable t(e.cartan, box_of(cs, e.rank()));
  std::vector<MultRow> rows;
  for (auto& c : cs) rows.push_back(embed_and_bound(e, c, t));
  return rows;
}

std::vector<MultRow> mult_table(const SubalgebraEmbedding& e, long max_norm, long max_height) {
  auto dom = dominant_vectors(e.cartan, max_norm, max_height);
  std::vector<MultRow> rows;
  if (dom.empty()) return rows;
  PetersonTable t(e.cartan, box_of(dom, e.rank()));
  for (auto& c : dom) {
    MultRow r = embed_and_bound(e, c, t);
    if (r.mult > 0) rows.push_back(r);
  }
  std::stable_sort(rows.begin(), rows.end(), [](const MultRow& a, const MultRow& b) {
    if (a.norm != b.norm) return a.norm > b.norm;
    if (a.level != b.level) return a.level > b.level;
    return a.coeffs < b.coeffs;
  });
  return rows;
}

std::vector<GoldenRow> golden_rows(const std::string& algebra) {
  static const std::vector<GoldenRow> rows = {
#include "golden_mult.inc"
  };
  if (algebra.empty()) return rows;
  std::vector<GoldenRow> out;
  for (auto& r : rows)
    if (r.algebra == algebra) out.push_back(r);
  return out;
}

IsotropicReport isotropic_mult_check(const SubalgebraEmbedding& e, long max_height) {
  IsotropicReport rep;
  rep.algebra = e.name;
  rep.applies = e.simply_laced() && e.level_node().has_value();
  rep.expected = e.rank() - 2;
  auto dom = dominant_vectors(e.cartan, 0, max_height);
  std::vector<std::vector<long>> iso;
  for (auto& d : dom) {
    QVec v(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) v(i) = d[i];
    if (quad(e.cartan, v) == 0) iso.push_back(d);
  }
  if (iso.empty()) return rep;
  PetersonTable t(e.cartan, box_of(iso, e.rank()));
  // every isotropic vector in the box, not only the dominant ones
  for (auto& k : t.vectors()) {
    if (t.norm(k) != 0) continue;
    ++rep.rows;
    Int m = t.mult(k);
    if (rep.applies && m != rep.expected) rep.violations.push_back(coeff_key(k) + " mult " + m.str());
  }
  return rep;
}

SharpnessVerdict sharpness_check(const SubalgebraEmbedding& e, const HoleEnumeration& holes,
                                 std::optional<std::vector<int>> affine_nodes) {
  SharpnessVerdict v;
  v.algebra = e.name;
  if (!e.N || e.N != holes.N) throw Error("sharpness_check: embedding and holes disagree on N");
  auto aff = e.affine_subdiagrams();
  v.unique_affine = aff.size() == 1;
  if (affine_nodes) {
    v.affine_nodes = *affine_nodes;
  } else {
    if (aff.empty()) throw Error("sharpness_check: no affine subdiagram");
    v.affine_nodes = aff.front();
  }
  QMat sb = sub_matrix(e.cartan, v.affine_nodes);
  if (classify(sb) != DiagramClass::Affine) throw Error("sharpness_check: nodes are not affine");
  std::vector<long> delta = null_root(sb);
  std::vector<long> full(e.rank(), 0);
  for (std::size_t j = 0; j < v.affine_nodes.size(); ++j) full[v.affine_nodes[j]] = delta[j];
  LorentzRoot d = embed(e, full);
  QVec c = d.lambda / Rational(d.m);
  QVec shift(c.size());
  for (Eigen::Index i = 0; i < c.size(); ++i) shift(i) = Rational(floor_q(c(i)));
  QVec cc = c - shift;
  const Hole* hole = nullptr;
  for (auto& h : holes.holes)
    if (h.centre == cc) hole = &h;
  if (!hole) throw Error("sharpness_check: delta does not land in an enumerated hole");
  v.hole_label = hole->label();
  // vertex indices of the affine nodes
  std::vector<int> vid;
  for (int node : v.affine_nodes) {
    RPoint p = e.points[node];
    p.pos = p.pos - shift;
    auto it = std::find(hole->vertices.begin(), hole->vertices.end(), p);
    if (it == hole->vertices.end()) throw Error("sharpness_check: affine node is not a hole vertex");
    vid.push_back(int(it - hole->vertices.begin()));
  }
  std::sort(vid.begin(), vid.end());
  Rational own = -1;
  std::vector<Rational> others;
  for (auto& comp : hole->diagram.comps) {
    QMat cb = sub_matrix(hole->diagram.b, comp.nodes);
    std::vector<long> nd = null_root(cb);
    Rational g = 0;
    for (std::size_t j = 0; j < nd.size(); ++j) {
      Rational t = nd[j] * cb(j, j) / 2;
      g = g == 0 ? t : Rational(boost::multiprecision::gcd(num(g), num(t)));
    }
    Rational prod = g * comp.hvee;
    std::string lbl = (comp.long_nodes ? "N*" : "") + comp.name;
    v.products.push_back({lbl, prod});
    std::vector<int> nodes = comp.nodes;
    std::sort(nodes.begin(), nodes.end());
    if (nodes == vid && own < 0)
      own = prod;
    else
      others.push_back(prod);
  }
  if (own < 0) throw Error("sharpness_check: affine nodes do not form a hole component");
  v.sharp = std::all_of(others.begin(), others.end(), [&](const Rational& o) { return own < o; });
  PetersonTable t(e.cartan, full);
  v.observed_sharp = t.mult(full) == gkm_mult(d, e.N);
  return v;
}

std::string rows_tsv(const std::vector<MultRow>& rows) {
  std::ostringstream os;
  os << "coefficients\tnorm\tmult\tbound\tglobal\tp_rank\tin_NL_star\n";
  for (auto& r : rows) {
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) os << (i ? "," : "") << r.coeffs[i];
    os << '\t' << r.norm << '\t' << r.mult << '\t' << (r.bound ? r.bound->str() : "-") << '\t'
       << (r.global ? r.global->str() : "-") << '\t' << r.p_rank << '\t' << (r.in_NL_star ? 1 : 0) << '\n';
  }
  return os.str();
}

std::string rows_json(const std::vector<MultRow>& rows) {
  auto a = nlohmann::json::array();
  for (auto& r : rows) {
    nlohmann::json j;
    j["coefficients"] = r.coeffs;
    j["norm"] = r.norm.str();
    j["mult"] = r.mult.str();
    j["bound"] = r.bound ? nlohmann::json(r.bound->str()) : nlohmann::json(nullptr);
    j["global"] = r.global ? nlohmann::json(r.global->str()) : nlohmann::json(nullptr);
    j["p_rank"] = r.p_rank.str();
    j["in_NL_star"] = r.in_NL_star;
    a.push_back(j);
  }
  return a.dump(1);
}

}  // namespace gkm
