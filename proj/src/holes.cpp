#include "gkm/holes.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace gkm {

namespace {

using Key = std::vector<Rational>;

Key key_of(const QVec& v) { return Key(v.data(), v.data() + v.size()); }

QVec frac(const QVec& v) {
  QVec f(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) f(i) = v(i) - Rational(floor_q(v(i)));
  return f;
}

QVec floor_vec(const QVec& v) {
  QVec f(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) f(i) = Rational(floor_q(v(i)));
  return f;
}

Eigen::VectorXd to_double(const QVec& v) {
  Eigen::VectorXd d(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) d(i) = v(i).convert_to<double>();
  return d;
}

// basis of {u : a u = 0} as columns
QMat nullspace(QMat a) {
  const int rows = int(a.rows()), cols = int(a.cols());
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    a.row(r).swap(a.row(p));
    Rational inv = 1 / a(r, c);
    for (int j = 0; j < cols; ++j) a(r, j) *= inv;
    for (int i = 0; i < rows; ++i)
      if (i != r && a(i, c) != 0) {
        Rational f = a(i, c);
        for (int j = 0; j < cols; ++j) a(i, j) -= f * a(r, j);
      }
    pivots.push_back(c);
    ++r;
  }
  std::vector<int> free;
  for (int c = 0, k = 0; c < cols; ++c) {
    if (k < int(pivots.size()) && pivots[k] == c)
      ++k;
    else
      free.push_back(c);
  }
  QMat out = QMat::Zero(cols, free.size());
  for (size_t f = 0; f < free.size(); ++f) {
    out(free[f], f) = 1;
    for (size_t i = 0; i < pivots.size(); ++i) out(pivots[i], f) = -a(i, free[f]);
  }
  return out;
}

// clear denominators so that the functional has coprime integer entries
QVec primitive(QVec v) {
  Int l = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) l = boost::multiprecision::lcm(l, den(v(i)));
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = boost::multiprecision::gcd(g, num(v(i) * Rational(l)));
  if (g == 0) return v;
  return v * Rational(l) / Rational(g);
}

struct Facet {
  std::vector<int> idx;
  QVec k;  // functional, negative on the other vertices
};

// facets of the hull of full-dimensional points in R^d
std::vector<Facet> facets_of(const std::vector<QVec>& pts) {
  const int m = int(pts.size());
  const int d = int(pts[0].size());
  std::vector<Facet> out;
  std::set<std::vector<int>> seen;
  std::vector<int> sel(d);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == d) {
      QMat diff(d - 1, d);
      for (int i = 1; i < d; ++i) diff.row(i - 1) = (pts[sel[i]] - pts[sel[0]]).transpose();
      QMat ns = d > 1 ? nullspace(diff) : QMat::Identity(1, 1);
      if (ns.cols() != 1) return;
      QVec k = primitive(QVec(ns.col(0)));
      int pos = 0, neg = 0;
      std::vector<int> on;
      for (int j = 0; j < m; ++j) {
        Rational s = k.dot(QVec(pts[j] - pts[sel[0]]));
        if (s > 0)
          ++pos;
        else if (s < 0)
          ++neg;
        else
          on.push_back(j);
      }
      if (pos && neg) return;
      if (!pos && !neg) return;
      if (pos) k = -k;
      if (seen.insert(on).second) out.push_back({on, k});
      return;
    }
    for (int i = start; i <= m - (d - depth); ++i) {
      sel[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  if (m == d + 1) {
    // simplex: drop one vertex at a time
    for (int drop = 0; drop < m; ++drop) {
      std::vector<int> idx;
      for (int j = 0; j < m; ++j)
        if (j != drop) idx.push_back(j);
      QMat diff(d - 1, d);
      for (int i = 1; i < d; ++i) diff.row(i - 1) = (pts[idx[i]] - pts[idx[0]]).transpose();
      QMat ns = d > 1 ? nullspace(diff) : QMat::Identity(1, 1);
      QVec k = primitive(QVec(ns.col(0)));
      if (k.dot(QVec(pts[drop] - pts[idx[0]])) > 0) k = -k;
      out.push_back({idx, k});
    }
    return out;
  }
  rec(0, 0);
  return out;
}

// local affine coordinates of points spanning a (d-1)-flat
std::vector<QVec> local_coords(const std::vector<QVec>& pts) {
  const int d = int(pts[0].size());
  std::vector<QVec> dirs;
  QMat acc(0, d);
  for (size_t j = 1; j < pts.size(); ++j) {
    QMat t(acc.rows() + 1, d);
    t << acc, (pts[j] - pts[0]).transpose();
    if (rank_exact(t) > int(acc.rows())) {
      acc = t;
      dirs.push_back(pts[j] - pts[0]);
    }
  }
  QMat D(d, dirs.size());
  for (size_t i = 0; i < dirs.size(); ++i) D.col(i) = dirs[i];
  QMat gram = D.transpose() * D;
  QMat inv = inverse_exact(gram);
  std::vector<QVec> out;
  for (auto& p : pts) out.push_back(inv * (D.transpose() * QVec(p - pts[0])));
  return out;
}

std::vector<std::vector<int>> triangulate(const std::vector<QVec>& pts) {
  const int d = int(pts[0].size());
  const int m = int(pts.size());
  if (m == d + 1) {
    std::vector<int> all(m);
    std::iota(all.begin(), all.end(), 0);
    return {all};
  }
  std::vector<std::vector<int>> out;
  for (auto& f : facets_of(pts)) {
    if (std::find(f.idx.begin(), f.idx.end(), 0) != f.idx.end()) continue;
    std::vector<QVec> sub;
    for (int i : f.idx) sub.push_back(pts[i]);
    auto inner = d == 1 ? std::vector<std::vector<int>>{{0}} : triangulate(local_coords(sub));
    for (auto& s : inner) {
      std::vector<int> simplex{0};
      for (int i : s) simplex.push_back(f.idx[i]);
      out.push_back(simplex);
    }
  }
  return out;
}

Int factorial(long n) {
  Int f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

Rational rational_above(double x) { return Rational(Int(std::llround(std::ceil(x * 1e6)) + 1), Int(1000000)); }

struct Cand {
  PointKind kind;
  QVec off;
  Eigen::VectorXd offd;
  Rational norm;
  double normd;
};

class Geometry {
 public:
  Geometry(long N, bool fix_only) : N_(N), fix_only_(fix_only) {
    L_ = fixed_lattice(N).lattice;
    n_ = L_.rank();
    G_ = L_.gram;
    Ginv_ = L_.dual_gram();
    Gd_ = Eigen::MatrixXd(n_, n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) Gd_(i, j) = G_(i, j).convert_to<double>();
    wdual_ = Rational(2) - Rational(2, N);
    rmax_ = fix_only ? Rational(2) + Rational(2, N) : Rational(2);
    fix_bound_ = 4 * rmax_;
    if (!fix_only) {
      double s = std::sqrt(2.0) + std::sqrt(2.0 / double(N));
      dual_bound_ = rational_above(s * s);
      GramLattice D{Ginv_, "dual"};
      for (auto& v : short_vectors(D, dual_bound_)) {
        QVec y = Ginv_ * v.coeffs;
        dual_short_.push_back({PointKind::Dual, y, to_double(y), v.norm, v.norm.convert_to<double>()});
      }
    }
  }

  long N() const { return N_; }
  int n() const { return n_; }
  const GramLattice& lattice() const { return L_; }
  const QMat& G() const { return G_; }
  const QMat& Ginv() const { return Ginv_; }
  const Eigen::MatrixXd& Gd() const { return Gd_; }
  const Rational& rmax() const { return rmax_; }
  bool fix_only() const { return fix_only_; }

  Rational weight(PointKind k) const { return k == PointKind::Fix ? Rational(0) : wdual_; }
  Rational power(const QVec& c, const RPoint& p) const { return quad(G_, QVec(c - p.pos)) + weight(p.kind); }

  const std::vector<Cand>& around(const RPoint& p) {
    QVec f = frac(p.pos);
    Key k = key_of(f);
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
    std::vector<Cand> out;
    for (auto& v : short_vectors(L_, fix_bound_, QVec(-f)))
      out.push_back({PointKind::Fix, v.coeffs, to_double(v.coeffs), v.norm, v.norm.convert_to<double>()});
    for (auto& c : dual_short_) {
      QVec x = f + c.off;
      Rational h = quad(G_, x) / 2 - Rational(1, N_);
      if (is_integer(h)) out.push_back(c);
    }
    return cache_[k] = std::move(out);
  }

 private:
  long N_;
  bool fix_only_;
  GramLattice L_;
  int n_;
  QMat G_, Ginv_;
  Eigen::MatrixXd Gd_;
  Rational wdual_, rmax_, fix_bound_, dual_bound_;
  std::vector<Cand> dual_short_;
  std::map<Key, std::vector<Cand>> cache_;
};

struct Cell {
  std::vector<RPoint> verts;
  QVec c;
  Rational r2;
};

constexpr double kTol = 1e-7;

// vertex set at centre c, given one point known to attain the minimum
Cell cell_at(Geometry& geo, const QVec& c, const RPoint& ref) {
  Cell cell;
  cell.c = c;
  cell.r2 = geo.power(c, ref);
  if (cell.r2 > geo.rmax()) throw Error("enumerate_holes: radius above bound " + cell.r2.str());
  QVec u = c - ref.pos;
  QVec gu = geo.G() * u;
  Eigen::VectorXd gud = to_double(gu);
  const Rational wref = geo.weight(ref.kind);
  for (auto& cd : geo.around(ref)) {
    Rational dw = geo.weight(cd.kind) - wref;
    double e = dw.convert_to<double>() + cd.normd - 2 * gud.dot(cd.offd);
    if (e > kTol * (1 + std::abs(cd.normd))) continue;
    Rational ex = dw + cd.norm - 2 * gu.dot(cd.off);
    if (ex < 0) throw Error("enumerate_holes: point inside the circumsphere");
    if (ex == 0) cell.verts.push_back({cd.kind, QVec(ref.pos + cd.off)});
  }
  std::sort(cell.verts.begin(), cell.verts.end(), [](const RPoint& a, const RPoint& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return key_of(a.pos) < key_of(b.pos);
  });
  return cell;
}

Cell canonical(Cell cell) {
  QVec s = floor_vec(cell.c);
  cell.c -= s;
  for (auto& v : cell.verts) v.pos -= s;
  return cell;
}

// walk inside the power diagram from the origin to a vertex
Cell initial_cell(Geometry& geo) {
  const int n = geo.n();
  RPoint origin{PointKind::Fix, QVec::Zero(n)};
  QVec c = QVec::Zero(n);
  std::vector<RPoint> A{origin};
  const auto& cands = geo.around(origin);
  long step = 0;
  while (true) {
    QMat k(A.size() - 1, n);
    for (size_t i = 1; i < A.size(); ++i) k.row(i - 1) = (geo.G() * QVec(A[i].pos - A[0].pos)).transpose();
    QMat ns = A.size() > 1 ? nullspace(k) : QMat(QMat::Identity(n, n));
    if (ns.cols() == 0) break;
    QVec u = QVec::Zero(n);
    static const long primes[] = {3, 7, 13, 19, 29, 37, 43, 53, 61, 71, 79, 89, 101, 107, 113, 131, 139, 151};
    for (Eigen::Index j = 0; j < ns.cols(); ++j) u += ns.col(j) * Rational(primes[(j + step) % 18], 1 + j);
    ++step;
    Rational pa = geo.power(c, A[0]);
    std::optional<Rational> best;
    for (auto& cd : cands) {
      RPoint q{cd.kind, cd.off};
      Rational den = 2 * bilin(geo.G(), u, QVec(q.pos - A[0].pos));
      if (den <= 0) continue;
      Rational t = (geo.power(c, q) - pa) / den;
      if (!best || t < *best) best = t;
    }
    if (!best) throw Error("enumerate_holes: unbounded walk");
    c += u * *best;
    Rational m = geo.power(c, A[0]);
    A.clear();
    for (auto& cd : cands) {
      RPoint q{cd.kind, cd.off};
      Rational p = geo.power(c, q);
      if (p < m) throw Error("enumerate_holes: walk left the origin cell");
      if (p == m) A.push_back(q);
    }
  }
  return cell_at(geo, c, origin);
}

Hole make_hole(const Cell& cell, const Geometry& geo) {
  Hole h;
  h.vertices = cell.verts;
  h.centre = cell.c;
  h.radius2 = cell.r2;
  std::vector<QVec> pts;
  for (auto& v : h.vertices) pts.push_back(v.pos);
  const int n = geo.n();
  if (rank_exact([&] {
        QMat d(pts.size() - 1, n);
        for (size_t i = 1; i < pts.size(); ++i) d.row(i - 1) = (pts[i] - pts[0]).transpose();
        return d;
      }()) != n)
    throw Error("enumerate_holes: degenerate cell");
  h.simplices = triangulate(pts);
  Rational vol = 0;
  Int nf = factorial(n);
  for (auto& s : h.simplices) {
    QMat e(n, n);
    for (int i = 0; i < n; ++i) e.col(i) = pts[s[i + 1]] - pts[s[0]];
    Rational d = det_exact(e);
    vol += abs(d);
    if (!h.centre_inside) {
      QVec bc = solve_exact(e, QVec(h.centre - pts[s[0]]));
      Rational sum = bc.sum();
      bool in = sum <= 1;
      for (int i = 0; i < n; ++i) in = in && bc(i) >= 0;
      h.centre_inside = in;
    }
  }
  h.fraction = vol / Rational(nf);
  if (!geo.fix_only()) h.diagram = diagram_from_points(h.vertices, geo.N(), geo.G());
  return h;
}

}  // namespace

bool in_R_dual(const QVec& x, long N, const QMat& gram) {
  QVec z = gram * x;
  for (Eigen::Index i = 0; i < z.size(); ++i)
    if (!is_integer(z(i))) return false;
  return is_integer(quad(gram, x) / 2 - Rational(1, N));
}

std::vector<RPoint> build_R(long N, long lo, long hi) {
  GramLattice L = fixed_lattice(N).lattice;
  const int n = L.rank();
  std::vector<RPoint> out;
  std::vector<QVec> offsets{QVec::Zero(n)};
  std::vector<PointKind> kinds{PointKind::Fix};
  for (auto& c : discriminant_classes(L))
    if (c.half_norm_mod1 == Rational(1, N)) {
      offsets.push_back(frac(c.rep));
      kinds.push_back(PointKind::Dual);
    }
  std::vector<long> x(n, lo);
  while (true) {
    QVec b(n);
    for (int i = 0; i < n; ++i) b(i) = x[i];
    for (size_t k = 0; k < offsets.size(); ++k) out.push_back({kinds[k], QVec(b + offsets[k])});
    int i = 0;
    while (i < n && ++x[i] == hi) x[i++] = lo;
    if (i == n) break;
  }
  return out;
}

std::optional<Circumcentre> circumcentre(const std::vector<RPoint>& v, long N, const QMat& gram) {
  if (v.size() < 2) return std::nullopt;
  const int n = int(gram.rows());
  auto w = [&](const RPoint& p) { return offset2(p, N); };
  // 2 c^T G (p_i - p_0) = |p_i|^2 + w_i - |p_0|^2 - w_0
  QMat a(v.size() - 1, n);
  QVec b(v.size() - 1);
  for (size_t i = 1; i < v.size(); ++i) {
    a.row(i - 1) = (2 * gram * QVec(v[i].pos - v[0].pos)).transpose();
    b(i - 1) = quad(gram, v[i].pos) + w(v[i]) - quad(gram, v[0].pos) - w(v[0]);
  }
  if (rank_exact(a) != n) return std::nullopt;
  // least-squares normal equations are exact when the system is consistent
  QMat at = a.transpose();
  QVec c = solve_exact(QMat(at * a), QVec(at * b));
  if (a * c != b) return std::nullopt;
  return Circumcentre{c, quad(gram, QVec(c - v[0].pos)) + w(v[0])};
}

Rational HoleEnumeration::unit_scale() const { return Rational(factorial(2 * M) * Int(ipow(N, int(M)))); }

std::vector<HoleType> HoleEnumeration::types() const {
  std::map<std::tuple<int, std::string, Rational, Rational>, HoleType> m;
  for (auto& h : holes) {
    DiagramClass c = h.diagram.size() ? h.diagram.cls() : DiagramClass::Other;
    Rational unit = h.fraction * unit_scale();
    auto& t = m[{c == DiagramClass::Affine ? 0 : 1, h.label(), unit, h.radius2}];
    t.label = h.label();
    t.cls = c;
    t.radius2 = h.radius2;
    t.unit = unit;
    ++t.count;
  }
  std::vector<HoleType> out;
  for (auto& [k, t] : m) out.push_back(t);
  return out;
}

HoleEnumeration enumerate_holes(long N, const HoleOptions& opt) {
  Geometry geo(N, opt.fix_only);
  HoleEnumeration e;
  e.N = N;
  e.M = leech_M(N);
  e.fix_only = opt.fix_only;
  e.lattice = geo.lattice();
  const int n = geo.n();
  std::map<Key, Cell> found;
  std::deque<Key> queue;
  Cell start = canonical(initial_cell(geo));
  found.emplace(key_of(start.c), start);
  queue.push_back(key_of(start.c));
  while (!queue.empty()) {
    Cell cell = found.at(queue.front());
    queue.pop_front();
    std::vector<QVec> pts;
    for (auto& v : cell.verts) pts.push_back(v.pos);
    for (auto& f : facets_of(pts)) {
      const RPoint& f0 = cell.verts[f.idx[0]];
      QVec kq = f.k;
      Eigen::VectorXd kd = to_double(kq);
      QVec gu = geo.G() * QVec(cell.c - f0.pos);
      Eigen::VectorXd gud = to_double(gu);
      const Rational w0 = geo.weight(f0.kind);
      const auto& cands = geo.around(f0);
      std::vector<double> td(cands.size(), INFINITY);
      double tmin = INFINITY;
      for (size_t i = 0; i < cands.size(); ++i) {
        double s = kd.dot(cands[i].offd);
        if (s < kTol) {
          if (s < -kTol || kq.dot(cands[i].off) <= 0) continue;
        }
        double ev = (geo.weight(cands[i].kind) - w0).convert_to<double>() + cands[i].normd - 2 * gud.dot(cands[i].offd);
        td[i] = ev / (2 * s);
        tmin = std::min(tmin, td[i]);
      }
      if (!std::isfinite(tmin)) throw Error("enumerate_holes: no point beyond a facet");
      std::optional<Rational> best;
      for (size_t i = 0; i < cands.size(); ++i) {
        if (!(td[i] <= tmin + kTol * (1 + std::abs(tmin)))) continue;
        Rational s = kq.dot(cands[i].off);
        if (s <= 0) continue;
        Rational ev = geo.weight(cands[i].kind) - w0 + cands[i].norm - 2 * gu.dot(cands[i].off);
        Rational t = ev / (2 * s);
        if (!best || t < *best) best = t;
      }
      QVec c2 = cell.c + geo.Ginv() * kq * *best;
      Cell next = canonical(cell_at(geo, c2, f0));
      Key k = key_of(next.c);
      if (found.emplace(k, next).second) {
        queue.push_back(k);
        if (found.size() > opt.max_holes) throw Error("enumerate_holes: too many holes");
      }
    }
  }
  for (auto& [k, cell] : found) e.holes.push_back(make_hole(cell, geo));
  (void)n;
  return e;
}

VolumeCheck hole_volume(const Hole& h, long N) {
  const long M = leech_M(N);
  VolumeCheck v;
  v.direct = h.fraction * Rational(factorial(2 * M) * Int(ipow(N, int(M))));
  Rational sq = ipow(N, int(M));
  DiagramClass cls = h.diagram.cls();
  Rational rho = 0;
  for (auto& c : h.diagram.comps) {
    if (c.name == "unknown") {
      v.exact_square = false;
      return v;
    }
    CatalogEntry e = catalog_lookup(c.name, c.long_nodes, N);
    sq *= e.det;
    if (cls == DiagramClass::Affine)
      sq *= e.hvee * e.hvee;
    else
      rho += e.rho2;
  }
  if (cls != DiagramClass::Affine) sq *= rho;
  Int a = boost::multiprecision::sqrt(num(sq)), b = boost::multiprecision::sqrt(den(sq));
  v.exact_square = a * a == num(sq) && b * b == den(sq);
  v.catalog = Rational(a, b);
  return v;
}

VolumeAudit volume_audit(const HoleEnumeration& e, const std::map<std::string, std::pair<Rational, long>>& expected) {
  VolumeAudit a;
  a.N = e.N;
  a.expected = e.unit_scale();
  std::map<std::string, std::pair<Rational, long>> got;
  for (auto& t : e.types()) {
    a.total += t.total();
    auto& g = got[t.label];
    if (g.second && g.first != t.unit) a.diffs.push_back(t.label + ": two unit volumes");
    g.first = t.unit;
    g.second += t.count;
  }
  for (auto& h : e.holes) {
    VolumeCheck v = hole_volume(h, e.N);
    if (!v.ok()) {
      a.diffs.push_back(h.label() + ": catalog volume " + v.catalog.str() + " vs direct " + v.direct.str());
      break;
    }
  }
  if (!expected.empty()) {
    for (auto& [l, p] : expected) {
      auto it = got.find(l);
      if (it == got.end())
        a.diffs.push_back(l + ": missing");
      else if (it->second != p)
        a.diffs.push_back(l + ": unit " + it->second.first.str() + " count " + std::to_string(it->second.second) +
                          ", expected unit " + p.first.str() + " count " + std::to_string(p.second));
    }
    for (auto& [l, p] : got)
      if (!expected.count(l)) a.diffs.push_back(l + ": unexpected type");
  }
  return a;
}

std::vector<std::vector<int>> faces(const Hole& h) {
  const int m = int(h.vertices.size());
  std::vector<std::vector<int>> out;
  if (h.diagram.cls() != DiagramClass::Affine) {
    for (int d = 0; d < m; ++d) {
      std::vector<int> f;
      for (int j = 0; j < m; ++j)
        if (j != d) f.push_back(j);
      out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  const auto& comps = h.diagram.comps;
  std::vector<size_t> choice(comps.size(), 0);
  while (true) {
    std::vector<bool> drop(m, false);
    for (size_t c = 0; c < comps.size(); ++c) drop[comps[c].nodes[choice[c]]] = true;
    std::vector<int> f;
    for (int j = 0; j < m; ++j)
      if (!drop[j]) f.push_back(j);
    out.push_back(f);
    size_t c = 0;
    while (c < comps.size() && ++choice[c] == comps[c].nodes.size()) choice[c++] = 0;
    if (c == comps.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> hull_facets(const Hole& h) {
  std::vector<QVec> pts;
  for (auto& v : h.vertices) pts.push_back(v.pos);
  std::vector<std::vector<int>> out;
  for (auto& f : facets_of(pts)) out.push_back(f.idx);
  std::sort(out.begin(), out.end());
  return out;
}

CoveringReport covering_radius_check(long N) {
  HoleOptions opt;
  opt.fix_only = true;
  HoleEnumeration e = enumerate_holes(N, opt);
  CoveringReport r;
  r.N = N;
  r.cells = long(e.holes.size());
  for (auto& h : e.holes) r.max_radius2 = std::max(r.max_radius2, h.radius2);
  for (auto& h : e.holes)
    if (h.radius2 == r.max_radius2) {
      ++r.maximizers;
      r.maximizers_dual = r.maximizers_dual && in_R_dual(h.centre, N, e.lattice.gram);
    }
  return r;
}

long holes_containing(const HoleEnumeration& e, const QVec& x) {
  long count = 0;
  const int n = e.lattice.rank();
  const Rational bound = e.fix_only ? Rational(2) + Rational(2, e.N) : Rational(2);
  for (auto& h : e.holes) {
    for (auto& t : short_vectors(e.lattice, bound, QVec(h.centre - x))) {
      QVec shift = t.coeffs - QVec(h.centre - x);
      QVec y = x - shift;  // test y against the untranslated hole
      for (auto& s : h.simplices) {
        QMat m(n, n);
        for (int i = 0; i < n; ++i) m.col(i) = h.vertices[s[i + 1]].pos - h.vertices[s[0]].pos;
        QVec bc = solve_exact(m, QVec(y - h.vertices[s[0]].pos));
        bool in = bc.sum() <= 1;
        for (int i = 0; i < n && in; ++i) in = bc(i) >= 0;
        if (in) {
          ++count;
          break;
        }
      }
    }
  }
  return count;
}

bool maps_holes_to_holes(const HoleEnumeration& e, const QMat& g) {
  const QMat& G = e.lattice.gram;
  if (QMat(g.transpose() * G * g) != G) return false;
  std::map<Key, const Hole*> by_centre;
  for (auto& h : e.holes) by_centre[key_of(h.centre)] = &h;
  for (auto& h : e.holes) {
    QVec c = g * h.centre;
    QVec s = floor_vec(c);
    auto it = by_centre.find(key_of(QVec(c - s)));
    if (it == by_centre.end()) return false;
    std::set<std::pair<int, Key>> a, b;
    for (auto& v : h.vertices) a.insert({int(v.kind), key_of(QVec(g * v.pos - s))});
    for (auto& v : it->second->vertices) b.insert({int(v.kind), key_of(v.pos)});
    if (a != b) return false;
  }
  return true;
}

std::vector<QMat> n11_point_maps() {
  FixedLattice F = fixed_lattice(11);
  const QMat& fc = F.fc;  // rows (f1, f2; c1, c2)
  auto conj = [&](const QMat& t) {
    QMat ft = fc.transpose();
    QMat a = inverse_exact(ft) * t * ft;
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j)
        if (!is_integer(a(i, j))) throw Error("n11_point_maps: map not integral on the lattice");
    return a;
  };
  QMat minus = -QMat::Identity(4, 4);
  QMat sign = QMat::Identity(4, 4);
  sign(1, 1) = -1;
  sign(3, 3) = -1;
  QMat swap = QMat::Zero(4, 4);
  swap(0, 1) = swap(1, 0) = swap(2, 3) = swap(3, 2) = 1;
  // the order-3 map, entries with sqrt(11) moved between the f and c blocks
  QMat phi(4, 4);
  phi << Rational(1, 2), Rational(1, 4), 0, Rational(-11, 4),
      Rational(-1, 4), Rational(1, 2), Rational(11, 4), 0,
      0, Rational(-1, 4), Rational(1, 2), Rational(-1, 4),
      Rational(1, 4), 0, Rational(1, 4), Rational(1, 2);
  return {conj(minus), conj(sign), conj(swap), conj(phi)};
}

std::size_t group_order(const std::vector<QMat>& gens, std::size_t limit) {
  if (gens.empty()) return 1;
  const int n = int(gens[0].rows());
  auto key = [](const QMat& m) { return Key(m.data(), m.data() + m.size()); };
  std::set<Key> seen;
  std::deque<QMat> q;
  QMat id = QMat::Identity(n, n);
  seen.insert(key(id));
  q.push_back(id);
  while (!q.empty()) {
    QMat m = q.front();
    q.pop_front();
    for (auto& g : gens) {
      QMat p = g * m;
      if (seen.insert(key(p)).second) {
        if (seen.size() > limit) return 0;
        q.push_back(p);
      }
    }
  }
  return seen.size();
}

std::string holes_tsv(const HoleEnumeration& e) {
  std::ostringstream os;
  os << "type\tradius2\tunit\tcount\n";
  for (auto& t : e.types()) os << t.label << '\t' << t.radius2.str() << '\t' << t.unit.str() << '\t' << t.count << '\n';
  return os.str();
}

std::string holes_json(const HoleEnumeration& e) {
  using nlohmann::json;
  auto vec = [](const QVec& v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i).str());
    return a;
  };
  json j;
  j["N"] = e.N;
  j["unit"] = "((2M)! sqrt(N)^M)^-1";
  j["types"] = json::array();
  for (auto& t : e.types())
    j["types"].push_back({{"type", t.label}, {"class", to_string(t.cls)}, {"radius2", t.radius2.str()},
                          {"unit", t.unit.str()}, {"count", t.count}});
  j["holes"] = json::array();
  for (auto& h : e.holes) {
    json v = json::array();
    for (auto& p : h.vertices) v.push_back({{"kind", p.kind == PointKind::Fix ? "fix" : "dual"}, {"pos", vec(p.pos)}});
    j["holes"].push_back({{"type", h.label()}, {"centre", vec(h.centre)}, {"radius2", h.radius2.str()}, {"vertices", v}});
  }
  return j.dump(1);
}

}  // namespace gkm
