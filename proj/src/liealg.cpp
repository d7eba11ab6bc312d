#include "gkm/liealg.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <regex>
#include <sstream>

namespace gkm {

namespace {

struct Builder {
  QMat b;
  explicit Builder(const std::vector<long>& norms) : b(QMat::Zero(norms.size(), norms.size())) {
    for (size_t i = 0; i < norms.size(); ++i) b(i, i) = norms[i];
  }
  Builder& edge(int i, int j, long bonds) {
    Rational m = std::min(b(i, i), b(j, j));
    b(i, j) = b(j, i) = -Rational(bonds) * m / 2;
    return *this;
  }
  Builder& path(int from, int to) {
    for (int i = from; i < to; ++i) edge(i, i + 1, 1);
    return *this;
  }
};

std::vector<long> norms(int n, long v) { return std::vector<long>(n, v); }

Int gcd_int(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

QMat principal(const QMat& b, const std::vector<int>& idx) {
  QMat s(idx.size(), idx.size());
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < idx.size(); ++j) s(i, j) = b(idx[i], idx[j]);
  return s;
}

std::vector<int> all_but(int n, int k) {
  std::vector<int> v;
  for (int i = 0; i < n; ++i)
    if (i != k) v.push_back(i);
  return v;
}

bool affine_component(const QMat& b) {
  const int n = int(b.rows());
  if (n < 2) return false;
  if (det_exact(b) != 0) return false;
  for (int k = 0; k < n; ++k)
    if (!positive_definite(principal(b, all_but(n, k)))) return false;
  return true;
}

struct ParsedName {
  char letter;
  int n;
  int twist;  // 1 untwisted
};

ParsedName parse_name(const std::string& name) {
  static const std::regex re("([abcdefgABCDEFG])([0-9]+)(\\^\\(([23])\\))?");
  std::smatch m;
  if (!std::regex_match(name, m, re)) throw Error("catalog: unknown label " + name);
  ParsedName p{m[1].str()[0], std::stoi(m[2].str()), m[4].matched ? std::stoi(m[4].str()) : 1};
  return p;
}

// validity of a parsed name, with the finite rank it stands for
std::optional<int> finite_rank(const ParsedName& p) {
  const bool affine = std::isupper(static_cast<unsigned char>(p.letter));
  const char l = char(std::tolower(static_cast<unsigned char>(p.letter)));
  const int n = p.n;
  if (p.twist == 1) {
    switch (l) {
      case 'a': return n >= 1 ? std::optional<int>(n) : std::nullopt;
      case 'b': return n >= 3 ? std::optional<int>(n) : std::nullopt;
      case 'c': return n >= 2 ? std::optional<int>(n) : std::nullopt;
      case 'd': return n >= 4 ? std::optional<int>(n) : std::nullopt;
      case 'e': return n >= 6 && n <= 8 ? std::optional<int>(n) : std::nullopt;
      case 'f': return n == 4 ? std::optional<int>(4) : std::nullopt;
      case 'g': return n == 2 ? std::optional<int>(2) : std::nullopt;
    }
    return std::nullopt;
  }
  if (!affine) return std::nullopt;
  if (p.twist == 2 && l == 'a' && n % 2 == 1 && n >= 5) return (n + 1) / 2;
  if (p.twist == 2 && l == 'd' && n >= 3) return n - 1;
  if (p.twist == 2 && l == 'e' && n == 6) return 4;
  if (p.twist == 3 && l == 'd' && n == 4) return 2;
  return std::nullopt;
}

std::map<int, std::vector<std::pair<std::string, std::string>>>& cert_cache() {
  static std::map<int, std::vector<std::pair<std::string, std::string>>> c;
  return c;
}
std::mutex cert_mutex;

const std::vector<std::pair<std::string, std::string>>& catalog_certs(int nodes) {
  std::lock_guard<std::mutex> lock(cert_mutex);
  auto& c = cert_cache();
  auto it = c.find(nodes);
  if (it != c.end()) return it->second;
  std::vector<std::pair<std::string, std::string>> v;
  for (auto& n : catalog_names(nodes)) v.emplace_back(certificate(catalog_matrix(n)), n);
  return c[nodes] = v;
}

std::string recognise(const QMat& b) {
  const auto& certs = catalog_certs(int(b.rows()));
  const std::string c = certificate(b);
  for (auto& [cc, name] : certs)
    if (cc == c) return name;
  return "unknown";
}

}  // namespace

Rational offset2(const RPoint& p, long N) {
  return p.kind == PointKind::Fix ? Rational(0) : Rational(2) - Rational(2, N);
}

std::string to_string(DiagramClass c) {
  switch (c) {
    case DiagramClass::Finite: return "finite";
    case DiagramClass::Affine: return "affine";
    case DiagramClass::Hyperbolic: return "hyperbolic";
    default: return "other";
  }
}

bool positive_definite(const QMat& b) {
  const Eigen::Index n = b.rows();
  for (Eigen::Index k = 1; k <= n; ++k)
    if (det_exact(QMat(b.topLeftCorner(k, k))) <= 0) return false;
  return true;
}

std::vector<std::vector<int>> components(const QMat& b) {
  const int n = int(b.rows());
  std::vector<int> seen(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (seen[s] >= 0) continue;
    std::vector<int> comp{s};
    seen[s] = int(out.size());
    for (size_t k = 0; k < comp.size(); ++k)
      for (int j = 0; j < n; ++j)
        if (seen[j] < 0 && b(comp[k], j) != 0) {
          seen[j] = seen[s];
          comp.push_back(j);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(comp);
  }
  return out;
}

DiagramClass classify(const QMat& b) {
  const int n = int(b.rows());
  if (positive_definite(b)) return DiagramClass::Finite;
  auto comps = components(b);
  bool all_affine = true;
  for (auto& c : comps) all_affine = all_affine && affine_component(principal(b, c));
  if (all_affine) return DiagramClass::Affine;
  if (comps.size() != 1) return DiagramClass::Other;
  // indefinite and every proper principal subdiagram finite or affine
  for (int k = 0; k < n; ++k) {
    QMat s = principal(b, all_but(n, k));
    for (auto& c : components(s)) {
      QMat t = principal(s, c);
      if (!positive_definite(t) && !affine_component(t)) return DiagramClass::Other;
    }
  }
  return DiagramClass::Hyperbolic;
}

long DynkinDiagram::bonds(int i, int j) const {
  if (i == j || b(i, j) == 0) return 0;
  Rational aij = 2 * b(i, j) / b(i, i), aji = 2 * b(i, j) / b(j, j);
  Rational m = std::max(abs(aij), abs(aji));
  if (!is_integer(m)) throw Error("diagram: non-integral Cartan entry");
  return num(m).convert_to<long>();
}

bool DynkinDiagram::arrow_toward(int i, int j) const {
  if (bonds(i, j) < 2) return false;
  return b(j, j) <= b(i, i);
}

DiagramClass DynkinDiagram::cls() const { return classify(b); }

std::string DynkinDiagram::label() const {
  std::vector<std::pair<std::tuple<int, int, std::string>, std::string>> parts;
  for (auto& c : comps) {
    std::string l = (c.long_nodes ? "N*" : "") + c.name;
    parts.push_back({{c.long_nodes ? 1 : 0, -int(c.nodes.size()), c.name}, l});
  }
  std::sort(parts.begin(), parts.end());
  std::ostringstream os;
  for (size_t i = 0; i < parts.size();) {
    size_t j = i;
    while (j < parts.size() && parts[j].second == parts[i].second) ++j;
    if (i) os << ' ';
    os << parts[i].second;
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

DynkinDiagram diagram_from_matrix(const QMat& b, long N) {
  DynkinDiagram d;
  d.N = N;
  d.b = b;
  const int n = int(b.rows());
  d.is_long.assign(n, false);
  for (int i = 0; i < n; ++i) d.is_long[i] = N > 1 && b(i, i) == 2 * N;
  for (auto& nodes : components(b)) {
    ComponentInfo c;
    c.nodes = nodes;
    QMat s = principal(b, nodes);
    c.long_nodes = N > 1 && std::all_of(nodes.begin(), nodes.end(), [&](int i) { return d.is_long[i]; });
    Rational m = s.diagonal().minCoeff();
    QMat norm = s * (Rational(2) / m);
    c.cls = positive_definite(s) ? DiagramClass::Finite
            : affine_component(s) ? DiagramClass::Affine
                                  : DiagramClass::Other;
    c.name = c.cls == DiagramClass::Other ? "unknown" : recognise(norm);
    if (c.cls == DiagramClass::Finite) {
      c.rho2 = rho_squared(s);
      c.det = coroot_det(s);
    } else if (c.cls == DiagramClass::Affine) {
      c.hvee = dual_coxeter(s);
      auto delta = null_root(s);
      int sp = -1;
      for (int i = 0; i < int(nodes.size()); ++i)
        if (delta[i] == 1 && (sp < 0 || s(i, i) < s(sp, sp))) sp = i;
      c.det = coroot_det(principal(s, all_but(int(nodes.size()), sp)));
    }
    d.comps.push_back(c);
  }
  return d;
}

Rational point_product(const RPoint& a, const RPoint& b, long N, const QMat& gram) {
  QVec diff = a.pos - b.pos;
  Rational d2 = quad(gram, diff);
  if (a.kind == PointKind::Fix && b.kind == PointKind::Fix) return 2 - d2 / 2;
  if (a.kind == PointKind::Dual && b.kind == PointKind::Dual) return Rational(2 * N) - Rational(N * N) * d2 / 2;
  return Rational(N + 1) - Rational(N) * d2 / 2;
}

DynkinDiagram diagram_from_points(const std::vector<RPoint>& pts, long N, const QMat& gram) {
  const int n = int(pts.size());
  QMat b(n, n);
  for (int i = 0; i < n; ++i) {
    b(i, i) = pts[i].kind == PointKind::Fix ? Rational(2) : Rational(2 * N);
    for (int j = i + 1; j < n; ++j) {
      Rational d2 = quad(gram, QVec(pts[i].pos - pts[j].pos));
      bool ok;
      if (pts[i].kind == PointKind::Fix && pts[j].kind == PointKind::Fix)
        ok = d2 == 4 || d2 == 6 || d2 == 8;
      else if (pts[i].kind == PointKind::Dual && pts[j].kind == PointKind::Dual)
        ok = d2 * N == 4 || d2 * N == 6 || d2 * N == 8;
      else
        ok = d2 == 2 + Rational(2, N) || d2 == 4 + Rational(2, N);
      if (!ok) throw Error("diagram_from_points: inadmissible squared distance " + d2.str());
      b(i, j) = b(j, i) = point_product(pts[i], pts[j], N, gram);
    }
  }
  return diagram_from_matrix(b, N);
}

Rational rho_squared(const QMat& b) {
  QVec h = b.diagonal() / Rational(2);
  QVec c = solve_exact(b, h);
  return c.dot(h);
}

Rational coroot_det(const QMat& b) {
  Rational d = det_exact(b);
  for (Eigen::Index i = 0; i < b.rows(); ++i) d *= Rational(4) / (b(i, i) * b(i, i));
  return d;
}

std::vector<long> null_root(const QMat& b) {
  const int n = int(b.rows());
  std::vector<int> rest = all_but(n, 0);
  QMat s = principal(b, rest);
  QVec rhs(n - 1);
  for (int i = 0; i < n - 1; ++i) rhs(i) = -b(rest[i], 0);
  QVec x = solve_exact(s, rhs);
  std::vector<Rational> v(n);
  v[0] = 1;
  for (int i = 1; i < n; ++i) v[i] = x(i - 1);
  Int l = 1;
  for (auto& r : v) l = l / gcd_int(l, den(r)) * den(r);
  Int g = 0;
  for (auto& r : v) g = gcd_int(g, num(r * Rational(l)));
  std::vector<long> out(n);
  for (int i = 0; i < n; ++i) out[i] = num(v[i] * Rational(l) / Rational(g)).convert_to<long>();
  if (out[0] < 0)
    for (auto& o : out) o = -o;
  return out;
}

Rational dual_coxeter(const QMat& b) {
  auto delta = null_root(b);
  Rational total = 0;
  int sp = -1;
  for (int i = 0; i < int(delta.size()); ++i) {
    total += Rational(delta[i]) * b(i, i);
    if (delta[i] == 1 && (sp < 0 || b(i, i) < b(sp, sp))) sp = i;
  }
  return total / b(sp, sp);
}

std::string certificate(const QMat& b) {
  const int n = int(b.rows());
  Rational m = b.diagonal().minCoeff();
  std::vector<int> deg(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && b(i, j) != 0) ++deg[i];
  DynkinDiagram d;
  d.b = b;
  std::vector<std::string> nodes;
  for (int i = 0; i < n; ++i) {
    std::vector<std::string> nb;
    for (int j = 0; j < n; ++j)
      if (i != j && b(i, j) != 0)
        nb.push_back(std::to_string(d.bonds(i, j)) + "/" + Rational(b(j, j) / m).str() + "/" + std::to_string(deg[j]));
    std::sort(nb.begin(), nb.end());
    std::string s = Rational(b(i, i) / m).str() + ":" + std::to_string(deg[i]) + "[";
    for (auto& x : nb) s += x + ",";
    nodes.push_back(s + "]");
  }
  std::sort(nodes.begin(), nodes.end());
  // diameter by breadth-first search from every node
  int diam = 0;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1);
    std::vector<int> q{s};
    dist[s] = 0;
    for (size_t k = 0; k < q.size(); ++k)
      for (int j = 0; j < n; ++j)
        if (dist[j] < 0 && b(q[k], j) != 0) {
          dist[j] = dist[q[k]] + 1;
          q.push_back(j);
          diam = std::max(diam, dist[j]);
        }
  }
  std::string out;
  for (auto& s : nodes) out += s + ";";
  return out + "diam=" + std::to_string(diam);
}

QMat catalog_matrix(const std::string& name) {
  ParsedName p = parse_name(name);
  auto fr = finite_rank(p);
  if (!fr) throw Error("catalog: unknown label " + name);
  const int n = *fr;
  const bool affine = std::isupper(static_cast<unsigned char>(p.letter));
  const char l = char(std::tolower(static_cast<unsigned char>(p.letter)));
  if (p.twist == 2 && l == 'a') {
    auto v = norms(n + 1, 2);
    v[n] = 4;
    Builder bl(v);
    bl.edge(0, 2, 1).path(1, n - 1).edge(n - 1, n, 2);
    return bl.b;
  }
  if (p.twist == 2 && l == 'd') {
    auto v = norms(n + 1, 4);
    v[0] = v[n] = 2;
    Builder bl(v);
    bl.edge(0, 1, 2).path(1, n - 1).edge(n - 1, n, 2);
    return bl.b;
  }
  if (p.twist == 2 && l == 'e') return Builder({2, 2, 2, 4, 4}).path(0, 2).edge(2, 3, 2).edge(3, 4, 1).b;
  if (p.twist == 3) return Builder({2, 2, 6}).edge(0, 1, 1).edge(1, 2, 3).b;
  if (!affine) {
    switch (l) {
      case 'a': return Builder(norms(n, 2)).path(0, n - 1).b;
      case 'b': {
        auto v = norms(n, 4);
        v[n - 1] = 2;
        return Builder(v).path(0, n - 2).edge(n - 2, n - 1, 2).b;
      }
      case 'c': {
        auto v = norms(n, 2);
        v[n - 1] = 4;
        return Builder(v).path(0, n - 2).edge(n - 2, n - 1, 2).b;
      }
      case 'd': return Builder(norms(n, 2)).path(0, n - 2).edge(n - 3, n - 1, 1).b;
      case 'e': return Builder(norms(n, 2)).path(0, n - 2).edge(2, n - 1, 1).b;
      case 'f': return Builder({4, 4, 2, 2}).edge(0, 1, 1).edge(1, 2, 2).edge(2, 3, 1).b;
      case 'g': return Builder({6, 2}).edge(0, 1, 3).b;
    }
  }
  switch (l) {
    case 'a':
      if (n == 1) return Builder({2, 2}).edge(0, 1, 2).b;
      return Builder(norms(n + 1, 2)).path(0, n).edge(n, 0, 1).b;
    case 'b': {
      auto v = norms(n + 1, 4);
      v[n] = 2;
      return Builder(v).edge(0, 2, 1).path(1, n - 1).edge(n - 1, n, 2).b;
    }
    case 'c': {
      auto v = norms(n + 1, 2);
      v[0] = v[n] = 4;
      return Builder(v).edge(0, 1, 2).path(1, n - 1).edge(n - 1, n, 2).b;
    }
    case 'd': return Builder(norms(n + 1, 2)).edge(0, 2, 1).path(1, n - 1).edge(n - 2, n, 1).b;
    case 'e':
      if (n == 6) return Builder(norms(7, 2)).path(0, 4).edge(2, 5, 1).edge(5, 6, 1).b;
      if (n == 7) return Builder(norms(8, 2)).path(0, 6).edge(3, 7, 1).b;
      return Builder(norms(9, 2)).path(0, 7).edge(2, 8, 1).b;
    case 'f': return Builder({4, 4, 4, 2, 2}).path(0, 2).edge(2, 3, 2).edge(3, 4, 1).b;
    case 'g': return Builder({6, 6, 2}).edge(0, 1, 1).edge(1, 2, 3).b;
  }
  throw Error("catalog: unknown label " + name);
}

std::vector<std::string> catalog_names(int nodes) {
  std::vector<std::string> out;
  auto add = [&](const std::string& s) {
    if (finite_rank(parse_name(s))) {
      int k = int(catalog_matrix(s).rows());
      if (k == nodes) out.push_back(s);
    }
  };
  for (char c : std::string("abcdefg")) {
    add(std::string(1, c) + std::to_string(nodes));
    add(std::string(1, char(std::toupper(c))) + std::to_string(nodes - 1));
  }
  if (nodes < 2) return out;
  add("A" + std::to_string(2 * (nodes - 1) - 1) + "^(2)");
  add("D" + std::to_string(nodes) + "^(2)");
  add("E6^(2)");
  add("D4^(3)");
  return out;
}

CatalogEntry catalog_lookup(const std::string& name, bool long_component, long N) {
  ParsedName p = parse_name(name);
  auto fr = finite_rank(p);
  if (!fr) throw Error("catalog: unknown label " + name);
  const int n = *fr;
  CatalogEntry e;
  e.name = name;
  e.rank = n;
  e.affine = std::isupper(static_cast<unsigned char>(p.letter));
  const char l = char(std::tolower(static_cast<unsigned char>(p.letter)));
  const Rational rn(n);
  auto pow2 = [](int k) { return k >= 0 ? Rational(Int(1) << k) : Rational(1) / Rational(Int(1) << -k); };
  if (p.twist == 2 && l == 'a') {
    e.hvee = 2 * n;
    e.det = 1;
  } else if (p.twist == 2 && l == 'd') {
    e.hvee = 2 * n;
    e.det = pow2(2 - n);
  } else if (p.twist == 2) {
    e.hvee = 12;
    e.det = Rational(1, 4);
  } else if (p.twist == 3) {
    e.hvee = 6;
    e.det = Rational(1, 3);
  } else {
    switch (l) {
      case 'a':
        e.rho2 = rn * (rn + 1) * (rn + 2) / 12;
        e.det = rn + 1;
        e.hvee = rn + 1;
        break;
      case 'b':
        e.rho2 = rn * (2 * rn - 1) * (2 * rn + 1) / 6;
        e.det = pow2(2 - n);
        e.hvee = 2 * rn - 1;
        break;
      case 'c':
        e.rho2 = rn * (rn + 1) * (2 * rn + 1) / 6;
        e.det = 1;
        e.hvee = rn + 1;
        break;
      case 'd':
        e.rho2 = (rn - 1) * rn * (2 * rn - 1) / 6;
        e.det = 4;
        e.hvee = 2 * rn - 2;
        break;
      case 'e':
        e.rho2 = n == 6 ? Rational(78) : n == 7 ? Rational(399, 2) : Rational(620);
        e.det = 9 - n;
        e.hvee = n == 6 ? 12 : n == 7 ? 18 : 30;
        break;
      case 'f':
        e.rho2 = 78;
        e.det = Rational(1, 4);
        e.hvee = 9;
        break;
      case 'g':
        e.rho2 = 14;
        e.det = Rational(1, 3);
        e.hvee = 4;
        break;
    }
  }
  if (e.affine)
    e.rho2 = 0;
  else
    e.hvee = 0;
  if (long_component) {
    e.det /= Rational(ipow(N, n));
    e.rho2 *= N;
  }
  return e;
}

}  // namespace gkm
