#include <doctest.h>

#include "gkm/holes.hpp"
#include "gkm/leech.hpp"

#include <random>

using namespace gkm;

namespace {

const HoleEnumeration& holes23() {
  static const HoleEnumeration e = enumerate_holes(23);
  return e;
}
const HoleEnumeration& holes11() {
  static const HoleEnumeration e = enumerate_holes(11);
  return e;
}

std::map<std::string, std::pair<Rational, long>> table(const HoleEnumeration& e) {
  std::map<std::string, std::pair<Rational, long>> m;
  for (auto& t : e.types()) m[t.label] = {t.unit, t.count};
  return m;
}

Rational gen_power(const QVec& c, const RPoint& p, long N, const QMat& g) {
  return quad(g, QVec(c - p.pos)) + offset2(p, N);
}

}  // namespace

TEST_CASE("R near the fundamental cell") {
  GramLattice L = fixed_lattice(23).lattice;
  auto R = build_R(23);
  bool n1 = false, n2 = false;
  long dual = 0;
  for (auto& p : R) {
    if (p.kind != PointKind::Dual) continue;
    ++dual;
    CHECK(in_R_dual(p.pos, 23, L.gram));
    Rational n = quad(L.gram, p.pos);
    n1 = n1 || n == Rational(48, 23);
    n2 = n2 || n == Rational(94, 23);
  }
  CHECK(n1);
  CHECK(n2);
  // two classes of half-norm 1/23 per cell
  CHECK(dual == 2 * 25);

  GramLattice L11 = fixed_lattice(11).lattice;
  long short_dual = 0;
  for (auto& p : build_R(11))
    if (p.kind == PointKind::Dual && quad(L11.gram, p.pos) == Rational(24, 11)) ++short_dual;
  CHECK(short_dual == 72);
  long sol = 0;
  for (long a = 0; a < 11; ++a)
    for (long b = 0; b < 11; ++b) sol += (a * a + b * b) % 11 == 8;
  CHECK(sol == 12);
}

TEST_CASE("N=23 decomposition") {
  const auto& e = holes23();
  CHECK(e.holes.size() == 5);
  auto t = table(e);
  CHECK(t.size() == 3);
  CHECK(t["A1 N*A1"] == std::pair<Rational, long>(8, 1));
  CHECK(t["a1^2 N*a1"] == std::pair<Rational, long>(10, 2));
  CHECK(t["a2 N*a1"] == std::pair<Rational, long>(9, 2));
  auto a = volume_audit(e, t);
  CHECK(a.ok());
  CHECK(a.total == 46);
}

TEST_CASE("N=11 decomposition") {
  const auto& e = holes11();
  std::map<std::string, std::pair<Rational, long>> expected = {
      {"A2 N*A2", {27, 4}},       {"A1^2 N*A1^2", {64, 3}},    {"a3 N*a2", {18, 24}},
      {"a3 a1 N*a1", {44, 24}},   {"a3 N*a1^2", {16, 12}},     {"a2 a1 N*a2", {21, 12}},
      {"a2 a1 N*a1^2", {18, 24}}, {"a1^3 N*a1^2", {20, 12}}};
  auto a = volume_audit(e, expected);
  for (auto& d : a.diffs) MESSAGE(d);
  CHECK(a.ok());
  CHECK(a.total == 24 * 121);
}

TEST_CASE("hole invariants") {
  for (const HoleEnumeration* e : {&holes23(), &holes11()}) {
    const long N = e->N;
    const QMat& g = e->lattice.gram;
    auto R = build_R(N);
    for (auto& h : e->holes) {
      CAPTURE(h.label());
      for (auto& v : h.vertices) CHECK(gen_power(h.centre, v, N, g) == h.radius2);
      CHECK(h.radius2 <= 2);
      DiagramClass c = h.diagram.cls();
      CHECK((c == DiagramClass::Affine) == (h.radius2 == 2));
      CHECK((c == DiagramClass::Finite) == (h.radius2 < 2));
      CHECK(h.centre_inside);
      // nothing in the window is closer than the vertices
      Rational best = h.radius2;
      for (auto& p : R) best = std::min(best, gen_power(h.centre, p, N, g));
      CHECK(best == h.radius2);
      VolumeCheck v = hole_volume(h, N);
      CHECK(v.ok());
      if (c == DiagramClass::Finite) {
        CHECK(h.vertices.size() == size_t(2 * e->M + 1));
        Rational rho = 0;
        for (auto& comp : h.diagram.comps) rho += catalog_lookup(comp.name, comp.long_nodes, N).rho2;
        CHECK(h.radius2 == 2 - 1 / rho);
        auto cc = circumcentre(h.vertices, N, g);
        REQUIRE(cc);
        CHECK(cc->centre == h.centre);
        CHECK(cc->radius2 == h.radius2);
      }
    }
  }
}

TEST_CASE("circumcentre of an affine vertex set") {
  for (auto& h : holes23().holes) {
    if (h.label() != "A1 N*A1") continue;
    auto cc = circumcentre(h.vertices, 23, holes23().lattice.gram);
    REQUIRE(cc);
    CHECK(cc->radius2 == 2);
  }
  // collinear points have no unique centre
  QVec a = QVec::Zero(2), b(2), c(2);
  b << 1, 0;
  c << 2, 0;
  CHECK_FALSE(circumcentre({{PointKind::Fix, a}, {PointKind::Fix, b}, {PointKind::Fix, c}}, 23,
                           holes23().lattice.gram));
}

TEST_CASE("faces") {
  for (auto& h : holes11().holes) {
    auto f = faces(h);
    CHECK(f == hull_facets(h));
    if (h.diagram.cls() == DiagramClass::Finite) CHECK(f.size() == 5);
    if (h.label() == "A2 N*A2") CHECK(f.size() == 9);
    if (h.label() == "A1^2 N*A1^2") CHECK(f.size() == 16);
    for (auto& face : f) {
      std::vector<RPoint> pts;
      for (int i : face) pts.push_back(h.vertices[i]);
      CHECK(diagram_from_points(pts, 11, holes11().lattice.gram).cls() == DiagramClass::Finite);
    }
  }
}

TEST_CASE("holes partition space") {
  // distinct prime denominators keep the samples off every rational facet
  const long primes[] = {997, 991, 983, 977};
  std::mt19937_64 rng(1234);
  for (const HoleEnumeration* e : {&holes23(), &holes11()}) {
    const int n = e->lattice.rank();
    long ok = 0;
    for (int s = 0; s < 1000; ++s) {
      QVec x(n);
      for (int i = 0; i < n; ++i)
        x(i) = Rational(std::uniform_int_distribution<long>(1, primes[i] - 1)(rng), primes[i]);
      ok += holes_containing(*e, x) == 1;
    }
    CHECK(ok == 1000);
  }
}

TEST_CASE("covering radius") {
  for (long N : {23L, 11L}) {
    auto r = covering_radius_check(N);
    CHECK(r.max_radius2 == 2 + Rational(2, N));
    CHECK(r.maximizers > 0);
    CHECK(r.maximizers_dual);
  }
}

TEST_CASE("N=11 point group") {
  auto maps = n11_point_maps();
  REQUIRE(maps.size() == 4);
  std::size_t order = group_order(maps);
  CHECK(order > 0);
  CHECK(24 % order == 0);
  for (auto& g : maps) CHECK(maps_holes_to_holes(holes11(), g));
  auto R = build_R(11, -1, 2);
  const QMat& gram = holes11().lattice.gram;
  for (auto& g : maps)
    for (auto& p : R)
      if (p.kind == PointKind::Dual) CHECK(in_R_dual(QVec(g * p.pos), 11, gram));
}

TEST_CASE("output formats") {
  std::string tsv = holes_tsv(holes23());
  CHECK(tsv.find("A1 N*A1\t2\t8\t1") != std::string::npos);
  CHECK(holes_json(holes23()).find("\"centre\"") != std::string::npos);
}
