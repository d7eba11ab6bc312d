#include <doctest.h>

#include "gkm/lattice.hpp"
#include "gkm/liealg.hpp"

#include <random>
#include <set>

using namespace gkm;

namespace {

QMat mat(std::initializer_list<std::initializer_list<long>> rows) {
  QMat m(rows.size(), rows.begin()->size());
  int i = 0;
  for (auto& r : rows) {
    int j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

// oracle: char poly by Faddeev-LeVerrier, eigenvalue signs by Descartes (all roots real)
struct Signs {
  int pos = 0, neg = 0, zero = 0;
};
Signs eigen_signs(const QMat& a) {
  const int n = int(a.rows());
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  QMat m = QMat::Zero(n, n);
  QMat id = QMat::Identity(n, n);
  for (int k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * id;
    c[n - k] = -Rational((a * m).trace()) / Rational(k);
  }
  Signs s;
  while (s.zero <= n && c[s.zero] == 0) ++s.zero;
  auto changes = [&](bool flip) {
    int ch = 0, last = 0;
    for (int i = s.zero; i <= n; ++i) {
      int sg = c[i] > 0 ? 1 : c[i] < 0 ? -1 : 0;
      if (flip && i % 2) sg = -sg;
      if (sg == 0) continue;
      if (last && sg != last) ++ch;
      last = sg;
    }
    return ch;
  };
  s.pos = changes(false);
  s.neg = changes(true);
  return s;
}

}  // namespace

TEST_CASE("classification examples") {
  CHECK(classify(mat({{2, -1}, {-1, 2}})) == DiagramClass::Finite);
  CHECK(classify(mat({{2, -2}, {-2, 2}})) == DiagramClass::Affine);
  CHECK(classify(mat({{2, -2, 0}, {-2, 2, -1}, {0, -1, 2}})) == DiagramClass::Hyperbolic);
  CHECK(classify(mat({{2, -3}, {-3, 2}})) == DiagramClass::Hyperbolic);
  // an affine component next to a finite one
  CHECK(classify(mat({{2, -2, 0}, {-2, 2, 0}, {0, 0, 2}})) == DiagramClass::Other);
  // proper subdiagram indefinite
  QMat b = mat({{2, -3, 0, 0}, {-3, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}});
  CHECK(classify(b) == DiagramClass::Other);
}

TEST_CASE("catalog values") {
  auto a3 = catalog_lookup("a3");
  CHECK(a3.rho2 == 5);
  CHECK(a3.det == 4);
  auto na2 = catalog_lookup("a2", true, 11);
  CHECK(na2.rho2 == 22);
  CHECK(na2.det == Rational(3, 121));
  auto A2 = catalog_lookup("A2");
  CHECK(A2.hvee == 3);
  CHECK(A2.det == 3);
  CHECK(catalog_lookup("e7").rho2 == Rational(399, 2));
  CHECK(catalog_lookup("D4^(3)").hvee == 6);
  CHECK_THROWS_AS(catalog_lookup("h3"), Error);
  CHECK_THROWS_AS(catalog_lookup("e9"), Error);
}

TEST_CASE("generic invariants reproduce the table") {
  for (int nodes = 1; nodes <= 12; ++nodes)
    for (auto& name : catalog_names(nodes)) {
      CAPTURE(name);
      QMat b = catalog_matrix(name);
      CatalogEntry e = catalog_lookup(name);
      DynkinDiagram d = diagram_from_matrix(b);
      REQUIRE(d.comps.size() == 1);
      auto& c = d.comps[0];
      CHECK(c.name == name);
      if (e.affine) {
        CHECK(c.cls == DiagramClass::Affine);
        CHECK(c.hvee == e.hvee);
        CHECK(c.det == e.det);
      } else {
        CHECK(c.cls == DiagramClass::Finite);
        CHECK(c.rho2 == e.rho2);
        CHECK(c.det == e.det);
      }
      // long variant: every norm multiplied by N
      for (long N : {2L, 11L}) {
        DynkinDiagram dl = diagram_from_matrix(QMat(b * Rational(N)), N);
        if (!dl.comps[0].long_nodes) continue;
        CatalogEntry el = catalog_lookup(name, true, N);
        CHECK(dl.comps[0].name == name);
        CHECK(dl.comps[0].det == el.det);
        if (e.affine)
          CHECK(dl.comps[0].hvee == el.hvee);
        else
          CHECK(dl.comps[0].rho2 == el.rho2);
      }
    }
}

TEST_CASE("certificates separate the catalog") {
  for (int nodes = 1; nodes <= 16; ++nodes) {
    std::set<std::string> seen;
    auto names = catalog_names(nodes);
    for (auto& n : names) seen.insert(certificate(catalog_matrix(n)));
    CHECK(seen.size() == names.size());
  }
}

TEST_CASE("bonds and arrows") {
  DynkinDiagram g2 = diagram_from_matrix(catalog_matrix("g2"));
  CHECK(g2.bonds(0, 1) == 3);
  CHECK(g2.arrow_toward(0, 1));
  CHECK_FALSE(g2.arrow_toward(1, 0));
  DynkinDiagram a1 = diagram_from_matrix(catalog_matrix("A1"));
  CHECK(a1.bonds(0, 1) == 2);
  CHECK(a1.arrow_toward(0, 1));
  CHECK(a1.arrow_toward(1, 0));
}

TEST_CASE("diagrams from points") {
  GramLattice L = fixed_lattice(23).lattice;
  const QMat& g = L.gram;
  auto fix = [](long a, long b) {
    QVec v(2);
    v << a, b;
    return RPoint{PointKind::Fix, v};
  };
  auto dual = [&](long a, long b) {
    QVec z(2);
    z << a, b;
    return RPoint{PointKind::Dual, QVec(L.dual_gram() * z)};
  };
  // norm 4 apart: unlinked
  DynkinDiagram d = diagram_from_points({fix(0, 0), fix(1, 0)}, 23, g);
  CHECK(d.bonds(0, 1) == 0);
  CHECK(d.label() == "a1^2");
  CHECK(d.cls() == DiagramClass::Finite);
  // norm 6 apart: single bond
  CHECK(diagram_from_points({fix(0, 0), fix(0, 1)}, 23, g).label() == "a2");
  // norm 8 apart: affine pair
  CHECK(quad(g, fix(1, -1).pos) == 8);
  DynkinDiagram a = diagram_from_points({fix(0, 0), fix(1, -1)}, 23, g);
  CHECK(a.label() == "A1");
  CHECK(a.cls() == DiagramClass::Affine);
  // dual point at 2+2/N: unlinked; at 4+2/N: N bonds toward the fix node
  RPoint d1 = dual(2, 3), d2 = dual(3, 4);
  CHECK(quad(g, d1.pos) == Rational(48, 23));
  CHECK(quad(g, d2.pos) == Rational(94, 23));
  CHECK(diagram_from_points({fix(0, 0), d1}, 23, g).label() == "a1 N*a1");
  DynkinDiagram m = diagram_from_points({fix(0, 0), d2}, 23, g);
  CHECK(m.bonds(0, 1) == 23);
  CHECK(m.arrow_toward(1, 0));
  CHECK_FALSE(m.arrow_toward(0, 1));
  CHECK(m.comps[0].name == "unknown");
  // norm 12 apart is not a bond length
  CHECK_THROWS_AS(diagram_from_points({fix(0, 0), fix(1, 1)}, 23, g), Error);
}

TEST_CASE("classification against eigenvalue signs") {
  std::mt19937_64 rng(7);
  std::vector<QMat> mats;
  for (int nodes = 1; nodes <= 9; ++nodes)
    for (auto& n : catalog_names(nodes)) mats.push_back(catalog_matrix(n));
  std::uniform_int_distribution<int> off(-2, 0), diag(1, 2);
  for (int t = 0; t < 200; ++t) {
    QMat b(4, 4);
    for (int i = 0; i < 4; ++i) {
      b(i, i) = 2 * diag(rng);
      for (int j = i + 1; j < 4; ++j) b(i, j) = b(j, i) = off(rng);
    }
    mats.push_back(b);
  }
  for (auto& b : mats) {
    Signs s = eigen_signs(b);
    CHECK(s.pos + s.neg + s.zero == b.rows());
    DiagramClass c = classify(b);
    CHECK((c == DiagramClass::Finite) == (s.pos == b.rows()));
    if (c == DiagramClass::Affine) CHECK(s.neg == 0);
    if (components(b).size() == 1) {
      bool aff = s.zero == 1 && s.neg == 0;
      CHECK((c == DiagramClass::Affine) == aff);
    }
    if (c == DiagramClass::Hyperbolic) CHECK(s.neg == 1);
  }
}
