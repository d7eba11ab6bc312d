#pragma once
#include "gkm/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gkm {

enum class PointKind { Fix, Dual };

// Element of R = R_fix u R_dual, position in basis coefficients of the fixed lattice.
struct RPoint {
  PointKind kind = PointKind::Fix;
  QVec pos;
  bool operator==(const RPoint& o) const { return kind == o.kind && pos == o.pos; }
};
// 0 for fix points, 2 - 2/N for dual points
Rational offset2(const RPoint& p, long N);

enum class DiagramClass { Finite, Affine, Hyperbolic, Other };
std::string to_string(DiagramClass c);

// Positive definite by exact leading minors.
bool positive_definite(const QMat& b);
// b symmetric; components decided independently.
DiagramClass classify(const QMat& b);
std::vector<std::vector<int>> components(const QMat& b);

struct ComponentInfo {
  std::vector<int> nodes;
  DiagramClass cls = DiagramClass::Other;
  bool long_nodes = false;  // every node has norm 2N (bold N prefix)
  std::string name;         // catalog name without prefix, "unknown" if not recognized
  Rational rho2;            // finite components
  Rational det;             // coroot determinant (of the finite part for affine components)
  Rational hvee;            // affine components
};

struct DynkinDiagram {
  long N = 1;
  std::vector<bool> is_long;
  QMat b;  // symmetrized Cartan matrix: the Lorentzian inner products of the simple roots
  std::vector<ComponentInfo> comps;

  int size() const { return int(b.rows()); }
  // max(|a_ij|, |a_ji|)
  long bonds(int i, int j) const;
  // arrow points toward the shorter root; both ways for the affine A1 pair
  bool arrow_toward(int i, int j) const;
  DiagramClass cls() const;
  std::string label() const;  // e.g. "a3 a1 N*a1"
};

DynkinDiagram diagram_from_matrix(const QMat& b, long N = 1);
// errors on a squared distance outside the admissible sets
DynkinDiagram diagram_from_points(const std::vector<RPoint>& pts, long N, const QMat& gram);
// Lorentzian inner product of the real simple roots attached to two points
Rational point_product(const RPoint& a, const RPoint& b, long N, const QMat& gram);

struct CatalogEntry {
  std::string name;  // "a3", "D4", "A5^(2)", ...
  bool affine = false;
  int rank = 0;      // finite rank n (node count n+1 for affine types)
  Rational rho2;     // finite
  Rational hvee;     // affine
  Rational det;
};
// Table values; long components scaled by det / N^n, rho2 * N.
CatalogEntry catalog_lookup(const std::string& name, bool long_component = false, long N = 1);
// Symmetrized Cartan matrix of a catalog type, short roots of norm 2.
QMat catalog_matrix(const std::string& name);
// every catalog name with the given node count
std::vector<std::string> catalog_names(int nodes);

// Generic invariants of a component from its symmetrized matrix.
Rational rho_squared(const QMat& b);
Rational coroot_det(const QMat& b);
Rational dual_coxeter(const QMat& b);
// primitive positive null vector of an affine component
std::vector<long> null_root(const QMat& b);

// degree/bond/arrow certificate used for recognition
std::string certificate(const QMat& b);

}  // namespace gkm
