#pragma once
#include "gkm/lattice.hpp"
#include "gkm/liealg.hpp"

#include <map>
#include <memory>

namespace gkm {

// all fix points and dual points (half-norm 1/N mod 1) with coefficients in [lo, hi)
std::vector<RPoint> build_R(long N, long lo = -2, long hi = 3);
bool in_R_dual(const QVec& x, long N, const QMat& gram);

struct Hole {
  std::vector<RPoint> vertices;
  QVec centre;  // translated into [0,1)^n
  Rational radius2;
  DynkinDiagram diagram;
  std::vector<std::vector<int>> simplices;  // triangulation, indices into vertices
  Rational fraction;                        // volume as a fraction of the fundamental cell
  bool centre_inside = false;
  std::string label() const { return diagram.label(); }
};

struct Circumcentre {
  QVec centre;
  Rational radius2;
};
// equal generalized distance to every vertex; nothing if not unique
std::optional<Circumcentre> circumcentre(const std::vector<RPoint>& vertices, long N, const QMat& gram);

struct HoleType {
  std::string label;
  DiagramClass cls = DiagramClass::Other;
  Rational radius2;
  Rational unit;  // volume in units ((2M)! sqrt(N)^M)^{-1}
  long count = 0;
  Rational total() const { return unit * count; }
};

struct HoleEnumeration {
  long N = 0, M = 0;
  bool fix_only = false;  // ordinary Delaunay cells of the fixed lattice
  GramLattice lattice;
  std::vector<Hole> holes;  // one per centre in [0,1)^n, sorted by centre
  std::vector<HoleType> types() const;
  Rational unit_scale() const;  // (2M)! N^M: fraction -> units
};

struct HoleOptions {
  bool fix_only = false;
  std::size_t max_holes = 200000;
};
HoleEnumeration enumerate_holes(long N, const HoleOptions& opt = {});

struct VolumeCheck {
  Rational direct;   // units, from simplex determinants
  Rational catalog;  // units, from the catalog formulas (nonnegative square root)
  bool exact_square = true;
  bool ok() const { return exact_square && direct == catalog; }
};
VolumeCheck hole_volume(const Hole& h, long N);

struct VolumeAudit {
  long N = 0;
  Rational total;     // units
  Rational expected;  // (2M)! N^M
  std::vector<std::string> diffs;
  bool ok() const { return diffs.empty() && total == expected; }
};
// per-type unit volumes and counts against the expected table, if given
VolumeAudit volume_audit(const HoleEnumeration& e,
                         const std::map<std::string, std::pair<Rational, long>>& expected = {});

// faces: finite holes drop one vertex, affine holes one vertex per component
std::vector<std::vector<int>> faces(const Hole& h);
// geometric facets of the vertex hull
std::vector<std::vector<int>> hull_facets(const Hole& h);

struct CoveringReport {
  long N = 0;
  Rational max_radius2;
  long maximizers = 0;
  bool maximizers_dual = true;
  long cells = 0;
};
CoveringReport covering_radius_check(long N);

// number of (hole, translate) pairs whose closed hull contains x
long holes_containing(const HoleEnumeration& e, const QVec& x);

// hole sets as translation classes of vertex sets; maps act on coefficients
bool maps_holes_to_holes(const HoleEnumeration& e, const QMat& g);
// the sign changes, swap and order-3 map of the N = 11 lattice, in basis coefficients
std::vector<QMat> n11_point_maps();
std::size_t group_order(const std::vector<QMat>& gens, std::size_t limit = 10000);

std::string holes_tsv(const HoleEnumeration& e);
std::string holes_json(const HoleEnumeration& e);

}  // namespace gkm
