#pragma once
#include "gkm/golay.hpp"
#include "gkm/lattice.hpp"

namespace gkm {

// Ambient vectors carry sqrt(8) times the coordinates; norm = sum of squares / 8.
bool is_leech(const IVec& v);
Rational ambient_norm(const QVec& v);

// Rows: HNF basis of the Leech lattice in scaled coordinates.
const ZMat& leech_basis();
QMat leech_gram();

struct Norm4Census {
  long pairs = 0;    // (+-4, +-4, 0^22)
  long octads = 0;   // (+-2^8, 0^16)
  long odd = 0;      // (-+3, +-1^23)
  long total() const { return pairs + octads + odd; }
};
Norm4Census norm4_count();

struct Projection {
  QVec fix, perp;
  Rational fix_norm, perp_norm;
};
Projection project(const QVec& v, const CodePermutation& sigma);

struct ShortDualRow {
  Rational norm;
  long count = 0;
  long mod4_count = 0;  // images of vectors with every entry divisible by 4
  QVec witness;  // 24 ambient entries of the projected vector
};
// Nonzero vectors of L* = pi_perp(Leech) with norm <= bound, via cycle patterns of 2c+4x.
std::vector<ShortDualRow> enumerate_short_dual_perp(long N, const Rational& bound);

struct Sublattice {
  ZMat basis;  // rows in scaled ambient coordinates, LLL-reduced
  GramLattice lattice;
};
Sublattice fixed_sublattice(const CodePermutation& sigma);
Sublattice perp_sublattice(const CodePermutation& sigma);

// ambient coordinates of a lattice coefficient vector
QVec to_ambient(const ZMat& basis, const QVec& coeffs);

}  // namespace gkm
