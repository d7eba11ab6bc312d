#pragma once
#include "gkm/qseries.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gkm {

struct GramLattice {
  QMat gram;
  std::string provenance;

  int rank() const { return int(gram.rows()); }
  Rational det() const { return det_exact(gram); }
  QMat dual_gram() const { return inverse_exact(gram); }
  bool is_integral() const;
  bool is_even() const;
};

struct LatticeVector {
  QVec coeffs;  // over the basis; integers for lattice points
  Rational norm;
};

// Row-style Hermite normal form of the row span; zero rows dropped.
ZMat hnf_rows(const ZMat& gens);
// Reduce v modulo the row lattice of an HNF matrix (canonical representative).
ZVec hnf_reduce(const ZMat& h, ZVec v);
// Integer basis (rows) of {z : z * a = 0}.
ZMat left_kernel(const ZMat& a);
// Unimodular U with U G U^T LLL-reduced.
ZMat lll_transform(const QMat& gram, const Rational& delta = Rational(99, 100));

// Exact enumeration of x in Z^n with (x+p)^T G (x+p) <= bound.
// The callback sees x and the exact norm scaled by scale(): norm = s / scale.
class CosetEnumerator {
 public:
  explicit CosetEnumerator(const QMat& gram, const QVec& offset = QVec());
  const Int& scale() const { return scale_; }
  int rank() const { return n_; }
  void run(const Rational& bound, const std::function<void(const std::vector<long>&, long)>& f) const;
  std::vector<long> scaled_offset() const { return pnum_; }
  long offset_denominator() const { return pden_; }

 private:
  int n_;
  Int scale_;
  long gscale_;
  std::vector<long> gint_;   // integer Gram scaled by gscale_
  std::vector<long> pnum_;   // offset numerators, denominator pden_
  long pden_;
  std::vector<double> q_;    // Cholesky data
  std::vector<double> p_;
};

std::vector<LatticeVector> short_vectors(const GramLattice& L, const Rational& bound,
                                         const std::optional<QVec>& offset = std::nullopt);
// exact minimum nonzero norm of an integral lattice
Rational minimum_norm(const GramLattice& L);

QSeries theta_series(const GramLattice& L, const std::optional<QVec>& offset, const Rational& truncation);

// reduce denominators to the smallest one compatible with all stored exponents
QSeries normalized(const QSeries& s);

struct ResidueTable {
  long M = 0, N = 0;
  std::vector<Int> rho_tilde;  // index r = 0..N-1
  std::vector<Int> rho;        // nonzero solutions only
};
// Brute: M-tuples over Z_N with sum x_i^2 = r.  Classes: half-norms r/N over the
// discriminant group of the fixed lattice (M must be 24/(N+1)).
enum class ResidueMode { ClosedForm, Brute, Classes };
ResidueTable residue_counts(long M, long N, ResidueMode mode);
int legendre(long a, long p);

// Discriminant group L*/L of an integral lattice: dual vectors y (G^{-1} y coefficients)
struct DiscriminantClass {
  ZVec y;            // class label: G c for the representative c
  QVec rep;          // short representative coefficients c = G^{-1} y reduced
  Rational half_norm_mod1;
};
std::vector<DiscriminantClass> discriminant_classes(const GramLattice& L);

// Theta + sum_r rho_M(r, N) Theta_r
QSeries theta_sum(long N, const Rational& truncation);

struct FixedLattice {
  long N = 0, M = 0;
  GramLattice lattice;
  ZMat ambient;  // rows: scaled ambient coordinates of the basis (sigma-fixed Leech vectors)
  QMat fc;       // rows (f_1..f_M ; c_1..c_M) for the explicit bases, empty for N = 2, 3
};
// explicit bases for N = 23, 11, 7, 5; sigma-fixed sublattice of the Leech lattice for N = 3, 2
FixedLattice fixed_lattice(long N);

struct ThetaReport {
  long N = 0;
  Rational truncation;
  bool ok = true;
  std::vector<std::string> lines;
};
ThetaReport verify_theta_identity(long N, const Rational& truncation);
// every class of L*/L against the series for its half-norm residue (N = 2, 3)
ThetaReport verify_class_invariance(long N, const Rational& truncation);

}  // namespace gkm
