#pragma once
#include "gkm/holes.hpp"
#include "gkm/qseries.hpp"

#include <cstdint>
#include <optional>
#include <unordered_map>

namespace gkm {

// (lambda, m, n) in L* = (Lambda^sigma)* + II_{1,1}; lambda in basis coefficients
struct LorentzRoot {
  QVec lambda;
  Int m = 0, n = 0;
};

struct GkmContext {
  long N = 0, M = 0;
  QMat gram;
  CycleShape shape;
  static const GkmContext& get(long N);  // cached per N
};

Rational lorentz_inner(const LorentzRoot& a, const LorentzRoot& b, const QMat& gram);
Rational lorentz_norm(const LorentzRoot& r, const QMat& gram);
LorentzRoot operator+(const LorentzRoot& a, const LorentzRoot& b);
LorentzRoot operator*(const Int& k, const LorentzRoot& r);

bool in_L(const LorentzRoot& r);
bool in_L_star(const LorentzRoot& r, const QMat& gram);
bool in_NL_star(const LorentzRoot& r, long N, const QMat& gram);

// fix point v -> (v, 1, v^2/2 - 1); dual point x -> (N x, N, N x^2/2 - 1)
LorentzRoot lift(const RPoint& p, long N, const QMat& gram);
// n rho = (0, 0, n)
LorentzRoot imaginary_simple_root(long n);
Int imaginary_simple_mult(long n, const CycleShape& shape);

// closed form: p(1 - r^2/2) [+ p(1 - r^2/2N) on NL*], 0 off L
Int gkm_mult(const LorentzRoot& r, long N);
// Tr(sigma|E_r) - Tr(sigma|E_{r/N})/N + dim(E_{r/N})/N with dim from q/Delta times Theta or Theta_r
struct TraceTerms {
  long N = 1;
  Rational tr_r, tr_rN, dim_rN;
  Rational tr_div() const { return Rational(N); }
  Rational mult() const;
};
TraceTerms gkm_trace_terms(const LorentzRoot& r, long N);
Int gkm_mult_via_trace(const LorentzRoot& r, long N);

// cycles through off L, L - NL*, NL* - NL, NL; norms where the multiplicity can be nonzero
enum class RootClass { OffL, InL, InNLstar, InNL };
RootClass root_class(const LorentzRoot& r, long N);
std::vector<LorentzRoot> sample_roots(long N, int count, std::uint64_t seed);

Rational gkm_cartan_entry(const LorentzRoot& a, const LorentzRoot& b, long N);
QMat gkm_cartan_matrix(const std::vector<LorentzRoot>& roots, long N);

// Peterson recursion over a coefficient box, exact.
class PetersonTable {
 public:
  PetersonTable(const QMat& cartan, const std::vector<long>& box);
  const QMat& cartan() const { return b_; }
  const std::vector<long>& box() const { return box_; }
  int rank() const { return int(b_.rows()); }
  // 0 for non-roots; throws outside the box
  Int mult(const std::vector<long>& coeffs) const;
  Rational norm(const std::vector<long>& coeffs) const;
  bool dominant(const std::vector<long>& coeffs) const;
  std::size_t candidates() const { return keys_.size(); }
  std::size_t recursions() const { return recursions_; }
  // every candidate vector in the box
  const std::vector<std::vector<long>>& vectors() const { return keys_; }

 private:
  QMat b_;
  std::vector<long> box_;
  std::vector<std::vector<long>> keys_;
  std::unordered_map<std::string, Int> mult_;
  std::size_t recursions_ = 0;
};

// dominant vectors (coefficients) with norm >= -max_norm and height <= max_height
std::vector<std::vector<long>> dominant_vectors(const QMat& cartan, long max_norm, long max_height);

struct SubalgebraEmbedding {
  std::string name;
  long N = 0;                  // 0 when only the Cartan matrix is shipped
  long host_N = 0;             // the G_N containing it
  std::vector<RPoint> points;  // representatives in R
  std::vector<LorentzRoot> roots;
  QMat cartan;
  int rank() const { return int(cartan.rows()); }
  bool simply_laced() const;  // equal simple-root norms
  // node outside the unique affine subdiagram, if unique
  std::optional<int> level_node() const;
  std::vector<std::vector<int>> affine_subdiagrams() const;
};
std::vector<std::string> embedding_names();
SubalgebraEmbedding embedding(const std::string& name);
// pairwise inner products against the declared Cartan matrix; throws on mismatch
void validate(const SubalgebraEmbedding& e);

struct MultRow {
  std::vector<long> coeffs;
  Rational norm;
  Int mult;
  std::optional<Int> bound;   // from G_N through the embedding
  std::optional<Int> global;  // p_{rank-1}(1 - r^2/2) - p_{rank-1}(-r^2/2), equal norms only
  Int p_rank;                 // p_{rank-2}(1 - r^2/2)
  bool in_NL_star = false;
  long level = -1;
};
LorentzRoot embed(const SubalgebraEmbedding& e, const std::vector<long>& coeffs);
MultRow embed_and_bound(const SubalgebraEmbedding& e, const std::vector<long>& coeffs, const PetersonTable& t);
// Weyl-chamber rows with norm >= -max_norm, height <= max_height, sorted as printed
std::vector<MultRow> mult_table(const SubalgebraEmbedding& e, long max_norm, long max_height);
std::vector<MultRow> mult_rows(const SubalgebraEmbedding& e, const std::vector<std::vector<long>>& coeffs);

struct GoldenRow {
  std::string algebra;
  std::vector<long> coeffs;
  long norm;
  long mult;
  long bound;  // the printed bound column (G_N bound, or the global bound for rank >= 7); -1 if none
  long p_rank = -1;
};
std::vector<GoldenRow> golden_rows(const std::string& algebra = "");

struct IsotropicReport {
  std::string algebra;
  bool applies = false;  // unique affine subdiagram and simply laced
  long expected = 0;
  long rows = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
IsotropicReport isotropic_mult_check(const SubalgebraEmbedding& e, long max_height);

struct SharpnessVerdict {
  std::string algebra, hole_label;
  std::vector<int> affine_nodes;
  bool unique_affine = false;
  std::vector<std::pair<std::string, Rational>> products;  // component label, d h^vee
  bool sharp = false;
  bool observed_sharp = false;  // mult == bound on delta
  bool consistent() const { return sharp == observed_sharp; }
};
SharpnessVerdict sharpness_check(const SubalgebraEmbedding& e, const HoleEnumeration& holes,
                                 std::optional<std::vector<int>> affine_nodes = std::nullopt);

std::string rows_tsv(const std::vector<MultRow>& rows);
std::string rows_json(const std::vector<MultRow>& rows);

}  // namespace gkm
