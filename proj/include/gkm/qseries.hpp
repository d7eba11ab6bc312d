#pragma once
#include "gkm/types.hpp"

#include <limits>
#include <map>
#include <optional>
#include <utility>

namespace gkm {

// Truncated Laurent series in q^{1/denom}; exact strictly below q^{exact_below/denom}.
class QSeries {
 public:
  static constexpr long kExact = std::numeric_limits<long>::max() / 4;

  QSeries() = default;
  explicit QSeries(long denom, long exact_below = kExact) : denom_(denom), exact_below_(exact_below) {}

  static QSeries monomial(const Rational& c, const Rational& exponent);

  long denom() const { return denom_; }
  long exact_below() const { return exact_below_; }
  Rational exact_below_exponent() const { return Rational(exact_below_, denom_); }
  bool is_exact() const { return exact_below_ >= kExact; }
  const std::map<long, Rational>& terms() const { return terms_; }

  Rational coeff(long k) const;
  // coefficient at q^e; throws if e lies at or beyond the truncation
  Rational at(const Rational& e) const;
  void set(long k, const Rational& c);
  void add(long k, const Rational& c);

  bool empty() const { return terms_.empty(); }
  long leading() const;  // numerator of the lowest nonzero exponent

  QSeries with_denom(long d) const;
  QSeries substitute(long k) const;  // q -> q^k
  QSeries shifted(const Rational& e) const;  // times q^e
  QSeries truncated(const Rational& e) const;
  QSeries filtered(long modulus, long residue) const;  // keep numerators = residue mod modulus

  QSeries operator-() const;
  QSeries& operator*=(const Rational& c);

 private:
  long denom_ = 1;
  long exact_below_ = kExact;
  std::map<long, Rational> terms_;
  void prune();
};

QSeries operator+(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a, const QSeries& b);
QSeries operator*(const QSeries& a, const QSeries& b);
QSeries operator*(const Rational& c, const QSeries& a);
QSeries inverse(const QSeries& a);
QSeries pow(const QSeries& a, long e);
bool operator==(const QSeries& a, const QSeries& b);

// agreement on every exponent below both truncations; returns first differing exponent or nothing
std::optional<Rational> first_difference(const QSeries& a, const QSeries& b);

struct CycleShape {
  std::vector<std::pair<long, long>> parts;  // (cycle length a, exponent b)
  static CycleShape leech_prime(long N);     // 1^M N^M
  long degree() const;
};

long leech_M(long N);  // 24/(N+1)

// prod (1-q^n), n >= 1, as an integer power series exact below q^T
QSeries euler_product(long T);

QSeries eta_series(const Rational& truncation);
QSeries eta_sigma(const CycleShape& shape, const Rational& truncation);

// coefficients of prod (1-q^{a n})^{-b} for n = 0..nmax
std::vector<Int> p_sigma_table(const CycleShape& shape, long nmax);
Int p_sigma(const CycleShape& shape, long n);
Int colored_partitions(long d, long n);
Int global_bound(long d, const Rational& norm);

// Theta (r < 0) or Theta_r (0 <= r < N) through the residue-filter collapse
QSeries theta_rhs(long N, long r, const Rational& truncation);

std::string to_json(const QSeries& s);
QSeries series_from_json(const std::string& text);
std::string to_tsv(const QSeries& s);

}  // namespace gkm
