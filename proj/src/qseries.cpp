#include "gkm/qseries.hpp"

#include <json.hpp>

#include <mutex>
#include <numeric>
#include <sstream>

namespace gkm {

namespace {

long sat_add(long x, long y) {
  if (x >= QSeries::kExact || y >= QSeries::kExact) return QSeries::kExact;
  return x + y;
}

long sat_mul(long x, long f) {
  if (x >= QSeries::kExact) return QSeries::kExact;
  return x * f;
}

long ceil_div(const Rational& e, long d) {
  // smallest integer k with k >= e*d
  Rational x = e * d;
  Int f = floor_q(x);
  if (Rational(f) != x) f += 1;
  return f.convert_to<long>();
}

}  // namespace

QSeries QSeries::monomial(const Rational& c, const Rational& exponent) {
  long d = den(exponent).convert_to<long>();
  QSeries s(d);
  s.set(num(exponent).convert_to<long>(), c);
  return s;
}

Rational QSeries::coeff(long k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational QSeries::at(const Rational& e) const {
  if (e >= exact_below_exponent()) throw Error("QSeries::at: exponent beyond truncation");
  Rational k = e * denom_;
  if (!is_integer(k)) return Rational(0);
  return coeff(num(k).convert_to<long>());
}

void QSeries::set(long k, const Rational& c) {
  if (k >= exact_below_) return;
  if (c == 0)
    terms_.erase(k);
  else
    terms_[k] = c;
}

void QSeries::add(long k, const Rational& c) {
  if (k >= exact_below_ || c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

long QSeries::leading() const {
  if (terms_.empty()) return exact_below_;
  return terms_.begin()->first;
}

void QSeries::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0 || it->first >= exact_below_)
      it = terms_.erase(it);
    else
      ++it;
  }
}

QSeries QSeries::with_denom(long d) const {
  if (d % denom_ != 0) throw Error("QSeries::with_denom: not a multiple");
  long f = d / denom_;
  QSeries out(d, sat_mul(exact_below_, f));
  for (auto& [k, c] : terms_) out.terms_.emplace(k * f, c);
  return out;
}

QSeries QSeries::substitute(long k) const {
  if (k <= 0) throw Error("QSeries::substitute: k must be positive");
  QSeries out(denom_, sat_mul(exact_below_, k));
  for (auto& [e, c] : terms_) out.terms_.emplace(e * k, c);
  return out;
}

QSeries QSeries::shifted(const Rational& e) const {
  long d = std::lcm(denom_, den(e).convert_to<long>());
  QSeries out = with_denom(d);
  long s = num(e * d).convert_to<long>();
  QSeries res(d, sat_add(out.exact_below_, s));
  for (auto& [k, c] : out.terms_) res.terms_.emplace(k + s, c);
  return res;
}

QSeries QSeries::truncated(const Rational& e) const {
  QSeries out = *this;
  long k = ceil_div(e, denom_);
  out.exact_below_ = std::min(out.exact_below_, k);
  out.prune();
  return out;
}

QSeries QSeries::filtered(long modulus, long residue) const {
  QSeries out(denom_, exact_below_);
  for (auto& [k, c] : terms_)
    if (((k - residue) % modulus + modulus) % modulus == 0) out.terms_.emplace(k, c);
  return out;
}

QSeries QSeries::operator-() const {
  QSeries out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

QSeries& QSeries::operator*=(const Rational& c) {
  for (auto& [k, v] : terms_) v *= c;
  prune();
  return *this;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  long d = std::lcm(a.denom(), b.denom());
  QSeries x = a.with_denom(d), y = b.with_denom(d);
  QSeries out(d, std::min(x.exact_below(), y.exact_below()));
  for (auto& [k, c] : x.terms()) out.add(k, c);
  for (auto& [k, c] : y.terms()) out.add(k, c);
  return out;
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const Rational& c, const QSeries& a) {
  QSeries out = a;
  out *= c;
  return out;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  long d = std::lcm(a.denom(), b.denom());
  QSeries x = a.with_denom(d), y = b.with_denom(d);
  long bound = std::min(sat_add(x.exact_below(), y.leading()), sat_add(y.exact_below(), x.leading()));
  QSeries out(d, bound);
  for (auto& [i, ci] : x.terms())
    for (auto& [j, cj] : y.terms()) {
      if (i + j >= bound) break;
      out.add(i + j, ci * cj);
    }
  return out;
}

QSeries inverse(const QSeries& a) {
  if (a.empty()) throw Error("inverse: zero series");
  if (a.is_exact()) throw Error("inverse: needs a finite truncation");
  const long la = a.leading();
  const long len = a.exact_below() - la;  // relative precision of the unit part
  const Rational c0 = a.terms().begin()->second;
  std::vector<std::pair<long, Rational>> u;
  for (auto& [k, c] : a.terms())
    if (k > la) u.emplace_back(k - la, c);
  std::vector<Rational> v(len);
  v[0] = 1 / c0;
  for (long n = 1; n < len; ++n) {
    Rational s = 0;
    for (auto& [dk, c] : u) {
      if (dk > n) break;
      if (v[n - dk] != 0) s += c * v[n - dk];
    }
    v[n] = -s / c0;
  }
  QSeries out(a.denom(), a.exact_below() - 2 * la);
  for (long n = 0; n < len; ++n)
    if (v[n] != 0) out.set(n - la, v[n]);
  return out;
}

QSeries pow(const QSeries& a, long e) {
  if (e < 0) return pow(inverse(a), -e);
  QSeries result(a.denom());
  result.set(0, 1);
  QSeries base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool operator==(const QSeries& a, const QSeries& b) {
  long d = std::lcm(a.denom(), b.denom());
  QSeries x = a.with_denom(d), y = b.with_denom(d);
  return x.exact_below() == y.exact_below() && x.terms() == y.terms();
}

std::optional<Rational> first_difference(const QSeries& a, const QSeries& b) {
  long d = std::lcm(a.denom(), b.denom());
  QSeries x = a.with_denom(d), y = b.with_denom(d);
  long bound = std::min(x.exact_below(), y.exact_below());
  std::optional<long> first;
  for (auto& [k, c] : x.terms())
    if (k < bound && y.coeff(k) != c) { first = k; break; }
  for (auto& [k, c] : y.terms())
    if (k < bound && x.coeff(k) != c) {
      if (!first || k < *first) first = k;
      break;
    }
  if (!first) return std::nullopt;
  return Rational(*first, d);
}

long leech_M(long N) {
  if (24 % (N + 1) != 0) throw Error("N+1 must divide 24");
  return 24 / (N + 1);
}

CycleShape CycleShape::leech_prime(long N) {
  long M = leech_M(N);
  return CycleShape{{{1, M}, {N, M}}};
}

long CycleShape::degree() const {
  long s = 0;
  for (auto& [a, b] : parts) s += a * b;
  return s;
}

QSeries euler_product(long T) {
  QSeries s(1, T);
  s.set(0, 1);
  for (long k = 1; k * (3 * k - 1) / 2 < T; ++k) {
    Rational sign = (k % 2 == 0) ? 1 : -1;
    s.set(k * (3 * k - 1) / 2, sign);
    s.set(k * (3 * k + 1) / 2, sign);
  }
  return s;
}

QSeries eta_series(const Rational& truncation) {
  if (truncation < Rational(1, 24)) throw Error("eta_series: truncation below 1/24");
  long T = ceil_div(truncation, 1);
  QSeries e = euler_product(T).with_denom(24).shifted(Rational(1, 24));
  return e.truncated(truncation);
}

QSeries eta_sigma(const CycleShape& shape, const Rational& truncation) {
  Rational lead = 0;
  for (auto& [a, b] : shape.parts) lead += Rational(a * b, 24);
  QSeries prod(1);
  prod.set(0, 1);
  // each factor has leading 0, so exactness is the minimum over factors
  Rational need = truncation - lead;
  if (need < 0) need = 0;
  for (auto& [a, b] : shape.parts) {
    long T = ceil_div(need / a, 1) + 1;
    prod = prod * pow(euler_product(T), b).substitute(a);
  }
  long d = den(lead).convert_to<long>();
  return prod.with_denom(std::lcm(24L, d)).shifted(lead).truncated(truncation);
}

namespace {

Int sigma1(long n) {
  Int s = 0;
  for (long d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      s += d;
      if (d * d != n) s += n / d;
    }
  return s;
}

std::mutex& table_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::vector<std::pair<long, long>>, std::vector<Int>>& table_cache() {
  static std::map<std::vector<std::pair<long, long>>, std::vector<Int>> c;
  return c;
}

}  // namespace

std::vector<Int> p_sigma_table(const CycleShape& shape, long nmax) {
  {
    std::lock_guard lk(table_mutex());
    auto it = table_cache().find(shape.parts);
    if (it != table_cache().end() && (long)it->second.size() > nmax)
      return std::vector<Int>(it->second.begin(), it->second.begin() + nmax + 1);
  }
  std::vector<Int> c(nmax + 1), p(nmax + 1);
  for (long k = 1; k <= nmax; ++k)
    for (auto& [a, b] : shape.parts)
      if (k % a == 0) c[k] += Int(b) * a * sigma1(k / a);
  if (nmax >= 0) p[0] = 1;
  for (long n = 1; n <= nmax; ++n) {
    Int s = 0;
    for (long k = 1; k <= n; ++k) s += c[k] * p[n - k];
    p[n] = s / n;
  }
  std::lock_guard lk(table_mutex());
  auto& slot = table_cache()[shape.parts];
  if (slot.size() < p.size()) slot = p;
  return p;
}

Int p_sigma(const CycleShape& shape, long n) {
  if (n < 0) return 0;
  return p_sigma_table(shape, n)[n];
}

Int colored_partitions(long d, long n) {
  if (n < 0) return 0;
  if (d == 0) return n == 0 ? 1 : 0;
  return p_sigma(CycleShape{{{1, d}}}, n);
}

Int global_bound(long d, const Rational& norm) {
  Rational h = norm / 2;
  if (!is_integer(h)) throw Error("global_bound: norm must be even");
  long m = num(h).convert_to<long>();
  return colored_partitions(d - 1, 1 - m) - colored_partitions(d - 1, -m);
}

QSeries theta_rhs(long N, long r, const Rational& truncation) {
  if (N != 2 && N != 3 && N != 5 && N != 7 && N != 11 && N != 23) throw Error("theta_rhs: invalid N");
  if (r >= N) throw Error("theta_rhs: residue out of range");
  const long M = leech_M(N);
  const long T = ceil_div(truncation, 1) + 1;
  QSeries pmn = pow(euler_product(T), M * N).with_denom(N);
  // eta^{-M} in the variable q^{1/N}, residue-filtered
  QSeries f = pow(euler_product(N * T), -M);
  QSeries fr(N, f.exact_below());
  for (auto& [k, c] : f.terms()) fr.set(k, c);
  auto filt = [&](long rr) {
    QSeries g = fr.filtered(N, 1 - rr);
    g *= Rational(N);
    return (pmn * g).shifted(Rational(N - 1, N));
  };
  if (r >= 0) return filt(r).truncated(truncation);
  QSeries part1 = pmn * pow(euler_product(T), -M).substitute(N).with_denom(N);
  return (part1 + filt(0)).truncated(truncation);
}

std::string to_json(const QSeries& s) {
  nlohmann::json j;
  j["denom"] = s.denom();
  auto terms = nlohmann::json::array();
  for (auto& [k, c] : s.terms()) terms.push_back({k, c.str()});
  j["terms"] = terms;
  if (s.is_exact())
    j["exact_below"] = nullptr;
  else
    j["exact_below"] = s.exact_below();
  return j.dump();
}

QSeries series_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  long eb = j["exact_below"].is_null() ? QSeries::kExact : j["exact_below"].get<long>();
  QSeries s(j["denom"].get<long>(), eb);
  for (auto& t : j["terms"]) s.set(t[0].get<long>(), parse_rational(t[1].get<std::string>()));
  return s;
}

std::string to_tsv(const QSeries& s) {
  std::ostringstream os;
  os << "numerator\tdenom\tcoeff\n";
  for (auto& [k, c] : s.terms()) os << k << '\t' << s.denom() << '\t' << c.str() << '\n';
  return os.str();
}

}  // namespace gkm
