#include "gkm/lattice.hpp"
#include "gkm/leech.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gkm {

namespace {

// explicit bases, rows (f ; c) with f on fixed points and c constant on each cycle
std::vector<std::vector<long>> explicit_fc(long N) {
  switch (N) {
    case 23:
      return {{-3, 1}, {5, 1}};
    case 11:
      return {{-3, 1, 1, 1}, {2, 0, 2, 0}, {4, 4, 0, 0}, {8, 0, 0, 0}};
    case 7:
      return {{-3, 1, 1, 1, 1, 1}, {0, 2, 0, 0, 2, 0}, {2, 0, 0, 2, 0, 0},
              {4, 0, 4, 0, 0, 0}, {4, 4, 0, 0, 0, 0}, {8, 0, 0, 0, 0, 0}};
    case 5:
      return {{-3, 1, 1, 1, 1, 1, 1, 1}, {2, 2, 0, 2, 0, 0, 2, 0}, {2, 0, 2, 2, 0, 2, 0, 0},
              {0, 2, 2, 2, 2, 0, 0, 0}, {4, 0, 0, 4, 0, 0, 0, 0}, {4, 0, 4, 0, 0, 0, 0, 0},
              {4, 4, 0, 0, 0, 0, 0, 0}, {8, 0, 0, 0, 0, 0, 0, 0}};
    default:
      return {};
  }
}

std::string series_line(const QSeries& s, int max_terms = 6) {
  std::ostringstream os;
  int k = 0;
  for (auto& [e, c] : s.terms()) {
    if (k++ == max_terms) {
      os << " + ...";
      break;
    }
    os << (k > 1 ? " + " : "") << c.str() << "q^" << Rational(e, s.denom()).str();
  }
  return os.str();
}

}  // namespace

FixedLattice fixed_lattice(long N) {
  FixedLattice F;
  F.N = N;
  F.M = leech_M(N);
  const long M = F.M;
  const CodePermutation sigma = find_shape_automorphism(N);
  auto rows = explicit_fc(N);
  if (rows.empty()) {
    Sublattice s = fixed_sublattice(sigma);
    F.lattice = s.lattice;
    F.ambient = s.basis;
    return F;
  }
  std::vector<int> fixed;
  std::vector<std::vector<int>> cycles;
  for (auto& c : sigma.cycles()) (c.size() == 1 ? fixed.push_back(c[0]) : cycles.push_back(c));
  const long n = 2 * M;
  F.fc = QMat(n, n);
  for (long r = 0; r < n; ++r)
    for (long j = 0; j < n; ++j) F.fc(r, j) = rows[r][j];
  // find labellings of fixed points and cycles that turn every row into a Leech vector
  std::vector<int> pf(M), pc(M);
  std::iota(pf.begin(), pf.end(), 0);
  bool found = false;
  do {
    std::iota(pc.begin(), pc.end(), 0);
    do {
      ZMat amb(n, kCodeLength);
      bool ok = true;
      for (long r = 0; r < n && ok; ++r) {
        IVec v(kCodeLength);
        for (long i = 0; i < M; ++i) v(fixed[pf[i]]) = rows[r][i];
        for (long j = 0; j < M; ++j)
          for (int p : cycles[pc[j]]) v(p) = rows[r][M + j];
        ok = is_leech(v);
        for (int p = 0; p < kCodeLength; ++p) amb(r, p) = v(p);
      }
      if (ok) {
        F.ambient = amb;
        found = true;
      }
    } while (!found && std::next_permutation(pc.begin(), pc.end()));
  } while (!found && std::next_permutation(pf.begin(), pf.end()));
  if (!found) throw Error("fixed_lattice: explicit basis not realizable for this automorphism");
  QMat g(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      Rational s = 0;
      for (long k = 0; k < M; ++k) s += F.fc(i, k) * F.fc(j, k) + N * F.fc(i, M + k) * F.fc(j, M + k);
      g(i, j) = s / 8;
    }
  F.lattice.gram = g;
  F.lattice.provenance = "explicit basis";
  return F;
}

ThetaReport verify_theta_identity(long N, const Rational& truncation) {
  ThetaReport rep;
  rep.N = N;
  rep.truncation = truncation;
  const long M = leech_M(N);
  if (N == 2 || N == 3) {
    const CodePermutation sigma = find_shape_automorphism(N);
    GramLattice L = perp_sublattice(sigma).lattice;
    auto classes = discriminant_classes(L);
    if (long(classes.size()) != ipow(N, int(M))) {
      rep.ok = false;
      rep.lines.push_back("class count " + std::to_string(classes.size()));
    }
    for (long r = -1; r < N; ++r) {
      std::optional<QVec> off;
      Rational target = r < 0 ? Rational(0) : Rational(-r, N) - floor_q(Rational(-r, N));
      for (auto& c : classes) {
        bool zero = c.y.isZero();
        if (r < 0 ? zero : (!zero && c.half_norm_mod1 == target)) {
          off = c.rep;
          break;
        }
      }
      if (!off) {
        rep.lines.push_back("r=" + std::to_string(r) + ": no class");
        continue;
      }
      QSeries lhs = theta_series(L, r < 0 ? std::nullopt : off, truncation);
      QSeries rhs = theta_rhs(N, r, truncation);
      auto d = first_difference(lhs, rhs);
      std::string name = r < 0 ? "Theta" : "Theta_" + std::to_string(r);
      if (d) {
        rep.ok = false;
        rep.lines.push_back(name + ": mismatch at q^" + d->str());
      } else {
        rep.lines.push_back(name + ": " + std::to_string(lhs.terms().size()) + " coefficients equal, " +
                            series_line(lhs));
      }
    }
    return rep;
  }
  // leading structure against the Golay-projection enumeration
  QSeries ts = theta_sum(N, Rational(3, 2));
  auto rows = enumerate_short_dual_perp(N, 2);
  QSeries enumerated(2 * N, 2 * N * 1 + 1);
  enumerated.set(0, 1);
  for (auto& r : rows) {
    Rational k = r.norm * N;
    if (!is_integer(k)) throw Error("verify_theta_identity: unexpected norm denominator");
    enumerated.add(num(k).convert_to<long>(), Rational(r.count));
  }
  QSeries cut = ts.truncated(Rational(1) + Rational(1, 2 * N));
  auto d = first_difference(cut, enumerated);
  if (d) {
    rep.ok = false;
    rep.lines.push_back("Theta_sum vs enumeration: mismatch at q^" + d->str());
  } else {
    rep.lines.push_back("Theta_sum vs enumeration up to q^1: " + series_line(cut, 8));
  }
  Rational gap = Rational(N - 1, N + 1);
  for (auto& [k, c] : cut.terms()) {
    Rational e(k, cut.denom());
    if (e > 0 && e <= gap) {
      rep.ok = false;
      rep.lines.push_back("nonzero coefficient inside the gap at q^" + e.str());
    }
  }
  if (cut.at(0) != 1) rep.ok = false;
  Rational lead = cut.at(Rational(N - 1, N));
  long family = 0, first_norm_count = 0;
  for (auto& r : rows)
    if (r.norm == Rational(2 * (N - 1), N)) family = r.mod4_count, first_norm_count = r.count;
  if (!rows.empty() && rows.front().norm != Rational(2 * (N - 1), N)) rep.ok = false;
  if (family != 2 * (24 - M) || lead != first_norm_count) rep.ok = false;
  rep.lines.push_back("coefficient at q^" + Rational(N - 1, N).str() + " = " + lead.str() + ", of which " +
                      std::to_string(family) + " from the 4-divisible family (2(24-M) = " +
                      std::to_string(2 * (24 - M)) + ")");
  return rep;
}

ThetaReport verify_class_invariance(long N, const Rational& truncation) {
  ThetaReport rep;
  rep.N = N;
  rep.truncation = truncation;
  const CodePermutation sigma = find_shape_automorphism(N);
  GramLattice L = perp_sublattice(sigma).lattice;
  auto classes = discriminant_classes(L);
  long checked = 0;
  for (auto& c : classes) {
    if (c.y.isZero()) continue;
    Rational h = c.half_norm_mod1;
    long r = num(-h * N).convert_to<long>();
    r = ((r % N) + N) % N;
    QSeries lhs = theta_series(L, c.rep, truncation);
    auto d = first_difference(lhs, theta_rhs(N, r, truncation));
    if (d) {
      rep.ok = false;
      rep.lines.push_back("class mismatch at q^" + d->str());
    }
    ++checked;
  }
  rep.lines.push_back(std::to_string(checked) + " nonzero classes checked");
  return rep;
}

}  // namespace gkm
