#include "gkm/leech.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <unordered_set>

namespace gkm {

namespace {

long mod(long a, long m) { return ((a % m) + m) % m; }

Word class_set(const IVec& v, long k) {
  Word w = 0;
  for (int i = 0; i < kCodeLength; ++i)
    if (mod(v(i), 4) == k) w |= Word(1) << i;
  return w;
}

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

bool is_leech(const IVec& v) {
  if (v.size() != kCodeLength) return false;
  const long m = mod(v(0), 2);
  long sum = 0;
  for (int i = 0; i < kCodeLength; ++i) {
    if (mod(v(i), 2) != m) return false;
    sum += v(i);
  }
  for (long k = m; k < 4; k += 2)
    if (!is_cset(class_set(v, k))) return false;
  return mod(sum - 4 * m, 8) == 0;
}

Rational ambient_norm(const QVec& v) { return v.squaredNorm() / 8; }

const ZMat& leech_basis() {
  static const ZMat basis = [] {
    std::vector<IVec> gens;
    for (Word o : golay_code().octads) {
      IVec v = IVec::Zero(kCodeLength);
      for (int i : support(o)) v(i) = 2;
      gens.push_back(v);
    }
    for (int i = 0; i < kCodeLength; ++i)
      for (int j = i + 1; j < kCodeLength; ++j)
        for (int s : {1, -1}) {
          IVec v = IVec::Zero(kCodeLength);
          v(i) = 4;
          v(j) = 4 * s;
          gens.push_back(v);
        }
    IVec odd = IVec::Ones(kCodeLength);
    odd(0) = -3;
    gens.push_back(odd);
    ZMat g(gens.size(), kCodeLength);
    for (size_t r = 0; r < gens.size(); ++r) {
      if (!is_leech(gens[r])) throw Error("leech_basis: bad generator");
      for (int c = 0; c < kCodeLength; ++c) g(r, c) = gens[r](c);
    }
    ZMat h = hnf_rows(g);
    if (h.rows() != kCodeLength) throw Error("leech_basis: rank deficit");
    return h;
  }();
  return basis;
}

QMat leech_gram() {
  QMat b = cast<Int, Rational>(leech_basis());
  return b * b.transpose() / Rational(8);
}

Norm4Census norm4_count() {
  Norm4Census c;
  // shape (+-4, +-4): all pairs and signs, filtered
  for (int i = 0; i < kCodeLength; ++i)
    for (int j = i + 1; j < kCodeLength; ++j)
      for (int si : {4, -4})
        for (int sj : {4, -4}) {
          IVec v = IVec::Zero(kCodeLength);
          v(i) = si;
          v(j) = sj;
          c.pairs += is_leech(v);
        }
  // shape (+-2^8): every weight-8 support is forced to be a C-set by condition (b)
  for (Word o : golay_code().octads) {
    auto s = support(o);
    for (int signs = 0; signs < 256; ++signs) {
      IVec v = IVec::Zero(kCodeLength);
      for (int k = 0; k < 8; ++k) v(s[k]) = (signs >> k & 1) ? -2 : 2;
      c.octads += is_leech(v);
    }
  }
  // shape (-+3, +-1^23): the positions congruent to 1 mod 4 must form a C-set
  for (Word t : golay_code().words)
    for (int p = 0; p < kCodeLength; ++p) {
      IVec v(kCodeLength);
      for (int i = 0; i < kCodeLength; ++i) v(i) = (t >> i & 1) ? 1 : -1;
      v(p) = (t >> p & 1) ? -3 : 3;
      c.odd += is_leech(v);
    }
  return c;
}

Projection project(const QVec& v, const CodePermutation& sigma) {
  Projection p;
  p.fix = v;
  for (auto& cyc : sigma.cycles()) {
    Rational avg = 0;
    for (int i : cyc) avg += v(i);
    avg /= Rational(long(cyc.size()));
    for (int i : cyc) p.fix(i) = avg;
  }
  p.perp = v - p.fix;
  p.fix_norm = ambient_norm(p.fix);
  p.perp_norm = ambient_norm(p.perp);
  return p;
}

std::vector<ShortDualRow> enumerate_short_dual_perp(long N, const Rational& bound) {
  if (N != 2 && N != 3 && N != 5 && N != 7 && N != 11 && N != 23)
    throw Error("enumerate_short_dual_perp: invalid N");
  if (bound > 2) throw Error("enumerate_short_dual_perp: bound above 2");
  const CodePermutation sigma = find_shape_automorphism(N);
  std::vector<std::vector<int>> cyc;
  Word cycle_union = 0;
  for (auto& c : sigma.cycles())
    if (long(c.size()) == N) {
      cyc.push_back(c);
      cycle_union |= word_of(c);
    }
  const int M = int(cyc.size());
  const Rational dev_bound = bound * 8;
  // deviation sum (a - mean)^2 of a cycle pattern with s twos, k fours, rest zeros
  auto dev = [&](long s, long k) {
    Rational t = 2 * s + 4 * k;
    return Rational(4 * s + 16 * k) - t * t / N;
  };
  std::vector<Rational> min_dev(N);
  for (long s = 0; s < N; ++s) {
    min_dev[s] = dev(s, 0);
    for (long k = 1; k + s < N; ++k) min_dev[s] = std::min(min_dev[s], dev(s, k));
  }
  // restrictions of codewords to the union of long cycles
  std::unordered_set<Word> restr;
  for (Word w : golay_code().words) restr.insert(w & cycle_union);
  // per cycle: candidate 2-sets, as masks in label space, bucketed by size
  std::vector<std::vector<std::pair<long, Word>>> cands(M);
  for (int j = 0; j < M; ++j)
    for (Word sub = 0; sub < (Word(1) << N); ++sub) {
      long s = std::popcount(sub);
      if (s >= N || min_dev[s] > dev_bound) continue;
      Word m = 0;
      for (long i = 0; i < N; ++i)
        if (sub >> i & 1) m |= Word(1) << cyc[j][i];
      cands[j].emplace_back(s, m);
    }
  std::vector<Word> full(M);
  for (int j = 0; j < M; ++j) full[j] = word_of(cyc[j]);
  // realizable 2-set tuples, tallied by their size tuple, with one example each
  std::map<std::vector<long>, std::pair<long, std::vector<Word>>> tally;
  std::vector<long> sizes(M);
  std::vector<Word> chosen(M);
  std::function<void(int, Rational)> dfs = [&](int j, Rational acc) {
    if (j == M) {
      Word base = 0;
      for (int t = 0; t < M; ++t) base |= chosen[t];
      bool ok = false;
      for (long flip = 0; flip < (1L << M) && !ok; ++flip) {
        Word w = base;
        for (int t = 0; t < M; ++t)
          if (flip >> t & 1) w ^= full[t];
        ok = restr.count(w) > 0;
      }
      if (!ok) return;
      auto& slot = tally[sizes];
      if (slot.first++ == 0) slot.second = chosen;
      return;
    }
    for (auto& [s, m] : cands[j]) {
      Rational a = acc + min_dev[s];
      if (a > dev_bound) continue;
      sizes[j] = s;
      chosen[j] = m;
      dfs(j + 1, a);
    }
  };
  dfs(0, 0);
  // distribute the 4-placements
  std::map<Rational, ShortDualRow> rows;
  for (auto& [sz, entry] : tally) {
    auto& [count, example] = entry;
    std::vector<long> ks(M, 0);
    std::function<void(int, Rational, long)> conv = [&](int j, Rational acc, long mult) {
      if (j == M) {
        if (acc == 0) return;
        Rational norm = acc / 8;
        auto& row = rows[norm];
        if (row.count == 0) {
          row.norm = norm;
          QVec w = QVec::Zero(kCodeLength);
          for (int t = 0; t < M; ++t) {
            long placed = 0;
            for (int i : cyc[t]) {
              if (example[t] >> i & 1)
                w(i) = 2;
              else if (placed < ks[t]) {
                w(i) = 4;
                ++placed;
              }
            }
          }
          row.witness = project(w, sigma).perp;
        }
        row.count += count * mult;
        if (std::all_of(sz.begin(), sz.end(), [](long v) { return v == 0; })) row.mod4_count += count * mult;
        return;
      }
      long s = sz[j];
      for (long k = 0; k + s < N; ++k) {
        Rational a = acc + dev(s, k);
        if (a > dev_bound) continue;
        ks[j] = k;
        conv(j + 1, a, mult * binom(N - s, k));
      }
    };
    conv(0, 0, 1);
  }
  std::vector<ShortDualRow> out;
  for (auto& [n, r] : rows) out.push_back(r);
  return out;
}

Sublattice fixed_sublattice(const CodePermutation& sigma) {
  const ZMat& b = leech_basis();
  ZMat a = b;
  for (int r = 0; r < kCodeLength; ++r)
    for (int i = 0; i < kCodeLength; ++i) a(r, sigma.image[i]) -= b(r, i);
  ZMat k = left_kernel(a);
  ZMat basis = k * b;
  QMat bq = cast<Int, Rational>(basis);
  QMat g = bq * bq.transpose() / Rational(8);
  ZMat u = lll_transform(g);
  Sublattice s;
  s.basis = u * basis;
  QMat bb = cast<Int, Rational>(s.basis);
  s.lattice.gram = bb * bb.transpose() / Rational(8);
  s.lattice.provenance = "sigma-fixed sublattice of the Leech lattice";
  return s;
}

Sublattice perp_sublattice(const CodePermutation& sigma) {
  const ZMat& b = leech_basis();
  auto cycles = sigma.cycles();
  ZMat f = ZMat::Zero(kCodeLength, cycles.size());
  for (size_t c = 0; c < cycles.size(); ++c)
    for (int i : cycles[c]) f(i, c) = 1;
  ZMat k = left_kernel(ZMat(b * f));
  ZMat basis = k * b;
  QMat bq = cast<Int, Rational>(basis);
  QMat g = bq * bq.transpose() / Rational(8);
  ZMat u = lll_transform(g);
  Sublattice s;
  s.basis = u * basis;
  QMat bb = cast<Int, Rational>(s.basis);
  s.lattice.gram = bb * bb.transpose() / Rational(8);
  s.lattice.provenance = "orthogonal complement of the sigma-fixed sublattice";
  return s;
}

QVec to_ambient(const ZMat& basis, const QVec& coeffs) {
  return cast<Int, Rational>(basis).transpose() * coeffs;
}

}  // namespace gkm
