#include <doctest.h>

#include "gkm/leech.hpp"

#include <algorithm>
#include <bit>
#include <map>

using namespace gkm;

namespace {

// oracle: all 196560 minimal vectors from the standard shapes, with the sign rules spelled out directly
std::vector<std::array<int, 24>> minimal_vectors() {
  std::vector<std::array<int, 24>> out;
  for (int i = 0; i < 24; ++i)
    for (int j = i + 1; j < 24; ++j)
      for (int a : {4, -4})
        for (int b : {4, -4}) {
          std::array<int, 24> v{};
          v[i] = a;
          v[j] = b;
          out.push_back(v);
        }
  for (Word o : golay_code().octads) {
    auto s = support(o);
    for (int signs = 0; signs < 256; ++signs) {
      if (std::popcount(unsigned(signs)) % 2) continue;
      std::array<int, 24> v{};
      for (int k = 0; k < 8; ++k) v[s[k]] = (signs >> k & 1) ? -2 : 2;
      out.push_back(v);
    }
  }
  for (Word c : golay_code().words)
    for (int p = 0; p < 24; ++p) {
      std::array<int, 24> v;
      for (int i = 0; i < 24; ++i) v[i] = (c >> i & 1) ? -1 : 1;
      v[p] += (c >> p & 1) ? 4 : -4;
      out.push_back(v);
    }
  return out;
}

IVec to_ivec(const std::array<int, 24>& a) {
  IVec v(24);
  for (int i = 0; i < 24; ++i) v(i) = a[i];
  return v;
}

QVec to_qvec(const IVec& a) {
  QVec v(a.size());
  for (int i = 0; i < a.size(); ++i) v(i) = Rational(a(i));
  return v;
}

}  // namespace

TEST_CASE("is_leech examples") {
  IVec v = IVec::Zero(24);
  v(3) = 4;
  v(17) = -4;
  CHECK(is_leech(v));
  CHECK(ambient_norm(to_qvec(v)) == 4);
  CHECK_FALSE(is_leech(IVec::Ones(24)));
  IVec o = IVec::Zero(24);
  for (int i : support(golay_code().octads.front())) o(i) = 2;
  CHECK(is_leech(o));
  CHECK(ambient_norm(to_qvec(o)) == 4);
  IVec bad = IVec::Zero(24);
  bad(0) = 4;
  CHECK_FALSE(is_leech(bad));
}

TEST_CASE("norm 4 census") {
  auto c = norm4_count();
  CHECK(c.pairs == 1104);
  CHECK(c.octads == 97152);
  CHECK(c.odd == 98304);
  CHECK(c.total() == 196560);
  auto all = minimal_vectors();
  CHECK(all.size() == 196560);
  long ok = 0;
  for (auto& a : all) ok += is_leech(to_ivec(a));
  CHECK(ok == 196560);
}

TEST_CASE("leech basis") {
  QMat g = leech_gram();
  CHECK(det_exact(g) == 1);
  for (int i = 0; i < 24; ++i) {
    CHECK(is_integer(g(i, i) / 2));
    IVec v = cast<Int, long>(ZVec(leech_basis().row(i).transpose()));
    CHECK(is_leech(v));
  }
}

TEST_CASE("projection norms are additive") {
  auto all = minimal_vectors();
  for (long N : {2L, 3L, 5L, 7L, 11L, 23L}) {
    CodePermutation s = find_shape_automorphism(N);
    for (size_t i = 0; i < all.size(); i += 1013) {
      QVec v = to_qvec(to_ivec(all[i]));
      Projection p = project(v, s);
      CHECK(p.fix_norm + p.perp_norm == ambient_norm(v));
      CHECK(p.fix.dot(p.perp) == 0);
    }
    // vectors constant on cycles have zero perp part
    QVec c = QVec::Zero(24);
    int k = 0;
    for (auto& cyc : s.cycles()) {
      ++k;
      for (int i : cyc) c(i) = Rational(k);
    }
    CHECK(project(c, s).perp.isZero());
  }
}

TEST_CASE("lambda_q family norms") {
  for (long N : {3L, 5L, 7L, 11L, 23L}) {
    CodePermutation s = find_shape_automorphism(N);
    std::vector<int> cyc;
    for (auto& c : s.cycles())
      if (long(c.size()) == N) cyc = c;
    for (long q = 1; q < N; ++q) {
      QVec v = QVec::Zero(24);
      for (long i = 0; i < q; ++i) v(cyc[i]) = 4;
      CHECK(project(v, s).perp_norm == Rational(2 * q * (N - q), N));
    }
  }
}

TEST_CASE("N=7 octad with cycle pattern (4,4,0)") {
  CodePermutation s = find_shape_automorphism(7);
  std::vector<Word> cyc;
  for (auto& c : s.cycles())
    if (c.size() == 7) cyc.push_back(word_of(c));
  REQUIRE(cyc.size() == 3);
  long found = 0;
  for (Word o : golay_code().octads) {
    std::vector<int> m;
    for (Word c : cyc) m.push_back(weight(o & c));
    std::sort(m.begin(), m.end());
    if (m != std::vector<int>{0, 4, 4}) continue;
    QVec v = QVec::Zero(24);
    for (int i : support(o)) v(i) = 2;
    CHECK(project(v, s).perp_norm == Rational(12, 7));
    ++found;
  }
  CHECK(found > 0);
}

TEST_CASE("short dual vectors of the complement") {
  for (long N : {2L, 3L, 5L, 7L, 11L, 23L}) {
    CAPTURE(N);
    long M = leech_M(N);
    auto rows = enumerate_short_dual_perp(N, 2);
    REQUIRE_FALSE(rows.empty());
    CHECK(rows.front().norm == Rational(2 * (N - 1), N));
    // for N=2 the classes q=1 and q=N-1 coincide
    CHECK(rows.front().mod4_count == (N == 2 ? 24 - M : 2 * (24 - M)));
    for (auto& r : rows) {
      CHECK(r.norm > Rational(2 * (N - 1), N + 1));
      CHECK(ambient_norm(r.witness) == r.norm);
    }
  }
  CHECK(enumerate_short_dual_perp(23, 2).front().count == 46);
  CHECK_THROWS_AS(enumerate_short_dual_perp(13, 2), Error);
  CHECK_THROWS_AS(enumerate_short_dual_perp(11, 3), Error);
}

TEST_CASE("enumeration counts against brute force over minimal vectors") {
  // for N=2,3 the complement is small enough to count dual vectors directly from its Gram matrix
  for (long N : {2L, 3L}) {
    GramLattice L = perp_sublattice(find_shape_automorphism(N)).lattice;
    GramLattice D{L.dual_gram(), ""};
    std::map<Rational, long> census;
    for (auto& v : short_vectors(D, 2))
      if (v.norm > 0) ++census[v.norm];
    auto rows = enumerate_short_dual_perp(N, 2);
    REQUIRE(rows.size() == census.size());
    for (auto& r : rows) CHECK(census[r.norm] == r.count);
  }
}

TEST_CASE("preimages of norm 2+2/N dual points") {
  auto all = minimal_vectors();
  for (long N : {2L, 3L, 5L, 7L, 11L, 23L}) {
    CAPTURE(N);
    CodePermutation s = find_shape_automorphism(N);
    int f = -1;
    std::vector<int> cyc;
    for (auto& c : s.cycles()) {
      if (c.size() == 1 && f < 0) f = c[0];
      if (long(c.size()) == N && cyc.empty()) cyc = c;
    }
    // dual point: 4 on a fixed point, -4/N on the cycle
    long count = 0;
    for (auto& a : all) {
      if (a[f] != 4) continue;
      bool ok = true;
      for (auto& c : s.cycles()) {
        long sum = 0;
        for (int i : c) sum += a[i];
        if (c == cyc ? sum != -4 : (c.size() == 1 ? (c[0] != f && a[c[0]] != 0) : sum != 0)) ok = false;
      }
      if (!ok) continue;
      Projection p = project(to_qvec(to_ivec(a)), s);
      CHECK(p.fix_norm == Rational(2) + Rational(2, N));
      if (p.perp_norm == Rational(2) - Rational(2, N)) ++count;
    }
    CHECK(count == N);
  }
}

TEST_CASE("fixed sublattice has no roots") {
  for (long N : {2L, 3L, 5L, 7L, 11L, 23L}) {
    Sublattice s = fixed_sublattice(find_shape_automorphism(N));
    CHECK(s.lattice.rank() == 2 * leech_M(N));
    CHECK(minimum_norm(s.lattice) == 4);
  }
}
