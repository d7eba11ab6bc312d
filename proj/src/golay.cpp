#include "gkm/golay.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace gkm {

namespace {

constexpr long P = 23;

long modp(long x) { return ((x % P) + P) % P; }

long inv_mod(long t) {
  long r = 1, b = modp(t), e = P - 2;
  while (e) {
    if (e & 1) r = r * b % P;
    b = b * b % P;
    e >>= 1;
  }
  return r;
}

bool is_residue(long t) {
  for (long x = 1; x < P; ++x)
    if (x * x % P == modp(t)) return true;
  return false;
}

// point index <-> projective coordinate, inf encoded as -1
long coord(int i) { return i == 0 ? -1 : i - 1; }
int index_of(long t) { return t < 0 ? 0 : int(t) + 1; }

template <class F>
CodePermutation from_map(F f) {
  CodePermutation p;
  for (int i = 0; i < kCodeLength; ++i) p.image[i] = index_of(f(coord(i)));
  return p;
}

}  // namespace

std::string label_name(int i) { return i == 0 ? "inf" : std::to_string(i - 1); }

int weight(Word w) { return std::popcount(w); }

std::vector<int> support(Word w) {
  std::vector<int> s;
  for (int i = 0; i < kCodeLength; ++i)
    if (w >> i & 1) s.push_back(i);
  return s;
}

Word word_of(const std::vector<int>& positions) {
  Word w = 0;
  for (int i : positions) w |= Word(1) << i;
  return w;
}

bool GolayCode::contains(Word w) const { return std::binary_search(words.begin(), words.end(), w); }

GolayCode build_code() {
  std::vector<Word> gens;
  for (long s = 0; s < P; ++s) {
    Word w = 0;
    for (long t = 0; t < P; ++t)
      if (t == 0 || is_residue(t)) w |= Word(1) << index_of(modp(t + s));
    if (weight(w) % 2) w |= 1;
    gens.push_back(w);
  }
  gens.push_back(kAllOnes);
  GolayCode code;
  for (Word g : gens) {
    for (Word b : code.generators) g = std::min(g, g ^ b);
    if (g) code.generators.push_back(g);
  }
  if (code.generators.size() != 12) throw Error("build_code: wrong dimension");
  code.words = {0};
  for (Word b : code.generators) {
    size_t n = code.words.size();
    for (size_t i = 0; i < n; ++i) code.words.push_back(code.words[i] ^ b);
  }
  std::sort(code.words.begin(), code.words.end());
  for (Word w : code.words) {
    int wt = weight(w);
    if (wt == 8) code.octads.push_back(w);
    if (wt == 12) code.dodecads.push_back(w);
    if (wt != 0 && wt != 8 && wt != 12 && wt != 16 && wt != 24) throw Error("build_code: bad weight");
  }
  return code;
}

const GolayCode& golay_code() {
  static const GolayCode code = build_code();
  return code;
}

bool is_cset(Word w) { return golay_code().contains(w); }

CodePermutation CodePermutation::identity() {
  CodePermutation p;
  std::iota(p.image.begin(), p.image.end(), 0);
  return p;
}

Word CodePermutation::apply(Word w) const {
  Word r = 0;
  for (int i = 0; i < kCodeLength; ++i)
    if (w >> i & 1) r |= Word(1) << image[i];
  return r;
}

CodePermutation CodePermutation::then(const CodePermutation& g) const {
  CodePermutation r;
  for (int i = 0; i < kCodeLength; ++i) r.image[i] = g.image[image[i]];
  return r;
}

CodePermutation CodePermutation::power(long e) const {
  CodePermutation r = identity(), b = *this;
  while (e > 0) {
    if (e & 1) r = r.then(b);
    b = b.then(b);
    e >>= 1;
  }
  return r;
}

std::vector<std::vector<int>> CodePermutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::array<bool, kCodeLength> seen{};
  for (int i = 0; i < kCodeLength; ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (int j = i; !seen[j]; j = image[j]) {
      seen[j] = true;
      c.push_back(j);
    }
    out.push_back(c);
  }
  return out;
}

long CodePermutation::order() const {
  long o = 1;
  for (auto& c : cycles()) o = std::lcm(o, (long)c.size());
  return o;
}

CycleShape CodePermutation::shape() const {
  std::map<long, long> m;
  for (auto& c : cycles()) m[(long)c.size()]++;
  CycleShape s;
  for (auto& [a, b] : m) s.parts.emplace_back(a, b);
  return s;
}

std::string CodePermutation::to_string() const {
  std::ostringstream os;
  for (auto& c : cycles()) {
    if (c.size() == 1) continue;
    os << '(';
    for (size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << label_name(c[k]);
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

bool preserves_code(const CodePermutation& p) {
  for (Word g : golay_code().generators)
    if (!is_cset(p.apply(g))) return false;
  return true;
}

std::vector<CodePermutation> m24_generators() {
  auto alpha = from_map([](long t) { return t < 0 ? t : modp(t + 1); });
  auto beta = from_map([](long t) { return t < 0 ? t : modp(2 * t); });
  auto gamma = from_map([](long t) -> long {
    if (t < 0) return 0;
    if (t == 0) return -1;
    return modp(-inv_mod(t));
  });
  auto delta = from_map([](long t) -> long {
    if (t <= 0) return t;
    long c = t * t % P * t % P;
    return is_residue(t) ? modp(c * inv_mod(9)) : modp(9 * c);
  });
  return {alpha, beta, gamma, delta};
}

std::uint64_t default_seed(long N) { return 0x5eed0000ULL + std::uint64_t(N); }

bool validate_shape_automorphism(const CodePermutation& p, long N) {
  if (!preserves_code(p)) return false;
  if (p.shape().parts != CycleShape::leech_prime(N).parts) return false;
  std::vector<int> fixed;
  std::vector<Word> long_cycles;
  for (auto& c : p.cycles()) {
    if (c.size() == 1)
      fixed.push_back(c[0]);
    else
      long_cycles.push_back(word_of(c));
  }
  // each long cycle together with some fixed points forms an octad (N=5,7) or a dodecad (N=11)
  long extra = 0, target = 0;
  if (N == 5) extra = 3, target = 8;
  if (N == 7) extra = 1, target = 8;
  if (N == 11) extra = 1, target = 12;
  if (target == 0) return true;
  for (Word c : long_cycles) {
    bool found = false;
    for (Word sub = 0; sub < (Word(1) << fixed.size()) && !found; ++sub) {
      if (std::popcount(sub) != extra) continue;
      Word w = c;
      for (size_t k = 0; k < fixed.size(); ++k)
        if (sub >> k & 1) w |= Word(1) << fixed[k];
      found = weight(w) == target && is_cset(w);
    }
    if (!found) return false;
  }
  return true;
}

CodePermutation find_shape_automorphism(long N, std::uint64_t seed) {
  if (N != 2 && N != 3 && N != 5 && N != 7 && N != 11 && N != 23)
    throw Error("find_shape_automorphism: invalid N");
  auto gens = m24_generators();
  if (N == 23) {
    if (!validate_shape_automorphism(gens[0], 23)) throw Error("search-failure");
    return gens[0];
  }
  // the shift-and-PSL2(23) subgroup already contains the order-11 class
  const size_t ngen = N == 11 ? 3 : 4;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 20000; ++attempt) {
    CodePermutation g = CodePermutation::identity();
    int len = 4 + int(rng() % 24);
    for (int k = 0; k < len; ++k) g = g.then(gens[rng() % ngen]);
    long o = g.order();
    if (o % N != 0) continue;
    CodePermutation h = g.power(o / N);
    if (validate_shape_automorphism(h, N)) return h;
  }
  throw Error("search-failure");
}

CodePermutation find_shape_automorphism(long N) { return find_shape_automorphism(N, default_seed(N)); }

}  // namespace gkm
