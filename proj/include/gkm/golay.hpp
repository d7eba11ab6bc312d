#pragma once
#include "gkm/qseries.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace gkm {

// bit i of a word: i = 0 is the label "inf", i = 1 + t is the label t in F_23
using Word = std::uint32_t;
constexpr int kCodeLength = 24;
constexpr Word kAllOnes = (Word(1) << kCodeLength) - 1;

std::string label_name(int i);
int weight(Word w);
std::vector<int> support(Word w);
Word word_of(const std::vector<int>& positions);

struct GolayCode {
  std::vector<Word> generators;  // 12 independent rows
  std::vector<Word> words;       // all 4096, sorted
  std::vector<Word> octads;
  std::vector<Word> dodecads;
  bool contains(Word w) const;
};

// quadratic-residue construction on the projective line over F_23
GolayCode build_code();
const GolayCode& golay_code();
bool is_cset(Word w);

struct CodePermutation {
  std::array<int, kCodeLength> image{};

  static CodePermutation identity();
  Word apply(Word w) const;
  CodePermutation then(const CodePermutation& g) const;  // first this, then g
  CodePermutation power(long e) const;
  long order() const;
  std::vector<std::vector<int>> cycles() const;  // including fixed points as 1-cycles
  CycleShape shape() const;
  std::string to_string() const;
};

bool preserves_code(const CodePermutation& p);

// t -> t+1, t -> 2t, t -> -1/t, and the extra generator fixing inf and 0
std::vector<CodePermutation> m24_generators();

std::uint64_t default_seed(long N);
CodePermutation find_shape_automorphism(long N, std::uint64_t seed);
CodePermutation find_shape_automorphism(long N);
// shape 1^M N^M, code preservation and the cycle/octad structure
bool validate_shape_automorphism(const CodePermutation& p, long N);

}  // namespace gkm
