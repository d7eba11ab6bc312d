#include <doctest.h>

#include "gkm/golay.hpp"

#include <random>

using namespace gkm;

TEST_CASE("code size and weights") {
  const auto& code = golay_code();
  CHECK(code.words.size() == 4096);
  CHECK(code.octads.size() == 759);
  CHECK(code.dodecads.size() == 2576);
  long w16 = 0;
  for (Word w : code.words) w16 += weight(w) == 16;
  CHECK(w16 == 759);
  CHECK(code.contains(kAllOnes));
  CHECK(code.contains(0));
}

TEST_CASE("is_cset") {
  CHECK(is_cset(0));
  CHECK(is_cset(kAllOnes));
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    Word w = 0;
    while (weight(w) < 5) w |= Word(1) << (rng() % 24);
    CHECK_FALSE(is_cset(w));
  }
}

TEST_CASE("P1 P2 P3") {
  const auto& code = golay_code();
  std::mt19937_64 rng(11);
  for (int k = 0; k < 2000; ++k) {
    Word a = code.words[rng() % 4096], b = code.words[rng() % 4096];
    CHECK(is_cset(a ^ b));
  }
  // octads meet in 0, 2 or 4 places
  for (size_t i = 0; i < code.octads.size(); i += 7)
    for (size_t j = i + 1; j < code.octads.size(); ++j) {
      int m = weight(code.octads[i] & code.octads[j]);
      CHECK((m == 0 || m == 2 || m == 4));
    }
  // octad-dodecad intersections are 2, 4 or 6
  for (size_t i = 0; i < code.octads.size(); i += 13)
    for (Word d : code.dodecads) {
      int m = weight(code.octads[i] & d);
      CHECK((m == 2 || m == 4 || m == 6));
    }
  // dodecads are symmetric differences of two octads
  for (int k = 0; k < 100; ++k) {
    Word d = code.dodecads[rng() % code.dodecads.size()];
    bool found = false;
    for (Word o : code.octads) {
      if (weight(o & d) != 6) continue;
      if (is_cset(o ^ d) && weight(o ^ d) == 8) { found = true; break; }
    }
    CHECK(found);
  }
}

TEST_CASE("generators preserve the code") {
  for (auto& g : m24_generators()) CHECK(preserves_code(g));
  // exhaustive check on all words for the shift
  auto shift = m24_generators()[0];
  for (Word w : golay_code().words) CHECK(is_cset(shift.apply(w)));
}

TEST_CASE("shape automorphisms") {
  for (long N : {2L, 3L, 5L, 7L, 11L, 23L}) {
    CodePermutation s = find_shape_automorphism(N);
    CHECK(s.order() == N);
    CHECK(s.shape().parts == CycleShape::leech_prime(N).parts);
    CHECK(validate_shape_automorphism(s, N));
    for (Word w : golay_code().words) REQUIRE(is_cset(s.apply(w)));
    // deterministic
    CHECK(find_shape_automorphism(N).image == s.image);
  }
  CodePermutation s = find_shape_automorphism(23);
  CHECK(s.image[0] == 0);
  for (int t = 0; t < 23; ++t) CHECK(s.image[1 + t] == 1 + (t + 1) % 23);
  CHECK(find_shape_automorphism(23).to_string().rfind("(0,1,2", 0) == 0);
}
