#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "monodromy/braid.hpp"
#include "monodromy/garside.hpp"

using namespace bmf;

namespace {

BraidWord random_word(std::mt19937& rng, int n, int len) {
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  BraidWord w(n);
  for (int i = 0; i < len; ++i)
    w.append_letter(sign(rng) ? gen(rng) : -gen(rng));
  return w;
}

// Independent strand-tracking oracle for permutation images: follows each
// strand through the diagram position by position.
Permutation perm_oracle(const BraidWord& w) {
  std::vector<int> at(w.strands);  // at[pos-1] = strand currently there
  for (int i = 0; i < w.strands; ++i) at[i] = i + 1;
  for (int l : w.letters) {
    int i = l < 0 ? -l : l;
    std::swap(at[i - 1], at[i]);
  }
  Permutation p;
  p.image = at;
  return p;
}

// Applies a random element-preserving rewrite: free insertion/cancellation,
// far-commutation swap, or a positive/negative braid-relation triple.
void random_rewrite(std::mt19937& rng, BraidWord& w) {
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<int> gen(1, w.strands - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  switch (kind(rng)) {
    case 0: {  // insert a canceling pair
      int g = gen(rng) * (sign(rng) ? 1 : -1);
      size_t pos = std::uniform_int_distribution<size_t>(0, w.letters.size())(rng);
      w.letters.insert(w.letters.begin() + pos, {g, -g});
      break;
    }
    case 1: {  // cancel an adjacent inverse pair if any
      for (size_t i = 0; i + 1 < w.letters.size(); ++i) {
        if (w.letters[i] == -w.letters[i + 1]) {
          w.letters.erase(w.letters.begin() + i, w.letters.begin() + i + 2);
          break;
        }
      }
      break;
    }
    case 2: {  // commute a distant pair
      for (size_t i = 0; i + 1 < w.letters.size(); ++i) {
        int a = std::abs(w.letters[i]), b = std::abs(w.letters[i + 1]);
        if (std::abs(a - b) >= 2) {
          std::swap(w.letters[i], w.letters[i + 1]);
          break;
        }
      }
      break;
    }
    case 3: {  // braid relation on a same-sign triple
      for (size_t i = 0; i + 2 < w.letters.size(); ++i) {
        int a = w.letters[i], b = w.letters[i + 1], c = w.letters[i + 2];
        if (a == c && ((a > 0) == (b > 0)) &&
            std::abs(std::abs(a) - std::abs(b)) == 1) {
          w.letters[i] = b;
          w.letters[i + 1] = a;
          w.letters[i + 2] = b;
          break;
        }
      }
      break;
    }
  }
}

}  // namespace

TEST_CASE("compose basics") {
  BraidWord s1 = BraidWord::generator(2, 1);
  CHECK(is_trivial(compose(s1, invert(s1))));

  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    BraidWord a = random_word(rng, 6, 20), b = random_word(rng, 6, 20);
    CHECK(degree(compose(a, b)) == degree(a) + degree(b));
    CHECK(permutation(compose(a, b)) == permutation(a) * permutation(b));
  }

  BraidWord w(3, {1, 2});
  Permutation p = permutation(w);
  CHECK(p(1) == 2);
  CHECK(p(2) == 3);
  CHECK(p(3) == 1);

  CHECK_THROWS(compose(BraidWord(3), BraidWord(4)));
}

TEST_CASE("invert") {
  CHECK(invert(BraidWord(5)).empty());
  BraidWord w(3, {1, 2});
  CHECK(invert(w).letters == std::vector<int>{-2, -1});
  std::mt19937 rng(11);
  for (int t = 0; t < 100; ++t) {
    BraidWord a = random_word(rng, 8, 25);
    CHECK(is_trivial(compose(a, invert(a))));
  }
}

TEST_CASE("conjugate") {
  std::mt19937 rng(13);
  BraidWord a = random_word(rng, 4, 12);
  CHECK(equals(conjugate(a, BraidWord(4)), a));
  BraidWord h = random_word(rng, 4, 9);
  CHECK(degree(conjugate(a, h)) == degree(a));

  // conjugate(sigma1, sigma2) in B_3 has permutation (1 3)
  BraidWord c = conjugate(BraidWord::generator(3, 1), BraidWord::generator(3, 2));
  Permutation p = permutation(c);
  CHECK(p(1) == 3);
  CHECK(p(2) == 2);
  CHECK(p(3) == 1);
  CHECK(p == perm_oracle(c));
}

TEST_CASE("degree") {
  CHECK(degree(full_twist(36)) == 1260);
  CHECK(degree(BraidWord(9)) == 0);
  for (int n = 2; n <= 36; ++n)
    CHECK(degree(full_twist(n)) == static_cast<long long>(n) * (n - 1));
}

TEST_CASE("permutation images") {
  for (int n = 2; n <= 8; ++n) CHECK(permutation(full_twist(n)).is_identity());
  for (int i = 1; i <= 5; ++i) {
    Permutation p = permutation(BraidWord::generator(6, i));
    CHECK(p(i) == i + 1);
    CHECK(p(i + 1) == i);
  }
  // delta(4) induces the reversal permutation; brute-force strand tracking.
  Permutation p = perm_oracle(delta(4));
  CHECK(permutation(delta(4)) == p);
  CHECK(p(1) == 4);
  CHECK(p(2) == 3);
  CHECK(p(3) == 2);
  CHECK(p(4) == 1);
}

TEST_CASE("equals: relations") {
  CHECK(equals(BraidWord(3, {1, 2, 1}), BraidWord(3, {2, 1, 2})));
  CHECK(equals(BraidWord(4, {1, 3}), BraidWord(4, {3, 1})));
  CHECK_FALSE(equals(BraidWord::generator(3, 1), BraidWord::generator(3, 2)));

  for (int n = 2; n <= 8; ++n) {
    for (int i = 1; i < n; ++i) {
      for (int j = i + 2; j < n; ++j)
        CHECK(equals(BraidWord(n, {i, j}), BraidWord(n, {j, i})));
      if (i + 1 < n)
        CHECK(equals(BraidWord(n, {i, i + 1, i}), BraidWord(n, {i + 1, i, i + 1})));
    }
  }
}

TEST_CASE("equals: randomized rewriting oracle") {
  std::mt19937 rng(17);
  for (int t = 0; t < 60; ++t) {
    int n = 2 + t % 4;
    BraidWord w = random_word(rng, n, 10 + t % 31);
    BraidWord v = w;
    for (int r = 0; r < 40; ++r) random_rewrite(rng, v);
    CHECK(equals(w, v));
  }
  // Soundness: equals never passes when degree or permutation differ.
  for (int t = 0; t < 40; ++t) {
    BraidWord a = random_word(rng, 5, 12);
    BraidWord b = compose(a, BraidWord::generator(5, 1 + t % 4));
    CHECK_FALSE(equals(a, b));
  }
}

TEST_CASE("delta and full twists") {
  CHECK(equals(full_twist_block(2, 1, 2), BraidWord(2, {1, 1})));
  for (int n = 2; n <= 6; ++n) {
    CHECK(equals(compose(delta(n), delta(n)), full_twist(n)));
    for (int i = 1; i < n; ++i) {
      BraidWord g = BraidWord::generator(n, i);
      CHECK(equals(compose(full_twist(n), g), compose(g, full_twist(n))));
    }
  }
  CHECK_THROWS(full_twist_block(4, 3, 2));
  CHECK_THROWS(full_twist_block(4, 0, 2));
}

TEST_CASE("normal form sanity on delta powers") {
  for (int n = 2; n <= 6; ++n) {
    NormalForm nf(full_twist(n));
    CHECK(nf.delta_power() == 2);
    CHECK(nf.canonical_length() == 0);
    NormalForm nd(invert(delta(n)));
    CHECK(nd.delta_power() == -1);
    CHECK(nd.canonical_length() == 0);
  }
}
