#pragma once

// Words in the Artin generators of the braid group B_n, together with the
// cheap invariants (exponent sum, induced permutation) and the standard
// elements: the Garside half-twist Delta and full twists of consecutive
// puncture blocks.
//
// Conventions, used consistently everywhere in this library:
//   * punctures sit at positions 1..n on the real axis, sigma_i is the
//     counterclockwise half-twist exchanging punctures i and i+1;
//   * a word lists its letters left to right in the order the motions are
//     performed; +i encodes sigma_i, -i encodes sigma_i^{-1};
//   * conjugation (x)^h and (x)_h both mean h^{-1} x h.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace bmf {

struct Permutation {
  // image[i-1] = origin of the strand that occupies position i afterwards.
  std::vector<int> image;

  static Permutation identity(int n) {
    Permutation p;
    p.image.resize(n);
    std::iota(p.image.begin(), p.image.end(), 1);
    return p;
  }

  int size() const { return static_cast<int>(image.size()); }
  int operator()(int i) const { return image[i - 1]; }

  bool is_identity() const {
    for (int i = 1; i <= size(); ++i)
      if (image[i - 1] != i) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation q;
    q.image.resize(image.size());
    for (int i = 1; i <= size(); ++i) q.image[image[i - 1] - 1] = i;
    return q;
  }

  // Function composition: (a*b)(x) = a(b(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    Permutation c;
    c.image.resize(a.image.size());
    for (int i = 1; i <= a.size(); ++i) c.image[i - 1] = a(b(i));
    return c;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.image == b.image;
  }
};

struct BraidWord {
  int strands = 1;
  std::vector<int> letters;  // +i / -i, 1 <= i < strands

  BraidWord() = default;
  explicit BraidWord(int n) : strands(n) {
    if (n < 1) throw std::invalid_argument("braid: strand count must be positive");
  }
  BraidWord(int n, std::vector<int> w) : strands(n), letters(std::move(w)) {
    for (int l : letters) check_letter(l);
  }

  void check_letter(int l) const {
    int i = l < 0 ? -l : l;
    if (i < 1 || i >= strands)
      throw std::invalid_argument("braid: generator index out of range");
  }

  static BraidWord identity(int n) { return BraidWord(n); }

  static BraidWord generator(int n, int i, int sign = +1) {
    BraidWord w(n);
    w.letters.push_back(sign >= 0 ? i : -i);
    w.check_letter(w.letters.back());
    return w;
  }

  bool empty() const { return letters.empty(); }
  size_t size() const { return letters.size(); }

  BraidWord& append(const BraidWord& other) {
    if (other.strands != strands)
      throw std::invalid_argument("braid: strand count mismatch");
    letters.insert(letters.end(), other.letters.begin(), other.letters.end());
    return *this;
  }

  BraidWord& append_letter(int l) {
    check_letter(l);
    letters.push_back(l);
    return *this;
  }

  // Cancels adjacent inverse pairs; a cheap reduction, not a normal form.
  void free_reduce() {
    std::vector<int> out;
    out.reserve(letters.size());
    for (int l : letters) {
      if (!out.empty() && out.back() == -l)
        out.pop_back();
      else
        out.push_back(l);
    }
    letters.swap(out);
  }
};

inline BraidWord compose(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands)
    throw std::invalid_argument("compose: strand count mismatch");
  BraidWord c = a;
  c.append(b);
  return c;
}

inline BraidWord invert(const BraidWord& a) {
  BraidWord b(a.strands);
  b.letters.reserve(a.letters.size());
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it)
    b.letters.push_back(-*it);
  return b;
}

// (a)^h = (a)_h = h^{-1} a h.
inline BraidWord conjugate(const BraidWord& a, const BraidWord& h) {
  if (a.strands != h.strands)
    throw std::invalid_argument("conjugate: strand count mismatch");
  BraidWord c = invert(h);
  c.append(a);
  c.append(h);
  return c;
}

inline long long degree(const BraidWord& a) {
  long long d = 0;
  for (int l : a.letters) d += (l > 0) ? 1 : -1;
  return d;
}

inline Permutation permutation(const BraidWord& a) {
  Permutation p = Permutation::identity(a.strands);
  for (int l : a.letters) {
    int i = l < 0 ? -l : l;
    std::swap(p.image[i - 1], p.image[i]);
  }
  return p;
}

// Garside half-twist of the consecutive block [a, b], embedded in B_n.
// delta_block(n, 1, n) is the classical Delta of B_n.
inline BraidWord delta_block(int n, int a, int b) {
  if (a < 1 || b > n || a > b)
    throw std::invalid_argument("delta_block: bad block");
  BraidWord w(n);
  for (int k = a; k < b; ++k)
    for (int i = k; i >= a; --i) w.letters.push_back(i);
  return w;
}

inline BraidWord delta(int n) { return delta_block(n, 1, n); }

// Full twist Delta^2 of the consecutive block [a, b], embedded in B_n.
inline BraidWord full_twist_block(int n, int a, int b) {
  if (a < 1 || b > n || a > b)
    throw std::invalid_argument("full_twist_block: bad block");
  if (a == b) return BraidWord(n);
  BraidWord w = delta_block(n, a, b);
  return compose(w, w);
}

inline BraidWord full_twist(int n) { return full_twist_block(n, 1, n); }

inline BraidWord power(const BraidWord& a, int k) {
  BraidWord r(a.strands);
  const BraidWord base = k >= 0 ? a : invert(a);
  for (int i = 0, m = k >= 0 ? k : -k; i < m; ++i) r.append(base);
  return r;
}

inline std::string to_string(const BraidWord& a) {
  std::string s = "B" + std::to_string(a.strands) + ":";
  for (int l : a.letters) {
    s += ' ';
    s += std::to_string(l);
  }
  return s;
}

}  // namespace bmf
