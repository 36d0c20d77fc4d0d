#pragma once

// Left-greedy Garside normal form for B_n, the equality oracle of this
// library.  A braid is maintained as Delta^d * F_1 ... F_k where the F_i are
// permutation braids (positive braids in which every pair of strands crosses
// at most once), each a proper nonempty divisor of Delta, and every adjacent
// pair is left-weighted: S(F_{i+1}) is contained in F(F_i).
//
// Permutation braids are stored as strand-routing tables f, f[start] = end.
// For a word u followed by v the table composes as f_uv = f_v o f_u.

#include <cstdint>
#include <functional>
#include <vector>

#include "braid.hpp"

namespace bmf {

namespace garside_detail {

using Table = std::vector<uint8_t>;  // 0-based: table[i] = f(i+1) - 1

inline Table id_table(int n) {
  Table t(n);
  for (int i = 0; i < n; ++i) t[i] = static_cast<uint8_t>(i);
  return t;
}

inline bool is_id(const Table& t) {
  for (size_t i = 0; i < t.size(); ++i)
    if (t[i] != i) return false;
  return true;
}

inline Table reversal(int n) {
  Table t(n);
  for (int i = 0; i < n; ++i) t[i] = static_cast<uint8_t>(n - 1 - i);
  return t;
}

inline bool is_delta(const Table& t) {
  int n = static_cast<int>(t.size());
  for (int i = 0; i < n; ++i)
    if (t[i] != n - 1 - i) return false;
  return true;
}

// u then v.
inline Table compose_tables(const Table& u, const Table& v) {
  Table w(u.size());
  for (size_t i = 0; i < u.size(); ++i) w[i] = v[u[i]];
  return w;
}

inline Table inverse_table(const Table& u) {
  Table w(u.size());
  for (size_t i = 0; i < u.size(); ++i) w[u[i]] = static_cast<uint8_t>(i);
  return w;
}

// Conjugation by Delta: sigma_i -> sigma_{n-i}; on tables R o f o R.
inline Table flip_table(const Table& u) {
  int n = static_cast<int>(u.size());
  Table w(n);
  for (int i = 0; i < n; ++i) w[n - 1 - i] = static_cast<uint8_t>(n - 1 - u[i]);
  return w;
}

// sigma_s left-divides the permutation braid f iff the strands arriving at
// adjacent start positions s, s+1 cross, i.e. f(s) > f(s+1).
inline bool in_starting_set(const Table& f, int s) { return f[s - 1] > f[s]; }

// sigma_s right-divides f iff f^{-1}(s) > f^{-1}(s+1).
inline bool in_finishing_set(const Table& f, const Table& finv, int s) {
  return finv[s - 1] > finv[s];
}

struct NFState {
  int n = 1;
  long long delta_pow = 0;
  int flip_parity = 0;           // list semantics: Delta^d * Phi^p(F_1...F_k)
  std::vector<Table> factors;    // stored un-flipped

  explicit NFState(int strands) : n(strands) {}

  Table incoming(const Table& t) const {
    return flip_parity ? flip_table(t) : t;
  }

  // Append one positive permutation braid.
  void push_positive(const Table& t_in) {
    Table t = incoming(t_in);
    if (is_id(t)) return;
    if (is_delta(t)) {
      absorb_delta_at_end();
      return;
    }
    factors.push_back(t);
    rebalance();
  }

  void absorb_delta_at_end() {
    // F_1..F_k * Delta = Delta * flip(F_1)..flip(F_k)
    for (auto& f : factors) f = flip_table(f);
    delta_pow += 1;
  }

  void push_delta_inverse() {
    delta_pow -= 1;
    flip_parity ^= 1;
  }

  // sigma_i as a table.
  Table gen_table(int i) const {
    Table t = id_table(n);
    std::swap(t[i - 1], t[i]);
    return t;
  }

  void push_letter(int l) {
    int i = l < 0 ? -l : l;
    if (l > 0) {
      push_positive(gen_table(i));
    } else {
      // sigma_i^{-1} = Delta^{-1} * (Delta sigma_i^{-1}); the positive part
      // has table tau_i o R.
      push_delta_inverse();
      Table t = compose_tables(reversal(n), gen_table(i));
      push_positive(t);
    }
  }

  // Makes (factors[a], factors[a+1]) left-weighted by moving head letters of
  // the right factor into the left one.  Returns true if anything moved.
  // Does not erase; callers clean up empty / Delta factors.
  bool slide_pair(size_t a) {
    Table& A = factors[a];
    Table& B = factors[a + 1];
    bool moved = false;
    Table Ainv = inverse_table(A);
    while (true) {
      int found = 0;
      for (int s = 1; s < n; ++s) {
        if (in_starting_set(B, s) && !in_finishing_set(A, Ainv, s)) {
          found = s;
          break;
        }
      }
      if (!found) break;
      moved = true;
      int s = found;
      // A <- A sigma_s: f_{A'} = tau_s o f_A.
      for (int x = 0; x < n; ++x) {
        if (A[x] == s - 1)
          A[x] = static_cast<uint8_t>(s);
        else if (A[x] == s)
          A[x] = static_cast<uint8_t>(s - 1);
      }
      // B = sigma_s B' => f_{B'} = f_B o tau_s.
      std::swap(B[s - 1], B[s]);
      Ainv = inverse_table(A);
    }
    return moved;
  }

  // Erase factors[a] == Delta, pushing it through everything to its left.
  void absorb_delta_at(size_t a) {
    factors.erase(factors.begin() + a);
    for (size_t j = 0; j < a; ++j) factors[j] = flip_table(factors[j]);
    delta_pow += 1;
  }

  // Restore left-weightedness after a change at the tail.  Terminates because
  // every slide strictly shifts letters leftward.
  void rebalance() {
    bool changed = true;
    while (changed) {
      changed = false;
      size_t j = factors.size();
      while (j-- > 1) {
        if (j >= factors.size()) continue;
        if (!slide_pair(j - 1)) continue;
        changed = true;
        if (is_id(factors[j])) factors.erase(factors.begin() + j);
        if (is_delta(factors[j - 1])) absorb_delta_at(j - 1);
      }
    }
  }

  void finish() {
    // Resolve the lazy flip so states compare structurally.
    if (flip_parity) {
      for (auto& f : factors) f = flip_table(f);
      flip_parity = 0;
    }
  }
};

}  // namespace garside_detail

class NormalForm {
 public:
  NormalForm() = default;

  explicit NormalForm(const BraidWord& w) : strands_(w.strands) {
    garside_detail::NFState st(w.strands);
    for (int l : w.letters) st.push_letter(l);
    st.finish();
    delta_pow_ = st.delta_pow;
    factors_ = std::move(st.factors);
  }

  int strands() const { return strands_; }
  long long delta_power() const { return delta_pow_; }
  size_t canonical_length() const { return factors_.size(); }

  bool is_identity() const { return delta_pow_ == 0 && factors_.empty(); }

  friend bool operator==(const NormalForm& a, const NormalForm& b) {
    return a.strands_ == b.strands_ && a.delta_pow_ == b.delta_pow_ &&
           a.factors_ == b.factors_;
  }

  // Stable key for hashing factor tuples (Hurwitz search).
  std::vector<uint8_t> key() const {
    std::vector<uint8_t> k;
    k.push_back(static_cast<uint8_t>(strands_));
    long long d = delta_pow_;
    for (int i = 0; i < 8; ++i) {
      k.push_back(static_cast<uint8_t>(d & 0xff));
      d >>= 8;
    }
    for (const auto& f : factors_) {
      k.push_back(0xfe);
      k.insert(k.end(), f.begin(), f.end());
    }
    return k;
  }

 private:
  int strands_ = 1;
  long long delta_pow_ = 0;
  std::vector<garside_detail::Table> factors_;
};

inline bool equals(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands)
    throw std::invalid_argument("equals: strand count mismatch");
  if (degree(a) != degree(b)) return false;
  if (!(permutation(a) == permutation(b))) return false;
  return NormalForm(a) == NormalForm(b);
}

inline bool is_trivial(const BraidWord& a) {
  if (degree(a) != 0) return false;
  if (!permutation(a).is_identity()) return false;
  return NormalForm(a).is_identity();
}

}  // namespace bmf
