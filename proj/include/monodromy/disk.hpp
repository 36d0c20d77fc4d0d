#pragma once

// The punctured-disk path algebra: decorated paths and skeletons over a
// fiber of labelled punctures, their half-twists, and the Lefschetz motions
// (node half-twists, tangent full twists, complex-pair twists, and the
// branch-point quarter rotation).
//
// Geometry conventions (fixed here, validated downstream against the
// regeneration tables):
//   * a braid word reads left to right in the order motions are performed;
//     applying a motion g to a path p conjugates: H(g(p)) = g^{-1} H(p) g,
//     which is exactly the (x)^g of the source notation;
//   * the plain below-axis path from slot a to slot b is the image of the
//     standard segment (a, a+1) under the drag sigma_{a+1} ... sigma_{b-1},
//     so its half-twist is (sigma_{b-1}...sigma_{a+1})^{-1} sigma_a (...);
//   * a dip flips which side of the axis the path passes one puncture on;
//   * a wrap sends the path's near endpoint on a counterclockwise loop
//     around a consecutive block of punctures outside the path.

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "braid.hpp"
#include "garside.hpp"

namespace bmf {

// A puncture label: base index plus an optional prime, e.g. 4 or 4'.
struct Label {
  int base = 0;
  bool primed = false;

  friend bool operator==(const Label& x, const Label& y) {
    return x.base == y.base && x.primed == y.primed;
  }
  friend auto operator<=>(const Label& x, const Label& y) = default;
};

inline std::string to_string(const Label& l) {
  return std::to_string(l.base) + (l.primed ? "'" : "");
}

// An ordered fiber of labelled punctures; slot i (1-based) is the i-th
// puncture from the left.
struct Fiber {
  std::vector<Label> labels;

  int size() const { return static_cast<int>(labels.size()); }

  int slot(const Label& l) const {
    for (int i = 0; i < size(); ++i)
      if (labels[i] == l) return i + 1;
    throw std::invalid_argument("fiber: unknown label " + to_string(l));
  }

  const Label& at(int slot) const { return labels[slot - 1]; }

  static Fiber plain(int n) {
    Fiber f;
    for (int i = 1; i <= n; ++i) f.labels.push_back({i, false});
    return f;
  }

  // The doubled fiber 1,1',2,2',...,n,n'.
  static Fiber doubled(int n) {
    Fiber f;
    for (int i = 1; i <= n; ++i) {
      f.labels.push_back({i, false});
      f.labels.push_back({i, true});
    }
    return f;
  }
};

enum class Side { Below, Above };

inline Side opposite(Side s) { return s == Side::Below ? Side::Above : Side::Below; }

// A decorated path between two punctures.  Slsatted in slot coordinates.
struct PathExpr {
  int a = 0, b = 0;  // 1 <= a < b <= n
  Side side = Side::Below;
  std::vector<int> dips;  // slots in (a,b) passed on the opposite side
  struct Wrap {
    int c1 = 0, c2 = 0;  // consecutive slot range, entirely left or right of [a,b]
  };
  std::vector<Wrap> wraps;  // applied outermost-first

  bool dipped(int t) const {
    for (int d : dips)
      if (d == t) return true;
    return false;
  }
};

// A skeleton: a set of punctures joined below the axis.
struct BlockExpr {
  std::vector<int> support;  // sorted slots, size >= 2
};

namespace disk_detail {

// Temporal word of the counterclockwise loop of the puncture at slot p
// around the consecutive block [q1, q2] to its right (p = q1 - 1).
inline BraidWord loop_right_of(int n, int p, int q2) {
  BraidWord w(n);
  for (int t = p; t < q2; ++t) w.append_letter(t);
  for (int t = q2 - 1; t >= p; --t) w.append_letter(t);
  return w;
}

// Same, block [q1, q2] to the left of the puncture at slot p (p = q2 + 1).
inline BraidWord loop_left_of(int n, int q1, int p) {
  BraidWord w(n);
  for (int t = p - 1; t >= q1; --t) w.append_letter(t);
  for (int t = q1; t <= p - 1; ++t) w.append_letter(t);
  return w;
}

}  // namespace disk_detail

// Motion word realizing one wrap of a finished path (temporal order).
inline BraidWord wrap_motion(int n, const PathExpr& p, const PathExpr::Wrap& w) {
  BraidWord m(n);
  if (w.c1 > p.b) {
    // Drag the right endpoint from slot b out to c1-1, loop, drag back.
    int sgn = p.side == Side::Below ? +1 : -1;
    BraidWord drag(n);
    for (int t = p.b; t <= w.c1 - 2; ++t) drag.append_letter(sgn * t);
    m.append(drag);
    m.append(disk_detail::loop_right_of(n, w.c1 - 1, w.c2));
    m.append(invert(drag));
  } else if (w.c2 < p.a) {
    // Drag the left endpoint from slot a down to c2+1, loop, drag back.
    int sgn = p.side == Side::Below ? -1 : +1;
    BraidWord drag(n);
    for (int t = p.a - 1; t >= w.c2 + 1; --t) drag.append_letter(sgn * t);
    m.append(drag);
    m.append(disk_detail::loop_left_of(n, w.c1, w.c2 + 1));
    m.append(invert(drag));
  } else {
    throw std::invalid_argument("wrap range must lie outside the path span");
  }
  return m;
}

// The half-twist braid of a decorated path.
inline BraidWord path_twist(int n, const PathExpr& p) {
  if (p.a < 1 || p.b > n || p.a >= p.b)
    throw std::invalid_argument("path_twist: bad endpoints");
  BraidWord drag(n);
  for (int t = p.a + 1; t <= p.b - 1; ++t) {
    int e = p.side == Side::Below ? +1 : -1;
    if (p.dipped(t)) e = -e;
    drag.append_letter(e * t);
  }
  BraidWord tw = conjugate(BraidWord::generator(n, p.a), drag);
  // Outermost wraps act first; later motions append on the right.
  BraidWord conj(n);
  for (auto it = p.wraps.rbegin(); it != p.wraps.rend(); ++it)
    conj = compose(wrap_motion(n, p, *it), conj);
  return conjugate(tw, conj);
}

// Motion word gathering a skeleton's support into a consecutive run at its
// leftmost slot, dragging each puncture leftward below the axis.
inline BraidWord gather_motion(int n, const BlockExpr& s) {
  BraidWord g(n);
  int m = static_cast<int>(s.support.size());
  for (int j = 1; j < m; ++j) {
    int from = s.support[j];
    int to = s.support[0] + j;
    for (int t = from - 1; t >= to; --t) g.append_letter(-t);
  }
  return g;
}

// The block twist of a skeleton: gather, twist the consecutive block, spread
// back.  eps = 1 half twist, 2 full twist, 4 squared full twist.
inline BraidWord block_twist(int n, const BlockExpr& s, int eps) {
  if (eps != 1 && eps != 2 && eps != 4)
    throw std::invalid_argument("block_twist: eps must be 1, 2 or 4");
  if (s.support.size() < 2)
    throw std::invalid_argument("block_twist: support too small");
  for (size_t i = 0; i + 1 < s.support.size(); ++i)
    if (s.support[i] >= s.support[i + 1])
      throw std::invalid_argument("block_twist: support must be sorted");
  int a = s.support.front();
  int b = a + static_cast<int>(s.support.size()) - 1;
  BraidWord core = delta_block(n, a, b);
  BraidWord tw(n);
  for (int i = 0; i < eps; ++i) tw.append(core);
  BraidWord g = gather_motion(n, s);
  // The skeleton is the image of the gathered block under the un-gather
  // motion g^{-1}: H = conjugate(block twist, g^{-1}).
  return conjugate(tw, invert(g));
}

// Spec-level DiskPath: a standard below-axis segment plus the conjugating
// braid of all motions applied so far (temporal order).
struct DiskPath {
  int strands = 1;
  int a = 0, b = 0;
  BraidWord conjugator;

  DiskPath() = default;
  DiskPath(int n, int a_, int b_) : strands(n), a(a_), b(b_), conjugator(n) {
    if (a < 1 || b > n || a >= b) throw std::invalid_argument("DiskPath: bad endpoints");
  }
};

inline BraidWord half_twist_of(const DiskPath& p) {
  PathExpr e;
  e.a = p.a;
  e.b = p.b;
  return conjugate(path_twist(p.strands, e), p.conjugator);
}

// Applying a motion braid appends it to the conjugator.
inline DiskPath act(const BraidWord& g, const DiskPath& p) {
  if (g.strands != p.strands) throw std::invalid_argument("act: strand mismatch");
  DiskPath q = p;
  q.conjugator = compose(q.conjugator, g);
  return q;
}

}  // namespace bmf
