#pragma once

// The skeleton-propagation algorithm: given the ordered table of singular
// values of a local model (rightmost first, as in the source tables), with a
// skeleton, a multiplicity eps in {1,2,4} and a Lefschetz motion per row,
// produce the local braid monodromy factorization
//     factor_j = Delta< (lambda_j) delta_{j-1} ... delta_1 >^{eps_j}.
//
// Rows to the left of the conic's branch point live in the straightened
// model of the complex region, where the conic's two punctures hang as a
// vertical conjugate pair over the gap between slots p and p+1:
//   * the motion of a complex-node row <c, p> realizes as the loop of
//     puncture c counterclockwise around the block [c+1, p];
//   * the branch row's quarter rotation ("IR") turns the vertical pair into
//     the real punctures p, p+1.  It is not a braid; on decorated skeletons
//     it acts by a small case table (flip paths that end on the pair's left
//     member to the other side of the axis, leave paths ending on its right
//     member alone, drag bridges that cross the pair's column).
// Every case is pinned by the worked tables reproduced in the test suite.

#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "disk.hpp"
#include "factorization.hpp"

namespace bmf {

struct Motion {
  enum class Kind { None, Half, Full, CPair, BranchIR };
  Kind kind = Kind::None;
  int a = 0, b = 0;  // block slots (Half/Full); <c, pair-left> of a pair row (CPair)
  int c = 0;         // BranchIR: number of punctures left of the pair

  static Motion none() { return {}; }
  static Motion half(int a, int b) { return {Kind::Half, a, b, 0}; }
  static Motion full(int a, int b) { return {Kind::Full, a, b, 0}; }
  static Motion cpair(int a, int b) { return {Kind::CPair, a, b, 0}; }
  static Motion branch_ir(int c) { return {Kind::BranchIR, 0, 0, c}; }
};

using LambdaCore = std::variant<PathExpr, BlockExpr>;

struct SingularityRecord {
  int index = 0;
  LambdaCore lambda;                // pair rows: the first listed skeleton
  std::optional<PathExpr> lambda2;  // pair rows: the second listed skeleton
  int eps = 2;
  Motion delta;

  bool is_pair() const { return lambda2.has_value(); }
};

namespace engine_detail {

// Counterclockwise loop of the puncture at slot c around the block [c+1, hi].
inline BraidWord puncture_loop(int n, int c, int hi) {
  BraidWord w(n);
  for (int t = c; t < hi; ++t) w.append_letter(t);
  for (int t = hi - 1; t >= c; --t) w.append_letter(t);
  return w;
}

inline BraidWord motion_braid(int n, const Motion& m) {
  switch (m.kind) {
    case Motion::Kind::None:
      return BraidWord(n);
    case Motion::Kind::Half:
      return delta_block(n, m.a, m.b);
    case Motion::Kind::Full:
      return full_twist_block(n, m.a, m.b);
    case Motion::Kind::CPair:
      return puncture_loop(n, m.a, m.b);
    case Motion::Kind::BranchIR:
      throw std::logic_error("branch motion has no braid realization");
  }
  throw std::logic_error("unreachable");
}

// Result of the quarter rotation applied to a transported skeleton: a
// rewritten core plus an extra conjugating braid for dragged bridges.
struct IRResult {
  LambdaCore core;
  BraidWord extra;
};

inline IRResult ir_rewrite(int n, const LambdaCore& core, int p) {
  IRResult r{core, BraidWord(n)};
  if (std::holds_alternative<BlockExpr>(core)) {
    const auto& b = std::get<BlockExpr>(core);
    bool left = false, right = false;
    for (int s : b.support) {
      if (s == p || s == p + 1)
        throw std::invalid_argument(
            "branch rotation across a skeleton containing the pair "
            "(transcription error in table data)");
      (s < p ? left : right) = true;
    }
    if (left && right) {
      // The bridge crosses the pair's column between the conjugate points;
      // straightening drags it once around the support to the pair's right.
      int rmax = b.support.back();
      for (int s = p + 2; s <= rmax; ++s) {
        bool in = false;
        for (int t : b.support) in = in || t == s;
        if (!in)
          throw std::invalid_argument(
              "branch rotation across a gapped straddling skeleton "
              "(transcription error in table data)");
      }
      r.extra = invert(puncture_loop(n, p + 1, rmax));
    }
    return r;
  }
  const auto& e = std::get<PathExpr>(core);
  for (const auto& w : e.wraps)
    if (w.c2 >= p && w.c1 <= p + 1)
      throw std::invalid_argument(
          "branch rotation across a wrap around the pair "
          "(transcription error in table data)");
  if (e.a == p || e.a == p + 1 || (e.a < p && e.b > p + 1))
    throw std::invalid_argument(
        "branch rotation on an unrecognized path near the pair "
        "(transcription error in table data)");
  if (e.b == p) {
    PathExpr f = e;
    f.side = opposite(e.side);
    r.core = f;
  }
  return r;  // ends at p+1, or stays clear of the pair
}

inline BraidWord compile_core(int n, const LambdaCore& core, int eps) {
  if (std::holds_alternative<PathExpr>(core))
    return power(path_twist(n, std::get<PathExpr>(core)), eps);
  return block_twist(n, std::get<BlockExpr>(core), eps);
}

}  // namespace engine_detail

// Transport the skeleton of row j (0-based position in `records`) through
// all earlier motions and raise it to its multiplicity.
inline BraidWord develop_factor(int n, const std::vector<SingularityRecord>& records,
                                size_t j, const LambdaCore& core, int eps) {
  using namespace engine_detail;
  std::optional<size_t> branch;
  for (size_t m = 0; m < j; ++m)
    if (records[m].delta.kind == Motion::Kind::BranchIR) {
      if (branch) throw std::invalid_argument("propagate: two branch rows");
      branch = m;
    }

  LambdaCore cur = core;
  BraidWord conj(n);
  if (branch) {
    int p = records[*branch].delta.c + 1;  // pair slots (p, p+1)
    // Complex-side motions, applied first: rows j-1 down to branch+1.
    for (size_t m = j; m-- > *branch + 1;) {
      if (records[m].delta.kind != Motion::Kind::CPair &&
          records[m].delta.kind != Motion::Kind::None)
        throw std::invalid_argument(
            "propagate: non-pair motion left of the branch point");
      conj.append(motion_braid(n, records[m].delta));
    }
    IRResult ir = ir_rewrite(n, cur, p);
    cur = ir.core;
    BraidWord pre = ir.extra;
    pre.append(conj);
    conj = pre;
    for (size_t m = *branch; m-- > 0;)
      conj.append(motion_braid(n, records[m].delta));
  } else {
    for (size_t m = j; m-- > 0;) conj.append(motion_braid(n, records[m].delta));
  }
  return conjugate(engine_detail::compile_core(n, cur, eps), conj);
}

// Runs the table.  Complex-pair rows emit two degree-2 factors, the one
// developed from the second listed skeleton first, matching the source
// tables' products.
inline Factorization propagate(const std::vector<SingularityRecord>& records, int n) {
  Factorization out(n);
  for (size_t j = 0; j < records.size(); ++j) {
    const auto& r = records[j];
    std::string prov = "row " + std::to_string(r.index);
    try {
      if (r.is_pair()) {
        out.push(develop_factor(n, records, j, LambdaCore(*r.lambda2), 2), prov + "'");
        out.push(develop_factor(n, records, j, r.lambda, 2), prov);
      } else {
        out.push(develop_factor(n, records, j, r.lambda, r.eps), prov);
      }
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("row " + std::to_string(r.index) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace bmf
