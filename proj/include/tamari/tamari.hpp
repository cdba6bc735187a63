#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tamari/paths.hpp"

namespace tamari {

// All covers of p under the corner-swap relation: for each east step
// followed by a north step, the east step is swapped with the shortest
// factor starting at the north step that is a translated ballot path.
std::vector<PathWord> covering_successors(const PathWord& p);

struct Interval {
  int lower = 0;  // vertex indices
  int upper = 0;
  int contacts = 0;  // of the lower path
  int rise = 0;      // of the upper path
  int dist = 0;      // longest covering chain from lower to upper
};

// The m-Tamari lattice on ballot paths of size n (or on Dyck paths when
// built from dyck-form vertices).  Immutable after construction; all
// queries are pure.
class TamariPoset {
 public:
  static TamariPoset build(int m, int n, std::uint64_t cap = kDefaultCap);
  // Poset over arbitrary vertex sets with the same covering rule (used
  // for Dyck-form paths of T_N).
  static TamariPoset build_from(std::vector<PathWord> vertices);

  int m() const { return m_; }
  int n() const { return n_; }
  int size() const { return static_cast<int>(verts_.size()); }
  const PathWord& vertex(int i) const {
    return verts_[static_cast<std::size_t>(i)];
  }
  int index_of(const PathWord& p) const;  // throws InvalidInput if absent
  const std::vector<std::vector<int>>& hasse() const { return hasse_; }

  bool leq(int p, int q) const;
  int meet(int p, int q) const;
  int join(int p, int q) const;
  // Longest chain of covering steps; throws InvalidInput when p != q are
  // incomparable.
  int longest_chain(int p, int q) const;

  int bottom() const;
  int top() const;
  const std::vector<int>& topo_order() const { return topo_; }

  bool is_partial_order() const;  // antisymmetry + transitivity of reach
  bool is_lattice() const;        // unique meet and join for every pair

 private:
  int m_ = 1, n_ = 0;
  std::vector<PathWord> verts_;
  std::vector<std::vector<int>> hasse_;
  std::vector<std::vector<std::uint64_t>> up_;    // up_[i]: bitset of j >= i
  std::vector<std::vector<std::uint64_t>> down_;  // down_[i]: bitset of j <= i
  std::vector<std::vector<int>> dist_;            // -1 when incomparable
  std::vector<int> topo_;

  bool bit(const std::vector<std::uint64_t>& row, int j) const {
    return (row[static_cast<std::size_t>(j >> 6)] >> (j & 63)) & 1u;
  }
  void finish();  // closure, dist, checks container sizes
};

std::vector<Interval> enumerate_intervals(const TamariPoset& poset);

// Order-isomorphism of T_n^(m) onto the elements of T_{nm} above
// (u^m d^m)^n, with covering relations corresponding.
bool check_sublattice_embedding(int m, int n);

struct DyckInterval {
  PathWord lower, upper;
  bool operator==(const DyckInterval& o) const = default;
};

// A Dyck interval whose lower path carries a distinguished contact,
// identified by its 0-based index among the contacts of the lower path.
struct PointedDyckInterval {
  DyckInterval interval;
  int contact_index = 0;
  bool operator==(const PointedDyckInterval& o) const = default;
};

// Inverse bijections between intervals of positive size and pairs
// (pointed interval, interval): P = u P1l d P1r P2, Q = u Q1 d Q2.
std::pair<PointedDyckInterval, DyckInterval> decompose_interval(
    const DyckInterval& interval);
DyckInterval recompose_interval(const PointedDyckInterval& pointed,
                                const DyckInterval& second);

}  // namespace tamari
