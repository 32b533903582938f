#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absorder/errors.hpp"

// Generic graded poset machinery. Posets here are finite, carry a rank
// function, and every cover raises rank by exactly one. Vertices carry opaque
// string labels; nothing in this module inspects group structure.
//
// Posets are immutable after construction. The strict-order closure is
// memoized on first use behind a mutex; all queries after that are read-only
// and safe to share across threads.

namespace absorder {

class GradedPoset {
 public:
  GradedPoset() = default;

  int size() const { return (int)ranks_.size(); }
  int rank(int v) const { return ranks_[v]; }
  int top_rank() const { return top_rank_; }
  const std::string& label(int v) const { return labels_[v]; }

  // Index of the vertex with the given label, or -1.
  int vertex(std::string_view label) const;

  // Covers as (lower, upper) pairs, sorted, duplicate-free.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& up_adjacent(int v) const { return up_[v]; }

  // Strict order: true iff x < y in the order generated by the covers.
  bool less(int x, int y) const;
  long long strict_pair_count() const;
  std::vector<std::pair<int, int>> strict_order_pairs() const;
  std::vector<int> greater_vertices(int x) const;

 private:
  friend GradedPoset build_poset(std::vector<std::string> labels, std::vector<int> ranks,
                                 std::vector<std::pair<int, int>> covers);

  using Bits = std::vector<std::uint64_t>;
  const std::vector<Bits>& closure() const;

  std::vector<std::string> labels_;
  std::vector<int> ranks_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_;
  std::vector<int> by_rank_order_;  // vertex indices sorted by descending rank
  int top_rank_ = 0;
  std::shared_ptr<std::vector<std::pair<std::string, int>>> label_index_;

  mutable std::shared_ptr<std::mutex> closure_mutex_ = std::make_shared<std::mutex>();
  mutable std::shared_ptr<const std::vector<Bits>> closure_;
};

// Validates and builds. Rejects rank jumps != 1, dangling or duplicate covers,
// duplicate labels, an empty bottom rank, and empty intermediate ranks.
GradedPoset build_poset(std::vector<std::string> labels, std::vector<int> ranks,
                        std::vector<std::pair<int, int>> covers);

// Re-checks the construction invariants on a built poset.
bool validate_poset(const GradedPoset& P);

// Cartesian product: rank(p,q) = rank(p) + rank(q); covers move one coordinate
// along a cover of its factor. Vertex (p,q) gets index p * Q.size() + q and
// label combine(P.label(p), Q.label(q)).
GradedPoset product(const GradedPoset& P, const GradedPoset& Q);
GradedPoset product(const GradedPoset& P, const GradedPoset& Q,
                    const std::function<std::string(const std::string&, const std::string&)>& combine);

// Same structure, new labels.
GradedPoset relabel(const GradedPoset& P, const std::function<std::string(int)>& new_label);

using RankSequence = std::vector<long long>;

RankSequence rank_sequence(const GradedPoset& P);
bool is_unimodal(const RankSequence& s);
// counts[i]^2 > counts[i-1] * counts[i+1] for every interior i.
bool is_strictly_log_concave(const RankSequence& s);

// True iff P and Q have identical label sets with identical ranks and every
// strict relation of P also holds in Q.
bool is_spanning_subposet(const GradedPoset& P, const GradedPoset& Q);

// True iff no k+1 vertices of S are pairwise comparable. Requires k >= 1 and
// S duplicate-free.
bool is_k_family(const GradedPoset& P, const std::vector<int>& S, int k);

// Deterministic DOT digraph: vertices grouped by rank, edges lower -> higher,
// everything sorted by (rank, label). Byte-identical across runs.
std::string export_dot(const GradedPoset& P);
std::string export_dot(const GradedPoset& P, const std::function<std::string(int)>& labeler);

}  // namespace absorder
