#pragma once

#include <vector>

#include "absorder/poset.hpp"

// Exact maximum k-family computation with dual chain-cover certificates.
//
// The solver builds a min-cost flow over the strict-order DAG: each vertex v
// splits into in(v) -> out(v) with capacity 1 and cost -1, the source reaches
// every in(v) at cost k, strict relations and sink edges cost 0. A unit of
// flow is a chain; a flow of value f covering c vertices costs k*f - c, so the
// minimum over all flow values gives the chain-partition bound, and
//     max k-family size = |P| + min cost
// with the dual chains read off the flow paths and the family extracted from
// optimal potentials. Everything is exact integer arithmetic.

namespace absorder {

struct KFamilyCertificate {
  int k = 1;
  long long size = 0;
  std::vector<int> family;
  // A partition of all vertices into chains, each listed in increasing order;
  // sum of min(|C|, k) over the chains equals size, which proves optimality.
  std::vector<std::vector<int>> dual_chains;
};

// Maximum k-family with a matching chain-partition certificate. Requires k >= 1.
KFamilyCertificate max_k_family(const GradedPoset& P, int k);

// Reference oracle: direct enumeration with rank-level seeding. Refuses
// posets with more than 22 vertices.
long long max_k_family_exhaustive(const GradedPoset& P, int k);

// Independent certificate check: family is a k-family, chains partition the
// vertices and are totally ordered, and sum min(|C|,k) == size == |family|.
bool validate_certificate(const GradedPoset& P, const KFamilyCertificate& cert);

// Sum of the k largest entries of a rank sequence.
long long k_largest_rank_sum(const RankSequence& s, int k);

bool is_k_sperner(const GradedPoset& P, int k);
bool is_strong_sperner(const GradedPoset& P);

struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational of(long long num, long long den);
  Rational operator+(const Rational& o) const;
  bool operator==(const Rational&) const = default;
};

// The uniform unit flow on a k-claw: value 1/(k-1) on each of the k-1 edges.
struct ClawFlow {
  int k = 2;
  std::vector<Rational> edge_values;
};

ClawFlow claw_normalized_flow(int k);

// Checks the defining conditions: positive values, total flow out of the
// bottom is 1, and the flow into each top equals its share of the top level
// weight (all weights 1).
bool verify_claw_flow(const ClawFlow& flow);

}  // namespace absorder
