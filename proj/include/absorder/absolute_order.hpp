#pragma once

#include <vector>

#include "absorder/groups.hpp"
#include "absorder/poset.hpp"

// The absolute order on a reflection group as a GradedPoset: vertices are the
// group elements labeled by cycle notation, rank is absolute length, and the
// covers are the pairs (w, tw) with t a reflection raising the length by one.

namespace absorder {

GradedPoset build_absolute_order(const GroupId& g, long long max_group = kDefaultMaxGroup);

// Coefficients of prod_i (1 + (d_i - 1) q); the rank counts the absolute
// order must realize.
std::vector<long long> expected_rank_polynomial(const GroupId& g);

// The k-claw: one bottom vertex, k-1 top vertices, complete bipartite covers.
// Labels are "0" for the bottom and "1".."k-1" for the tops. Requires k >= 2.
GradedPoset claw(int k);

// C_{d_n} x ... x C_{d_1} over the reflection tiers of g, leftmost factor from
// the top tier. Vertex labels are the tier factors printed left to right with
// identity factors as "e" ("(1 3)(1 2)", "(1 3)e", "ee").
GradedPoset claw_product(const GroupId& g, long long max_group = kDefaultMaxGroup);

}  // namespace absorder
