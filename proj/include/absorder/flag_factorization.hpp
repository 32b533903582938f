#pragma once

#include <optional>
#include <string>
#include <vector>

#include "absorder/groups.hpp"
#include "absorder/poset.hpp"

// The reflection tiers of the standard flag and the unique factorization they
// induce: every w factors as w = r_n ... r_2 r_1 with r_i drawn from tier i or
// the identity, the number of non-identity factors equals the absolute length,
// and bumping a single identity factor to a tier element produces a cover in
// the absolute order. phi composes a factor tuple back into the group.
//
// The standard flag is fixed once per family; all flags are conjugate, and a
// fixed one keeps factorizations canonical.

namespace absorder {

struct ReflectionTiers {
  GroupId group;
  // tiers[i] holds tier i+1, of size d_{i+1} - 1; the tiers partition reflections(g).
  std::vector<std::vector<Reflection>> tiers;
};

ReflectionTiers reflection_tiers(const GroupId& g);

struct Factorization {
  GroupId group;
  // factors[i] is r_{i+1}; std::nullopt stands for the identity.
  std::vector<std::optional<Reflection>> factors;

  // Number of non-identity factors.
  int support() const;
  // Factors printed tier n first: "(2 3)(1 2)", "e(1 2)", "ee".
  std::string text() const;

  bool operator==(const Factorization&) const = default;
};

// The unique tier factorization of w, by greedy peeling from the top tier.
Factorization factorize(const Element& w);

// Composes r_n ... r_1 (rightmost factor acts first). Throws validation_error
// if some factor does not belong to its tier.
Element phi(const Factorization& f);

// True iff absolute_length(w) equals the non-identity factor count of
// factorize(w) for every element of the group.
bool verify_length_formula(const GroupId& g, long long max_group = kDefaultMaxGroup);

// The claw product with every tuple vertex relabeled by its phi image, plus
// the tuple and element for each vertex index. The image is a spanning
// subposet of build_absolute_order(g).
struct ClawEmbedding {
  GradedPoset image;
  std::vector<Factorization> tuples;
  std::vector<Element> elements;
};

ClawEmbedding embed_claw_product(const GroupId& g, long long max_group = kDefaultMaxGroup);

}  // namespace absorder
