#include "absorder/absolute_order.hpp"

#include <unordered_map>

#include "absorder/flag_factorization.hpp"

namespace absorder {

GradedPoset build_absolute_order(const GroupId& g, long long max_group) {
  std::vector<Element> elements = enumerate_group(g, max_group);
  std::unordered_map<Element, int, ElementHash> index;
  index.reserve(elements.size());
  for (int v = 0; v < (int)elements.size(); ++v) index.emplace(elements[v], v);

  std::vector<Element> gens;
  for (const Reflection& t : reflections(g)) gens.push_back(t.to_element(g));

  std::vector<std::string> labels(elements.size());
  std::vector<int> ranks(elements.size());
  for (int v = 0; v < (int)elements.size(); ++v) {
    labels[v] = format_element(elements[v]);
    ranks[v] = absolute_length(elements[v]);
  }

  std::vector<std::pair<int, int>> covers;
  for (int v = 0; v < (int)elements.size(); ++v) {
    for (const Element& t : gens) {
      Element u = compose(t, elements[v]);
      if (absolute_length(u) == ranks[v] + 1) covers.emplace_back(v, index.at(u));
    }
  }
  return build_poset(std::move(labels), std::move(ranks), std::move(covers));
}

std::vector<long long> expected_rank_polynomial(const GroupId& g) {
  std::vector<long long> poly{1};
  for (int d : g.degrees()) {
    std::vector<long long> next(poly.size() + 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i];
      next[i + 1] += poly[i] * (d - 1);
    }
    poly = std::move(next);
  }
  return poly;
}

GradedPoset claw(int k) {
  if (k < 2) throw validation_error("claw(k) requires k >= 2");
  std::vector<std::string> labels;
  std::vector<int> ranks;
  std::vector<std::pair<int, int>> covers;
  labels.push_back("0");
  ranks.push_back(0);
  for (int i = 1; i < k; ++i) {
    labels.push_back(std::to_string(i));
    ranks.push_back(1);
    covers.emplace_back(0, i);
  }
  return build_poset(std::move(labels), std::move(ranks), std::move(covers));
}

namespace {

GradedPoset tier_claw(const std::vector<Reflection>& tier) {
  std::vector<std::string> labels;
  std::vector<int> ranks;
  std::vector<std::pair<int, int>> covers;
  labels.push_back("e");
  ranks.push_back(0);
  for (std::size_t i = 0; i < tier.size(); ++i) {
    labels.push_back(tier[i].text());
    ranks.push_back(1);
    covers.emplace_back(0, (int)i + 1);
  }
  return build_poset(std::move(labels), std::move(ranks), std::move(covers));
}

}  // namespace

GradedPoset claw_product(const GroupId& g, long long max_group) {
  if (g.order() > max_group)
    throw size_guard_error("group " + g.text() + " exceeds the enumeration guard of " +
                           std::to_string(max_group) + " elements");
  ReflectionTiers tiers = reflection_tiers(g);
  auto concat = [](const std::string& a, const std::string& b) { return a + b; };
  GradedPoset acc = tier_claw(tiers.tiers.back());
  for (int i = (int)tiers.tiers.size() - 2; i >= 0; --i)
    acc = product(acc, tier_claw(tiers.tiers[i]), concat);
  return acc;
}

}  // namespace absorder
