#include <set>

#include "absorder/absolute_order.hpp"
#include "absorder/flag_factorization.hpp"
#include "doctest.h"

using namespace absorder;

namespace {

std::vector<std::string> tier_texts(const std::vector<Reflection>& tier) {
  std::vector<std::string> out;
  for (const Reflection& t : tier) out.push_back(t.text());
  return out;
}

// Enumerates every tier tuple of g, odometer over (tier_i + identity).
std::vector<Factorization> all_tuples(const GroupId& g) {
  ReflectionTiers tiers = reflection_tiers(g);
  const int n = (int)tiers.tiers.size();
  std::vector<Factorization> out;
  std::vector<int> digits(n, 0);
  while (true) {
    Factorization f;
    f.group = g;
    f.factors.assign(n, std::nullopt);
    for (int i = 0; i < n; ++i)
      if (digits[i] > 0) f.factors[i] = tiers.tiers[i][digits[i] - 1];
    out.push_back(std::move(f));
    int i = 0;
    while (i < n && ++digits[i] > (int)tiers.tiers[i].size()) digits[i++] = 0;
    if (i == n) break;
  }
  return out;
}

}  // namespace

TEST_CASE("reflection tiers") {
  ReflectionTiers a2 = reflection_tiers(GroupId{Family::A, 2});
  REQUIRE(a2.tiers.size() == 2);
  CHECK(tier_texts(a2.tiers[0]) == std::vector<std::string>{"(1 2)"});
  CHECK(tier_texts(a2.tiers[1]) == std::vector<std::string>{"(1 3)", "(2 3)"});

  ReflectionTiers b2 = reflection_tiers(GroupId{Family::B, 2});
  CHECK(tier_texts(b2.tiers[0]) == std::vector<std::string>{"[1]"});
  CHECK(tier_texts(b2.tiers[1]) == std::vector<std::string>{"[2]", "((1,2))", "((1,-2))"});

  ReflectionTiers b3 = reflection_tiers(GroupId{Family::B, 3});
  CHECK(b3.tiers[0].size() == 1);
  CHECK(b3.tiers[1].size() == 3);
  CHECK(b3.tiers[2].size() == 5);

  SUBCASE("tiers partition the reflections with sizes d_i - 1") {
    std::vector<GroupId> groups;
    for (int n = 1; n <= 5; ++n) groups.push_back({Family::A, n});
    for (int n = 1; n <= 4; ++n) groups.push_back({Family::B, n});
    for (int m = 3; m <= 8; ++m) groups.push_back({Family::I2, m});
    for (const GroupId& g : groups) {
      CAPTURE(g.text());
      ReflectionTiers tiers = reflection_tiers(g);
      std::vector<int> degrees = g.degrees();
      REQUIRE(tiers.tiers.size() == degrees.size());
      std::set<std::string> seen;
      std::size_t total = 0;
      for (std::size_t i = 0; i < tiers.tiers.size(); ++i) {
        CHECK((int)tiers.tiers[i].size() == degrees[i] - 1);
        for (const Reflection& t : tiers.tiers[i]) CHECK(seen.insert(t.text()).second);
        total += tiers.tiers[i].size();
      }
      CHECK(total == reflections(g).size());
      for (const Reflection& t : reflections(g)) CHECK(seen.count(t.text()) == 1);
    }
  }
}

TEST_CASE("factorize") {
  GroupId a2{Family::A, 2};
  CHECK(factorize(Element::identity(a2)).text() == "ee");
  CHECK(factorize(Element::identity(a2)).support() == 0);

  Factorization f = factorize(parse_element("(1 3 2)", a2));
  CHECK(f.text() == "(2 3)(1 2)");
  CHECK(f.support() == 2);

  GroupId b2{Family::B, 2};
  CHECK(factorize(parse_element("[2]", b2)).text() == "[2]e");
  CHECK(factorize(parse_element("[2]", b2)).support() == 1);

  GroupId i27{Family::I2, 7};
  CHECK(factorize(parse_element("s0", i27)).text() == "es0");
  CHECK(factorize(parse_element("s4", i27)).text() == "s4e");
  CHECK(factorize(parse_element("r3", i27)).text() == "s4s0");
}

TEST_CASE("phi") {
  GroupId a2{Family::A, 2};
  Factorization id{a2, {std::nullopt, std::nullopt}};
  CHECK(phi(id) == Element::identity(a2));

  Factorization f{a2, {Reflection::transposition(1, 2), Reflection::transposition(2, 3)}};
  CHECK(format_element(phi(f)) == "(1 3 2)");

  Factorization top_only{a2, {std::nullopt, Reflection::transposition(1, 3)}};
  CHECK(phi(top_only) == Reflection::transposition(1, 3).to_element(a2));

  // (1 2) is a tier-1 factor; rejecting it in the tier-2 slot
  Factorization bad{a2, {std::nullopt, Reflection::transposition(1, 2)}};
  CHECK_THROWS_AS(phi(bad), validation_error);
}

TEST_CASE("factorization round trips") {
  std::vector<GroupId> groups{{Family::A, 1}, {Family::A, 2}, {Family::A, 3},
                              {Family::B, 1}, {Family::B, 2}, {Family::B, 3},
                              {Family::I2, 3}, {Family::I2, 8}};
  for (const GroupId& g : groups) {
    CAPTURE(g.text());
    for (const Element& w : enumerate_group(g)) CHECK(phi(factorize(w)) == w);
    for (const Factorization& f : all_tuples(g)) CHECK(factorize(phi(f)) == f);
    CHECK((long long)all_tuples(g).size() == g.order());
    CHECK(verify_length_formula(g));
  }
}

TEST_CASE("factorize agrees with exhaustive search on tiny groups") {
  // Independent oracle: scan every tuple for the ones whose product is w.
  for (const GroupId& g : {GroupId{Family::A, 3}, GroupId{Family::B, 2}, GroupId{Family::B, 3}}) {
    CAPTURE(g.text());
    std::vector<Factorization> tuples = all_tuples(g);
    for (const Element& w : enumerate_group(g)) {
      int matches = 0;
      Factorization found{g, {}};
      for (const Factorization& f : tuples)
        if (phi(f) == w) {
          ++matches;
          found = f;
        }
      CHECK(matches == 1);  // existence and uniqueness
      CHECK(found == factorize(w));
    }
  }
}

TEST_CASE("top tier moves each point home through a unique reflection") {
  for (int n = 1; n <= 5; ++n) {
    GroupId g{Family::A, n};
    const auto tier = reflection_tiers(g).tiers.back();
    for (int j = 1; j <= n; ++j) {
      int hits = 0;
      for (const Reflection& t : tier)
        if (t.to_element(g).apply(j) == n + 1) ++hits;
      CHECK(hits == 1);
    }
  }
  for (int n = 1; n <= 4; ++n) {
    GroupId g{Family::B, n};
    const auto tier = reflection_tiers(g).tiers.back();
    for (int v = -n; v <= n; ++v) {
      if (v == 0 || v == n) continue;
      int hits = 0;
      for (const Reflection& t : tier)
        if (t.to_element(g).apply(v) == n) ++hits;
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("claw product embeds as a spanning subposet") {
  GroupId a2{Family::A, 2};
  ClawEmbedding emb = embed_claw_product(a2);
  GradedPoset abs = build_absolute_order(a2);
  CHECK(emb.image.size() == 6);
  CHECK(is_spanning_subposet(emb.image, abs));

  // Fig-style spot check: the tuple composing to (1 3 2) sits above the image of e(1 2).
  int from = emb.image.vertex("(1 2)");
  int to = emb.image.vertex("(1 3 2)");
  REQUIRE(from >= 0);
  REQUIRE(to >= 0);
  CHECK(emb.image.less(from, to));
  for (int v = 0; v < emb.image.size(); ++v)
    CHECK(format_element(emb.elements[v]) == emb.image.label(v));

  SUBCASE("type A1 is an isomorphism") {
    ClawEmbedding tiny = embed_claw_product(GroupId{Family::A, 1});
    GradedPoset abs1 = build_absolute_order(GroupId{Family::A, 1});
    CHECK(is_spanning_subposet(tiny.image, abs1));
    CHECK(is_spanning_subposet(abs1, tiny.image));
  }

  SUBCASE("type B2 hits all 8 elements and its covers are absolute covers") {
    GroupId b2{Family::B, 2};
    ClawEmbedding embB = embed_claw_product(b2);
    GradedPoset absB = build_absolute_order(b2);
    CHECK(embB.image.size() == 8);
    std::set<std::string> labels;
    for (int v = 0; v < embB.image.size(); ++v) labels.insert(embB.image.label(v));
    CHECK(labels.size() == 8);  // phi is a bijection
    CHECK(embB.image.covers().size() == 10);
    std::set<std::pair<std::string, std::string>> abs_covers;
    for (auto [x, y] : absB.covers()) abs_covers.insert({absB.label(x), absB.label(y)});
    for (auto [x, y] : embB.image.covers())
      CHECK(abs_covers.count({embB.image.label(x), embB.image.label(y)}) == 1);
    CHECK(is_spanning_subposet(embB.image, absB));
  }
}

TEST_CASE("tuple bumps are absolute-order covers") {
  for (const GroupId& g : {GroupId{Family::A, 3}, GroupId{Family::B, 2}, GroupId{Family::I2, 6}}) {
    CAPTURE(g.text());
    ReflectionTiers tiers = reflection_tiers(g);
    for (const Factorization& f : all_tuples(g)) {
      Element x = phi(f);
      for (std::size_t i = 0; i < f.factors.size(); ++i) {
        if (f.factors[i]) continue;
        for (const Reflection& r : tiers.tiers[i]) {
          Factorization bumped = f;
          bumped.factors[i] = r;
          Element y = phi(bumped);
          CHECK(absolute_length(y) == absolute_length(x) + 1);
          CHECK(absolute_length(compose(inverse(x), y)) == 1);
        }
      }
    }
  }
}
