#include "absorder/flag_factorization.hpp"

#include <cstdlib>

#include "absorder/absolute_order.hpp"

namespace absorder {

ReflectionTiers reflection_tiers(const GroupId& g) {
  ReflectionTiers out;
  out.group = g;
  switch (g.family) {
    case Family::A:
      // Standard flag {1} c {1,2} c ...: tier i moves the point i+1.
      for (int i = 1; i <= g.parameter; ++i) {
        std::vector<Reflection> tier;
        for (int j = 1; j <= i; ++j) tier.push_back(Reflection::transposition(j, i + 1));
        out.tiers.push_back(std::move(tier));
      }
      break;
    case Family::B:
      // Tier i acts on {+-1..+-i} but not {+-1..+-(i-1)}: [i], ((j,i)), ((j,-i)).
      for (int i = 1; i <= g.parameter; ++i) {
        std::vector<Reflection> tier;
        tier.push_back(Reflection::sign_flip(i));
        for (int j = 1; j < i; ++j) {
          tier.push_back(Reflection::signed_swap(j, i, false));
          tier.push_back(Reflection::signed_swap(j, i, true));
        }
        out.tiers.push_back(std::move(tier));
      }
      break;
    case Family::I2: {
      // One fixed mirror stabilizes the standard edge flag; the rest form tier 2.
      out.tiers.push_back({Reflection::dihedral_mirror(0)});
      std::vector<Reflection> tier;
      for (int k = 1; k < g.parameter; ++k) tier.push_back(Reflection::dihedral_mirror(k));
      out.tiers.push_back(std::move(tier));
      break;
    }
  }
  return out;
}

int Factorization::support() const {
  int count = 0;
  for (const auto& f : factors)
    if (f) ++count;
  return count;
}

std::string Factorization::text() const {
  std::string out;
  for (int i = (int)factors.size() - 1; i >= 0; --i)
    out += factors[i] ? factors[i]->text() : "e";
  return out;
}

Factorization factorize(const Element& w) {
  const GroupId& g = w.group();
  Factorization out;
  out.group = g;
  out.factors.assign(g.rank(), std::nullopt);

  Element cur = w;
  switch (g.family) {
    case Family::A:
      // Peel the unique tier-i transposition returning the point i+1 home.
      for (int i = g.parameter; i >= 1; --i) {
        int image = cur.apply(i + 1);
        if (image == i + 1) continue;
        Reflection r = Reflection::transposition(image, i + 1);
        out.factors[i - 1] = r;
        cur = compose(r.to_element(g), cur);
      }
      break;
    case Family::B:
      for (int i = g.parameter; i >= 1; --i) {
        int image = cur.apply(i);
        if (image == i) continue;
        Reflection r = image == -i  ? Reflection::sign_flip(i)
                       : image > 0 ? Reflection::signed_swap(image, i, false)
                                   : Reflection::signed_swap(-image, i, true);
        out.factors[i - 1] = r;
        cur = compose(r.to_element(g), cur);
      }
      break;
    case Family::I2: {
      const int m = g.parameter;
      if (cur.data()[0] == 1) {
        if (cur.data()[1] != 0) {
          Reflection r = Reflection::dihedral_mirror(cur.data()[1]);
          out.factors[1] = r;
          cur = compose(r.to_element(g), cur);
        }
      } else if (cur.data()[1] != 0) {
        // A rotation r^k is s_{m-k} * s_0.
        Reflection r = Reflection::dihedral_mirror(m - cur.data()[1]);
        out.factors[1] = r;
        cur = compose(r.to_element(g), cur);
      }
      if (cur.data()[0] == 1) {
        Reflection r = Reflection::dihedral_mirror(0);
        out.factors[0] = r;
        cur = compose(r.to_element(g), cur);
      }
      break;
    }
  }
  if (!cur.is_identity()) throw internal_check_error("factorization peel did not reach the identity");
  return out;
}

namespace {

void check_factor_in_tier(const GroupId& g, const Reflection& r, int tier) {
  bool ok = false;
  switch (g.family) {
    case Family::A:
      ok = r.kind == Reflection::Kind::transposition && r.hi == tier + 1 && r.lo >= 1 && r.lo <= tier;
      break;
    case Family::B:
      ok = (r.kind == Reflection::Kind::sign_flip && r.lo == tier) ||
           (r.kind == Reflection::Kind::signed_swap && r.hi == tier && r.lo >= 1 && r.lo < tier);
      break;
    case Family::I2:
      ok = r.kind == Reflection::Kind::dihedral_mirror && r.lo < g.parameter &&
           (tier == 1 ? r.lo == 0 : r.lo != 0);
      break;
  }
  if (!ok)
    throw validation_error("factor " + r.text() + " does not belong to tier " + std::to_string(tier));
}

}  // namespace

Element phi(const Factorization& f) {
  const GroupId& g = f.group;
  if ((int)f.factors.size() != g.rank())
    throw validation_error("factor tuple length does not match the group rank");
  Element acc = Element::identity(g);
  for (int i = (int)f.factors.size() - 1; i >= 0; --i) {
    if (!f.factors[i]) continue;
    check_factor_in_tier(g, *f.factors[i], i + 1);
    acc = compose(acc, f.factors[i]->to_element(g));
  }
  return acc;
}

bool verify_length_formula(const GroupId& g, long long max_group) {
  for (const Element& w : enumerate_group(g, max_group))
    if (factorize(w).support() != absolute_length(w)) return false;
  return true;
}

ClawEmbedding embed_claw_product(const GroupId& g, long long max_group) {
  GradedPoset cp = claw_product(g, max_group);
  ReflectionTiers tiers = reflection_tiers(g);
  const int n = (int)tiers.tiers.size();

  // Tuples in odometer order, top tier as the most significant digit; this is
  // exactly the vertex order claw_product produces, asserted below per vertex.
  ClawEmbedding out;
  out.tuples.reserve(cp.size());
  out.elements.reserve(cp.size());
  std::vector<int> digits(n, 0);  // digits[0] drives tier n
  for (int v = 0; v < cp.size(); ++v) {
    Factorization f;
    f.group = g;
    f.factors.assign(n, std::nullopt);
    for (int d = 0; d < n; ++d) {
      int tier = n - d;
      if (digits[d] > 0) f.factors[tier - 1] = tiers.tiers[tier - 1][digits[d] - 1];
    }
    if (cp.label(v) != f.text())
      throw internal_check_error("claw product vertex order diverged from tuple order");
    out.elements.push_back(phi(f));
    out.tuples.push_back(std::move(f));
    for (int d = n - 1; d >= 0; --d) {
      int radix = (int)tiers.tiers[n - 1 - d].size() + 1;
      if (++digits[d] < radix) break;
      digits[d] = 0;
    }
  }

  out.image = relabel(cp, [&out](int v) { return format_element(out.elements[v]); });
  return out;
}

}  // namespace absorder
