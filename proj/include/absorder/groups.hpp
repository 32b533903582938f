#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "absorder/errors.hpp"

// Exact arithmetic for three families of finite reflection groups:
//   A_n  -- realized as the symmetric group on [n+1],
//   B_n  -- signed permutations of {+-1, ..., +-n},
//   I2(m) -- the dihedral group of the m-gon, realized abstractly.
//
// Composition convention, used everywhere in this library: LEFT action.
// compose(u, v) is u*v with (u*v)(x) = u(v(x)); the right factor acts first.

namespace absorder {

inline constexpr long long kDefaultMaxGroup = 50000;

enum class Family { A, B, I2 };

struct GroupId {
  Family family = Family::A;
  int parameter = 1;  // n for A/B (n >= 1), m for I2 (m >= 3)

  int rank() const;                  // n for A/B, 2 for I2
  std::vector<int> degrees() const;  // (d_1..d_rank): i+1 for A, 2i for B, (2, m) for I2
  long long order() const;           // saturates instead of overflowing
  std::string text() const;          // "a3", "b2", "i2:7"

  // Parses "a<n>", "b<n>", "i2:<m>"; throws parse_error otherwise.
  static GroupId parse(std::string_view s);

  bool operator==(const GroupId&) const = default;
};

// One group element. Storage depends on the family:
//   A:  data[i] = w(i+1), a permutation of 1..n+1;
//   B:  data[i] = w(i+1) in {+-1..+-n}; w(-i) = -w(i) is implied, never stored;
//   I2: data = {kind, index} with kind 0 = rotation r^index, 1 = mirror s*r^index.
class Element {
 public:
  Element(GroupId group, std::vector<int> data);
  static Element identity(GroupId group);

  const GroupId& group() const { return group_; }
  const std::vector<int>& data() const { return data_; }
  bool is_identity() const;

  // Image of a point: x in [1, n+1] for A, x in {+-1..+-n} for B. Not defined for I2.
  int apply(int x) const;

  bool operator==(const Element&) const = default;

 private:
  GroupId group_;
  std::vector<int> data_;
};

struct ElementHash {
  std::size_t operator()(const Element& w) const;
};

// A reflection, i.e. a rank-one element of the absolute order.
struct Reflection {
  enum class Kind { transposition, sign_flip, signed_swap, dihedral_mirror };

  Kind kind = Kind::transposition;
  int lo = 0;           // transposition/signed_swap: smaller index; sign_flip/mirror: the index
  int hi = 0;           // transposition/signed_swap: larger index
  bool negate = false;  // signed_swap only: ((lo,-hi)) instead of ((lo,hi))

  static Reflection transposition(int i, int j);
  static Reflection sign_flip(int i);
  static Reflection signed_swap(int i, int j, bool negate);
  static Reflection dihedral_mirror(int index);

  std::string text() const;  // "(1 3)", "[2]", "((1,-2))", "s4"
  Element to_element(const GroupId& g) const;

  bool operator==(const Reflection&) const = default;
};

Element compose(const Element& u, const Element& v);
Element inverse(const Element& u);

// All reflections of the group, duplicate-free, in a fixed canonical order.
// Sizes: n(n+1)/2 for A_n, n^2 for B_n, m for I2(m).
std::vector<Reflection> reflections(const GroupId& g);

// Minimal number of reflections whose product is w (closed forms; the BFS
// oracle below is the reference these are tested against).
int absolute_length(const Element& w);

// Breadth-first distance from the identity in the Cayley graph generated by
// reflections(g). Refuses groups with more than max_group elements.
int absolute_length_bfs(const Element& w, long long max_group = kDefaultMaxGroup);

// Cycle-notation text I/O. Type A: "e", "(1 3 2)", products like "(1 2)(2 3)"
// composed right factor first. Type B: sign flips "[1]", balanced cycles
// "[1,2]", paired cycles "((1,2))", "((1,-2))", and products thereof.
// I2: "e", rotations "r<k>", mirrors "s<k>". parse(format(w)) == w always.
Element parse_element(std::string_view text, const GroupId& g);
std::string format_element(const Element& w);

// Every group element, in a deterministic order. Guarded like the BFS oracle.
std::vector<Element> enumerate_group(const GroupId& g, long long max_group = kDefaultMaxGroup);

}  // namespace absorder
