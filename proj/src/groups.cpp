#include "absorder/groups.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <limits>
#include <numeric>
#include <unordered_map>

namespace absorder {

namespace {

constexpr long long kOrderCap = std::numeric_limits<long long>::max();

long long saturating_mul(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  if (a > kOrderCap / b) return kOrderCap;
  return a * b;
}

void check_group(const GroupId& g) {
  if (g.family == Family::I2) {
    if (g.parameter < 3) throw validation_error("I2(m) requires m >= 3");
  } else if (g.parameter < 1) {
    throw validation_error("A_n and B_n require n >= 1");
  }
}

}  // namespace

int GroupId::rank() const { return family == Family::I2 ? 2 : parameter; }

std::vector<int> GroupId::degrees() const {
  check_group(*this);
  switch (family) {
    case Family::A: {
      std::vector<int> d(parameter);
      for (int i = 0; i < parameter; ++i) d[i] = i + 2;
      return d;
    }
    case Family::B: {
      std::vector<int> d(parameter);
      for (int i = 0; i < parameter; ++i) d[i] = 2 * (i + 1);
      return d;
    }
    case Family::I2:
      return {2, parameter};
  }
  throw internal_check_error("unreachable family");
}

long long GroupId::order() const {
  check_group(*this);
  switch (family) {
    case Family::A: {
      long long r = 1;
      for (int i = 2; i <= parameter + 1; ++i) r = saturating_mul(r, i);
      return r;
    }
    case Family::B: {
      long long r = 1;
      for (int i = 1; i <= parameter; ++i) r = saturating_mul(r, 2LL * i);
      return r;
    }
    case Family::I2:
      return 2LL * parameter;
  }
  throw internal_check_error("unreachable family");
}

std::string GroupId::text() const {
  switch (family) {
    case Family::A:
      return "a" + std::to_string(parameter);
    case Family::B:
      return "b" + std::to_string(parameter);
    case Family::I2:
      return "i2:" + std::to_string(parameter);
  }
  throw internal_check_error("unreachable family");
}

GroupId GroupId::parse(std::string_view s) {
  auto parse_int = [&](std::string_view digits, std::size_t at) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
      throw parse_error("expected an integer group parameter", at);
    return value;
  };
  GroupId g;
  if (s.size() >= 2 && (s[0] == 'a' || s[0] == 'b')) {
    g.family = s[0] == 'a' ? Family::A : Family::B;
    g.parameter = parse_int(s.substr(1), 1);
    if (g.parameter < 1) throw parse_error("group rank must be at least 1", 1);
    return g;
  }
  if (s.size() > 3 && s.substr(0, 3) == "i2:") {
    g.family = Family::I2;
    g.parameter = parse_int(s.substr(3), 3);
    if (g.parameter < 3) throw parse_error("i2:<m> requires m >= 3", 3);
    return g;
  }
  throw parse_error("expected a group id of the form a<n>, b<n>, or i2:<m>", 0);
}

Element::Element(GroupId group, std::vector<int> data)
    : group_(group), data_(std::move(data)) {
  check_group(group_);
  const int n = group_.parameter;
  switch (group_.family) {
    case Family::A: {
      if ((int)data_.size() != n + 1) throw validation_error("type A element needs n+1 images");
      std::vector<bool> seen(n + 2, false);
      for (int v : data_) {
        if (v < 1 || v > n + 1 || seen[v]) throw validation_error("type A images must be a bijection of [n+1]");
        seen[v] = true;
      }
      break;
    }
    case Family::B: {
      if ((int)data_.size() != n) throw validation_error("type B element needs n images");
      std::vector<bool> seen(n + 1, false);
      for (int v : data_) {
        int a = std::abs(v);
        if (a < 1 || a > n || seen[a]) throw validation_error("type B images must be a signed bijection");
        seen[a] = true;
      }
      break;
    }
    case Family::I2: {
      if (data_.size() != 2 || (data_[0] != 0 && data_[0] != 1) || data_[1] < 0 || data_[1] >= n)
        throw validation_error("dihedral element needs kind in {0,1} and index mod m");
      break;
    }
  }
}

Element Element::identity(GroupId group) {
  check_group(group);
  switch (group.family) {
    case Family::A: {
      std::vector<int> d(group.parameter + 1);
      std::iota(d.begin(), d.end(), 1);
      return Element(group, std::move(d));
    }
    case Family::B: {
      std::vector<int> d(group.parameter);
      std::iota(d.begin(), d.end(), 1);
      return Element(group, std::move(d));
    }
    case Family::I2:
      return Element(group, {0, 0});
  }
  throw internal_check_error("unreachable family");
}

bool Element::is_identity() const {
  if (group_.family == Family::I2) return data_[0] == 0 && data_[1] == 0;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != (int)i + 1) return false;
  return true;
}

int Element::apply(int x) const {
  switch (group_.family) {
    case Family::A:
      if (x < 1 || x > (int)data_.size()) throw validation_error("point out of range");
      return data_[x - 1];
    case Family::B: {
      int a = std::abs(x);
      if (a < 1 || a > (int)data_.size()) throw validation_error("point out of range");
      return x > 0 ? data_[a - 1] : -data_[a - 1];
    }
    case Family::I2:
      throw validation_error("dihedral elements act abstractly; apply() is not defined");
  }
  throw internal_check_error("unreachable family");
}

std::size_t ElementHash::operator()(const Element& w) const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix((std::uint64_t)w.group().family);
  mix((std::uint64_t)w.group().parameter);
  for (int v : w.data()) mix((std::uint64_t)(std::int64_t)v);
  return (std::size_t)h;
}

Reflection Reflection::transposition(int i, int j) {
  if (!(0 < i && i < j)) throw validation_error("transposition needs 0 < i < j");
  return Reflection{Kind::transposition, i, j, false};
}

Reflection Reflection::sign_flip(int i) {
  if (i < 1) throw validation_error("sign flip index must be positive");
  return Reflection{Kind::sign_flip, i, 0, false};
}

Reflection Reflection::signed_swap(int i, int j, bool negate) {
  if (!(0 < i && i < j)) throw validation_error("signed swap needs 0 < i < j");
  return Reflection{Kind::signed_swap, i, j, negate};
}

Reflection Reflection::dihedral_mirror(int index) {
  if (index < 0) throw validation_error("mirror index must be nonnegative");
  return Reflection{Kind::dihedral_mirror, index, 0, false};
}

std::string Reflection::text() const {
  switch (kind) {
    case Kind::transposition:
      return "(" + std::to_string(lo) + " " + std::to_string(hi) + ")";
    case Kind::sign_flip:
      return "[" + std::to_string(lo) + "]";
    case Kind::signed_swap:
      return "((" + std::to_string(lo) + "," + (negate ? "-" : "") + std::to_string(hi) + "))";
    case Kind::dihedral_mirror:
      return "s" + std::to_string(lo);
  }
  throw internal_check_error("unreachable reflection kind");
}

Element Reflection::to_element(const GroupId& g) const {
  Element e = Element::identity(g);
  std::vector<int> d = e.data();
  switch (kind) {
    case Kind::transposition:
      if (g.family != Family::A || hi > g.parameter + 1) throw validation_error("transposition outside group");
      std::swap(d[lo - 1], d[hi - 1]);
      return Element(g, std::move(d));
    case Kind::sign_flip:
      if (g.family != Family::B || lo > g.parameter) throw validation_error("sign flip outside group");
      d[lo - 1] = -lo;
      return Element(g, std::move(d));
    case Kind::signed_swap:
      if (g.family != Family::B || hi > g.parameter) throw validation_error("signed swap outside group");
      d[lo - 1] = negate ? -hi : hi;
      d[hi - 1] = negate ? -lo : lo;
      return Element(g, std::move(d));
    case Kind::dihedral_mirror:
      if (g.family != Family::I2 || lo >= g.parameter) throw validation_error("mirror outside group");
      return Element(g, {1, lo});
  }
  throw internal_check_error("unreachable reflection kind");
}

Element compose(const Element& u, const Element& v) {
  if (u.group() != v.group()) throw validation_error("cannot compose elements of different groups");
  const GroupId& g = u.group();
  switch (g.family) {
    case Family::A: {
      std::vector<int> d(v.data().size());
      for (std::size_t i = 0; i < d.size(); ++i) d[i] = u.data()[v.data()[i] - 1];
      return Element(g, std::move(d));
    }
    case Family::B: {
      std::vector<int> d(v.data().size());
      for (std::size_t i = 0; i < d.size(); ++i) d[i] = u.apply(v.data()[i]);
      return Element(g, std::move(d));
    }
    case Family::I2: {
      // u = s^a r^k, v = s^b r^l; r^k s = s r^{-k}.
      const int m = g.parameter;
      int a = u.data()[0], k = u.data()[1], b = v.data()[0], l = v.data()[1];
      if (b == 0) return Element(g, {a, (k + l) % m});
      return Element(g, {1 - a, ((l - k) % m + m) % m});
    }
  }
  throw internal_check_error("unreachable family");
}

Element inverse(const Element& u) {
  const GroupId& g = u.group();
  switch (g.family) {
    case Family::A: {
      std::vector<int> d(u.data().size());
      for (std::size_t i = 0; i < d.size(); ++i) d[u.data()[i] - 1] = (int)i + 1;
      return Element(g, std::move(d));
    }
    case Family::B: {
      std::vector<int> d(u.data().size());
      for (std::size_t i = 0; i < d.size(); ++i) {
        int v = u.data()[i];
        if (v > 0)
          d[v - 1] = (int)i + 1;
        else
          d[-v - 1] = -((int)i + 1);
      }
      return Element(g, std::move(d));
    }
    case Family::I2: {
      const int m = g.parameter;
      if (u.data()[0] == 1) return u;  // mirrors are involutions
      return Element(g, {0, (m - u.data()[1]) % m});
    }
  }
  throw internal_check_error("unreachable family");
}

std::vector<Reflection> reflections(const GroupId& g) {
  check_group(g);
  std::vector<Reflection> out;
  switch (g.family) {
    case Family::A:
      for (int j = 2; j <= g.parameter + 1; ++j)
        for (int i = 1; i < j; ++i) out.push_back(Reflection::transposition(i, j));
      break;
    case Family::B:
      for (int i = 1; i <= g.parameter; ++i) {
        out.push_back(Reflection::sign_flip(i));
        for (int j = 1; j < i; ++j) {
          out.push_back(Reflection::signed_swap(j, i, false));
          out.push_back(Reflection::signed_swap(j, i, true));
        }
      }
      break;
    case Family::I2:
      for (int k = 0; k < g.parameter; ++k) out.push_back(Reflection::dihedral_mirror(k));
      break;
  }
  return out;
}

int absolute_length(const Element& w) {
  const GroupId& g = w.group();
  switch (g.family) {
    case Family::A: {
      // (n+1) minus the number of cycles, fixed points included.
      const int n1 = (int)w.data().size();
      std::vector<bool> seen(n1 + 1, false);
      int cycles = 0;
      for (int i = 1; i <= n1; ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (int x = i; !seen[x]; x = w.data()[x - 1]) seen[x] = true;
      }
      return n1 - cycles;
    }
    case Family::B: {
      // n minus the number of paired cycle pairs (orbits not closed under negation).
      const int n = (int)w.data().size();
      std::vector<bool> seen(n + 1, false);
      int paired = 0;
      for (int i = 1; i <= n; ++i) {
        if (seen[i]) continue;
        bool balanced = false;
        int x = i;
        do {
          seen[std::abs(x)] = true;
          x = w.apply(x);
          if (x == -i) balanced = true;
        } while (x != i && x != -i);
        if (!balanced) ++paired;
      }
      return n - paired;
    }
    case Family::I2: {
      if (w.data()[0] == 1) return 1;
      return w.data()[1] == 0 ? 0 : 2;
    }
  }
  throw internal_check_error("unreachable family");
}

int absolute_length_bfs(const Element& w, long long max_group) {
  const GroupId& g = w.group();
  if (g.order() > max_group)
    throw size_guard_error("group " + g.text() + " exceeds the enumeration guard of " +
                           std::to_string(max_group) + " elements");
  std::vector<Element> gens;
  for (const Reflection& t : reflections(g)) gens.push_back(t.to_element(g));

  std::unordered_map<Element, int, ElementHash> dist;
  std::deque<Element> queue;
  Element e = Element::identity(g);
  dist.emplace(e, 0);
  if (w == e) return 0;
  queue.push_back(e);
  while (!queue.empty()) {
    Element cur = std::move(queue.front());
    queue.pop_front();
    int d = dist.at(cur);
    for (const Element& t : gens) {
      Element next = compose(t, cur);
      auto [it, inserted] = dist.emplace(next, d + 1);
      if (inserted) {
        if (next == w) return d + 1;
        queue.push_back(std::move(next));
      }
    }
  }
  throw internal_check_error("BFS exhausted the group without reaching the element");
}

std::vector<Element> enumerate_group(const GroupId& g, long long max_group) {
  if (g.order() > max_group)
    throw size_guard_error("group " + g.text() + " exceeds the enumeration guard of " +
                           std::to_string(max_group) + " elements");
  std::vector<Element> out;
  out.reserve((std::size_t)g.order());
  switch (g.family) {
    case Family::A: {
      std::vector<int> p(g.parameter + 1);
      std::iota(p.begin(), p.end(), 1);
      do {
        out.emplace_back(g, p);
      } while (std::next_permutation(p.begin(), p.end()));
      break;
    }
    case Family::B: {
      const int n = g.parameter;
      std::vector<int> p(n);
      std::iota(p.begin(), p.end(), 1);
      do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
          std::vector<int> d(n);
          for (int i = 0; i < n; ++i) d[i] = (mask >> i) & 1u ? -p[i] : p[i];
          out.emplace_back(g, std::move(d));
        }
      } while (std::next_permutation(p.begin(), p.end()));
      break;
    }
    case Family::I2: {
      for (int k = 0; k < g.parameter; ++k) out.emplace_back(g, std::vector<int>{0, k});
      for (int k = 0; k < g.parameter; ++k) out.emplace_back(g, std::vector<int>{1, k});
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cycle-notation text I/O.

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void skip_space() {
    while (!done() && std::isspace((unsigned char)peek())) ++pos;
  }
  [[noreturn]] void fail(const std::string& what) const { throw parse_error(what, pos); }

  int read_int() {
    std::size_t at = pos;
    int value = 0;
    auto* begin = text.data() + pos;
    auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) throw parse_error("expected an integer", at);
    pos += (std::size_t)(ptr - begin);
    return value;
  }
};

Element cycle_to_element_a(const GroupId& g, const std::vector<int>& entries) {
  std::vector<int> d(g.parameter + 1);
  std::iota(d.begin(), d.end(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i)
    d[entries[i] - 1] = entries[(i + 1) % entries.size()];
  return Element(g, std::move(d));
}

// ((a_1,...,a_k)) is the pair of cycles (a_1 ... a_k)(-a_1 ... -a_k).
Element paired_cycle_to_element(const GroupId& g, const std::vector<int>& entries) {
  std::vector<int> d(g.parameter);
  std::iota(d.begin(), d.end(), 1);
  auto set_image = [&d](int x, int y) {
    if (x > 0)
      d[x - 1] = y;
    else
      d[-x - 1] = -y;
  };
  for (std::size_t i = 0; i < entries.size(); ++i)
    set_image(entries[i], entries[(i + 1) % entries.size()]);
  return Element(g, std::move(d));
}

// [a_1,...,a_k] is the single cycle (a_1 ... a_k -a_1 ... -a_k).
Element balanced_cycle_to_element(const GroupId& g, const std::vector<int>& entries) {
  std::vector<int> d(g.parameter);
  std::iota(d.begin(), d.end(), 1);
  auto set_image = [&d](int x, int y) {
    if (x > 0)
      d[x - 1] = y;
    else
      d[-x - 1] = -y;
  };
  for (std::size_t i = 0; i + 1 < entries.size(); ++i) set_image(entries[i], entries[i + 1]);
  set_image(entries.back(), -entries.front());
  return Element(g, std::move(d));
}

std::vector<int> read_signed_entries(Cursor& c, const GroupId& g, char terminator,
                                     std::size_t min_count) {
  std::vector<int> entries;
  std::vector<bool> seen(g.parameter + 1, false);
  while (true) {
    c.skip_space();
    if (c.done()) c.fail("unterminated cycle");
    if (c.peek() == terminator) break;
    if (!entries.empty()) {
      if (c.peek() != ',') c.fail("expected ',' between cycle entries");
      ++c.pos;
      c.skip_space();
    }
    std::size_t at = c.pos;
    int v = c.read_int();
    int a = std::abs(v);
    if (a < 1 || a > g.parameter) throw parse_error("index out of range for the group", at);
    if (seen[a]) throw parse_error("repeated symbol within a cycle", at);
    seen[a] = true;
    entries.push_back(v);
  }
  ++c.pos;  // consume terminator
  if (entries.size() < min_count) c.fail("cycle has too few entries");
  return entries;
}

Element parse_factor(Cursor& c, const GroupId& g) {
  c.skip_space();
  std::size_t at = c.pos;
  char first = c.peek();
  if (first == 'e') {
    ++c.pos;
    return Element::identity(g);
  }
  switch (g.family) {
    case Family::A: {
      if (first != '(') c.fail("expected 'e' or '(' in type A cycle notation");
      ++c.pos;
      std::vector<int> entries;
      std::vector<bool> seen(g.parameter + 2, false);
      while (true) {
        c.skip_space();
        if (c.done()) c.fail("unterminated cycle");
        if (c.peek() == ')') break;
        std::size_t ent_at = c.pos;
        int v = c.read_int();
        if (v < 1 || v > g.parameter + 1) throw parse_error("index out of range for the group", ent_at);
        if (seen[v]) throw parse_error("repeated symbol within a cycle", ent_at);
        seen[v] = true;
        entries.push_back(v);
      }
      ++c.pos;
      if (entries.size() < 2) throw parse_error("cycle has too few entries", at);
      return cycle_to_element_a(g, entries);
    }
    case Family::B: {
      if (first == '(') {
        if (c.pos + 1 >= c.text.size() || c.text[c.pos + 1] != '(')
          c.fail("type B swaps use double parentheses: ((i,j))");
        c.pos += 2;
        std::vector<int> entries = read_signed_entries(c, g, ')', 2);
        c.skip_space();
        if (c.done() || c.peek() != ')') c.fail("expected '))' to close the cycle");
        ++c.pos;
        return paired_cycle_to_element(g, entries);
      }
      if (first == '[') {
        ++c.pos;
        std::vector<int> entries = read_signed_entries(c, g, ']', 1);
        return balanced_cycle_to_element(g, entries);
      }
      c.fail("expected 'e', '[', or '((' in type B cycle notation");
    }
    case Family::I2: {
      if (first != 'r' && first != 's') c.fail("expected 'e', 'r<k>', or 's<k>'");
      ++c.pos;
      std::size_t idx_at = c.pos;
      int k = c.read_int();
      if (k < 0 || k >= g.parameter) throw parse_error("index out of range for the group", idx_at);
      return Element(g, {first == 's' ? 1 : 0, k});
    }
  }
  throw internal_check_error("unreachable family");
}

}  // namespace

Element parse_element(std::string_view text, const GroupId& g) {
  check_group(g);
  Cursor c{text};
  c.skip_space();
  if (c.done()) c.fail("empty element text");
  Element acc = parse_factor(c, g);
  while (true) {
    c.skip_space();
    if (c.done()) break;
    // Products compose under the left action: the rightmost factor acts first.
    acc = compose(acc, parse_factor(c, g));
  }
  return acc;
}

std::string format_element(const Element& w) {
  const GroupId& g = w.group();
  switch (g.family) {
    case Family::A: {
      const int n1 = (int)w.data().size();
      std::vector<bool> seen(n1 + 1, false);
      std::string out;
      for (int i = 1; i <= n1; ++i) {
        if (seen[i] || w.data()[i - 1] == i) {
          seen[i] = true;
          continue;
        }
        out += '(';
        bool first = true;
        for (int x = i; !seen[x]; x = w.data()[x - 1]) {
          seen[x] = true;
          if (!first) out += ' ';
          out += std::to_string(x);
          first = false;
        }
        out += ')';
      }
      return out.empty() ? "e" : out;
    }
    case Family::B: {
      const int n = (int)w.data().size();
      std::vector<bool> seen(n + 1, false);
      std::string out;
      for (int i = 1; i <= n; ++i) {
        if (seen[i]) continue;
        std::vector<int> orbit;
        bool balanced = false;
        int x = i;
        while (true) {
          orbit.push_back(x);
          seen[std::abs(x)] = true;
          x = w.apply(x);
          if (x == i) break;
          if (x == -i) {
            balanced = true;
            break;
          }
        }
        if (!balanced && orbit.size() == 1) continue;  // fixed point
        out += balanced ? "[" : "((";
        for (std::size_t j = 0; j < orbit.size(); ++j) {
          if (j) out += ',';
          out += std::to_string(orbit[j]);
        }
        out += balanced ? "]" : "))";
      }
      return out.empty() ? "e" : out;
    }
    case Family::I2: {
      if (w.is_identity()) return "e";
      return (w.data()[0] == 1 ? "s" : "r") + std::to_string(w.data()[1]);
    }
  }
  throw internal_check_error("unreachable family");
}

}  // namespace absorder
