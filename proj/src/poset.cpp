#include "absorder/poset.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace absorder {

namespace {

constexpr std::uint64_t kOne = 1;

bool test_bit(const std::vector<std::uint64_t>& bits, int i) {
  return (bits[(std::size_t)i >> 6] >> (i & 63)) & kOne;
}

void set_bit(std::vector<std::uint64_t>& bits, int i) {
  bits[(std::size_t)i >> 6] |= kOne << (i & 63);
}

}  // namespace

int GradedPoset::vertex(std::string_view label) const {
  if (!label_index_) return -1;
  auto it = std::lower_bound(label_index_->begin(), label_index_->end(), label,
                             [](const auto& entry, std::string_view key) { return entry.first < key; });
  if (it == label_index_->end() || it->first != label) return -1;
  return it->second;
}

const std::vector<GradedPoset::Bits>& GradedPoset::closure() const {
  std::lock_guard<std::mutex> lock(*closure_mutex_);
  if (!closure_) {
    const int n = size();
    const std::size_t words = ((std::size_t)n + 63) / 64;
    auto up = std::make_shared<std::vector<Bits>>(n, Bits(words, 0));
    // Descending rank order: every up-neighbor is finished before its source.
    for (int v : by_rank_order_) {
      Bits& row = (*up)[v];
      for (int u : up_[v]) {
        set_bit(row, u);
        const Bits& above = (*up)[u];
        for (std::size_t w = 0; w < words; ++w) row[w] |= above[w];
      }
    }
    closure_ = std::move(up);
  }
  return *closure_;
}

bool GradedPoset::less(int x, int y) const { return test_bit(closure()[x], y); }

long long GradedPoset::strict_pair_count() const {
  long long total = 0;
  for (const Bits& row : closure())
    for (std::uint64_t w : row) total += std::popcount(w);
  return total;
}

std::vector<std::pair<int, int>> GradedPoset::strict_order_pairs() const {
  std::vector<std::pair<int, int>> out;
  const auto& cl = closure();
  for (int v = 0; v < size(); ++v)
    for (int u = 0; u < size(); ++u)
      if (test_bit(cl[v], u)) out.emplace_back(v, u);
  return out;
}

std::vector<int> GradedPoset::greater_vertices(int x) const {
  std::vector<int> out;
  const Bits& row = closure()[x];
  for (int u = 0; u < size(); ++u)
    if (test_bit(row, u)) out.push_back(u);
  return out;
}

GradedPoset build_poset(std::vector<std::string> labels, std::vector<int> ranks,
                        std::vector<std::pair<int, int>> covers) {
  const int n = (int)labels.size();
  if (n == 0) throw validation_error("poset needs at least one vertex");
  if ((int)ranks.size() != n) throw validation_error("labels and ranks differ in length");

  int top = 0;
  for (int r : ranks) {
    if (r < 0) throw validation_error("ranks must be nonnegative");
    top = std::max(top, r);
  }
  std::vector<int> counts(top + 1, 0);
  for (int r : ranks) ++counts[r];
  for (int r = 0; r <= top; ++r)
    if (counts[r] == 0)
      throw validation_error("rank level " + std::to_string(r) + " is empty");

  auto index = std::make_shared<std::vector<std::pair<std::string, int>>>();
  index->reserve(n);
  for (int v = 0; v < n; ++v) index->emplace_back(labels[v], v);
  std::sort(index->begin(), index->end());
  for (std::size_t i = 1; i < index->size(); ++i)
    if ((*index)[i].first == (*index)[i - 1].first)
      throw validation_error("duplicate vertex label: " + (*index)[i].first);

  std::sort(covers.begin(), covers.end());
  for (std::size_t i = 0; i < covers.size(); ++i) {
    auto [x, y] = covers[i];
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw validation_error("cover references a vertex outside the poset");
    if (ranks[y] != ranks[x] + 1)
      throw validation_error("cover from " + labels[x] + " to " + labels[y] +
                             " does not raise rank by exactly 1");
    if (i > 0 && covers[i] == covers[i - 1])
      throw validation_error("duplicate cover from " + labels[x] + " to " + labels[y]);
  }

  GradedPoset p;
  p.labels_ = std::move(labels);
  p.ranks_ = std::move(ranks);
  p.covers_ = std::move(covers);
  p.top_rank_ = top;
  p.label_index_ = std::move(index);
  p.up_.assign(n, {});
  for (auto [x, y] : p.covers_) p.up_[x].push_back(y);
  p.by_rank_order_.resize(n);
  std::iota(p.by_rank_order_.begin(), p.by_rank_order_.end(), 0);
  std::stable_sort(p.by_rank_order_.begin(), p.by_rank_order_.end(),
                   [&p](int a, int b) { return p.ranks_[a] > p.ranks_[b]; });
  return p;
}

bool validate_poset(const GradedPoset& P) {
  if (P.size() == 0) return false;
  std::vector<long long> counts(P.top_rank() + 1, 0);
  std::set<std::string> labels;
  for (int v = 0; v < P.size(); ++v) {
    if (P.rank(v) < 0 || P.rank(v) > P.top_rank()) return false;
    ++counts[P.rank(v)];
    if (!labels.insert(P.label(v)).second) return false;
  }
  for (long long c : counts)
    if (c == 0) return false;
  std::set<std::pair<int, int>> seen;
  for (auto [x, y] : P.covers()) {
    if (x < 0 || x >= P.size() || y < 0 || y >= P.size()) return false;
    if (P.rank(y) != P.rank(x) + 1) return false;
    if (!seen.insert({x, y}).second) return false;
  }
  return true;
}

GradedPoset product(const GradedPoset& P, const GradedPoset& Q,
                    const std::function<std::string(const std::string&, const std::string&)>& combine) {
  const int np = P.size(), nq = Q.size();
  std::vector<std::string> labels;
  std::vector<int> ranks;
  labels.reserve((std::size_t)np * nq);
  ranks.reserve((std::size_t)np * nq);
  for (int p = 0; p < np; ++p)
    for (int q = 0; q < nq; ++q) {
      labels.push_back(combine(P.label(p), Q.label(q)));
      ranks.push_back(P.rank(p) + Q.rank(q));
    }
  std::vector<std::pair<int, int>> covers;
  covers.reserve(P.covers().size() * nq + (std::size_t)np * Q.covers().size());
  for (auto [p, p2] : P.covers())
    for (int q = 0; q < nq; ++q) covers.emplace_back(p * nq + q, p2 * nq + q);
  for (int p = 0; p < np; ++p)
    for (auto [q, q2] : Q.covers()) covers.emplace_back(p * nq + q, p * nq + q2);
  return build_poset(std::move(labels), std::move(ranks), std::move(covers));
}

GradedPoset product(const GradedPoset& P, const GradedPoset& Q) {
  return product(P, Q, [](const std::string& a, const std::string& b) {
    return "(" + a + "," + b + ")";
  });
}

GradedPoset relabel(const GradedPoset& P, const std::function<std::string(int)>& new_label) {
  std::vector<std::string> labels(P.size());
  std::vector<int> ranks(P.size());
  for (int v = 0; v < P.size(); ++v) {
    labels[v] = new_label(v);
    ranks[v] = P.rank(v);
  }
  return build_poset(std::move(labels), std::move(ranks), P.covers());
}

RankSequence rank_sequence(const GradedPoset& P) {
  RankSequence counts(P.top_rank() + 1, 0);
  for (int v = 0; v < P.size(); ++v) ++counts[P.rank(v)];
  return counts;
}

bool is_unimodal(const RankSequence& s) {
  std::size_t i = 0;
  while (i + 1 < s.size() && s[i] <= s[i + 1]) ++i;
  while (i + 1 < s.size() && s[i] >= s[i + 1]) ++i;
  return i + 1 >= s.size();
}

bool is_strictly_log_concave(const RankSequence& s) {
  for (std::size_t i = 1; i + 1 < s.size(); ++i)
    if (s[i] * s[i] <= s[i - 1] * s[i + 1]) return false;
  return true;
}

bool is_spanning_subposet(const GradedPoset& P, const GradedPoset& Q) {
  if (P.size() != Q.size()) return false;
  std::vector<int> to_q(P.size());
  for (int v = 0; v < P.size(); ++v) {
    int u = Q.vertex(P.label(v));
    if (u < 0 || Q.rank(u) != P.rank(v)) return false;
    to_q[v] = u;
  }
  for (int v = 0; v < P.size(); ++v)
    for (int u : P.greater_vertices(v))
      if (!Q.less(to_q[v], to_q[u])) return false;
  return true;
}

bool is_k_family(const GradedPoset& P, const std::vector<int>& S, int k) {
  if (k < 1) throw validation_error("is_k_family requires k >= 1");
  std::vector<int> members = S;
  for (int v : members)
    if (v < 0 || v >= P.size()) throw validation_error("k-family member outside the poset");
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    throw validation_error("k-family members must be distinct");
  std::stable_sort(members.begin(), members.end(),
                   [&P](int a, int b) { return P.rank(a) < P.rank(b); });
  // Longest chain inside S; processing by ascending rank sees every predecessor first.
  std::vector<int> len(members.size(), 1);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (P.less(members[j], members[i])) len[i] = std::max(len[i], len[j] + 1);
    if (len[i] > k) return false;
  }
  return true;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string export_dot(const GradedPoset& P, const std::function<std::string(int)>& labeler) {
  std::vector<std::string> names(P.size());
  for (int v = 0; v < P.size(); ++v) names[v] = labeler(v);

  std::vector<int> order(P.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (P.rank(a) != P.rank(b)) return P.rank(a) < P.rank(b);
    return names[a] < names[b];
  });

  std::string out = "digraph poset {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  int at = 0;
  for (int r = 0; r <= P.top_rank(); ++r) {
    out += "  { rank=same;";
    for (; at < P.size() && P.rank(order[at]) == r; ++at)
      out += " \"" + dot_escape(names[order[at]]) + "\";";
    out += " }\n";
  }
  std::vector<std::pair<std::string, std::string>> edges;
  edges.reserve(P.covers().size());
  for (auto [x, y] : P.covers()) edges.emplace_back(names[x], names[y]);
  std::sort(edges.begin(), edges.end());
  for (const auto& [a, b] : edges)
    out += "  \"" + dot_escape(a) + "\" -> \"" + dot_escape(b) + "\";\n";
  out += "}\n";
  return out;
}

std::string export_dot(const GradedPoset& P) {
  return export_dot(P, [&P](int v) { return P.label(v); });
}

}  // namespace absorder
