#include "absorder/sperner.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <queue>

namespace absorder {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

struct FlowEdge {
  int to;
  long long cap;
  long long cost;
  long long flow = 0;
};

// Successive shortest paths with vertex potentials. The network is a DAG, so
// the first (negative-cost) round is a topological relaxation; later rounds
// run Dijkstra on nonnegative reduced costs. Augmentation stops as soon as the
// cheapest source-sink path has nonnegative true cost, which makes the result
// a minimum-cost flow over all flow values.
class MinCostFlow {
 public:
  explicit MinCostFlow(int node_count)
      : head_(node_count), dist_(node_count), pi_(node_count, 0), parent_(node_count) {}

  void add_edge(int from, int to, long long cap, long long cost) {
    head_[from].push_back((int)edges_.size());
    edges_.push_back({to, cap, cost});
    head_[to].push_back((int)edges_.size());
    edges_.push_back({from, 0, -cost});
  }

  const std::vector<FlowEdge>& edges() const { return edges_; }

  void solve(int s, int t, const std::vector<int>& topo_order) {
    relax_dag(s, topo_order);
    if (dist_[t] >= kInf || dist_[t] >= 0) return;
    // Zero flow leaves every node reachable, so the true distances are valid
    // potentials as they stand; capping is only sound on reduced costs.
    for (std::size_t v = 0; v < head_.size(); ++v) {
      if (dist_[v] >= kInf) throw internal_check_error("unreachable node in the zero-flow network");
      pi_[v] = dist_[v];
    }
    augment(s, t);
    while (true) {
      dijkstra(s);
      if (dist_[t] >= kInf) break;
      if (dist_[t] + pi_[t] - pi_[s] >= 0) break;  // true cost of the next path
      long long cap = dist_[t];
      for (std::size_t v = 0; v < head_.size(); ++v) pi_[v] += std::min(dist_[v], cap);
      augment(s, t);
    }
  }

  long long flow_cost() const {
    long long c = 0;
    for (std::size_t i = 0; i < edges_.size(); i += 2) c += edges_[i].flow * edges_[i].cost;
    return c;
  }

 private:
  void relax_dag(int s, const std::vector<int>& topo_order) {
    std::fill(dist_.begin(), dist_.end(), kInf);
    std::fill(parent_.begin(), parent_.end(), -1);
    dist_[s] = 0;
    for (int v : topo_order) {
      if (dist_[v] >= kInf) continue;
      for (int idx : head_[v]) {
        const FlowEdge& e = edges_[idx];
        if (e.flow >= e.cap) continue;
        if (dist_[v] + e.cost < dist_[e.to]) {
          dist_[e.to] = dist_[v] + e.cost;
          parent_[e.to] = idx;
        }
      }
    }
  }

  void dijkstra(int s) {
    std::fill(dist_.begin(), dist_.end(), kInf);
    std::fill(parent_.begin(), parent_.end(), -1);
    using Item = std::pair<long long, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist_[s] = 0;
    heap.emplace(0, s);
    while (!heap.empty()) {
      auto [d, v] = heap.top();
      heap.pop();
      if (d > dist_[v]) continue;
      for (int idx : head_[v]) {
        const FlowEdge& e = edges_[idx];
        if (e.flow >= e.cap) continue;
        long long reduced = e.cost + pi_[v] - pi_[e.to];
        if (reduced < 0) throw internal_check_error("negative reduced cost in the flow solver");
        if (d + reduced < dist_[e.to]) {
          dist_[e.to] = d + reduced;
          parent_[e.to] = idx;
          heap.emplace(dist_[e.to], e.to);
        }
      }
    }
  }

  void augment(int s, int t) {
    for (int v = t; v != s;) {
      int idx = parent_[v];
      if (idx < 0) throw internal_check_error("broken augmenting path");
      edges_[idx].flow += 1;
      edges_[idx ^ 1].flow -= 1;
      v = edges_[idx ^ 1].to;
    }
  }

  std::vector<std::vector<int>> head_;
  std::vector<FlowEdge> edges_;
  std::vector<long long> dist_;
  std::vector<long long> pi_;
  std::vector<int> parent_;
};

long long gcd_ll(long long a, long long b) { return b == 0 ? a : gcd_ll(b, a % b); }

}  // namespace

Rational Rational::of(long long num, long long den) {
  if (den == 0) throw validation_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = gcd_ll(std::abs(num), den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

Rational Rational::operator+(const Rational& o) const {
  return Rational::of(num * o.den + o.num * den, den * o.den);
}

KFamilyCertificate max_k_family(const GradedPoset& P, int k) {
  if (k < 1) throw validation_error("max_k_family requires k >= 1");
  const int n = P.size();
  const int s = 2 * n, t = 2 * n + 1;
  auto in_node = [](int v) { return 2 * v; };
  auto out_node = [](int v) { return 2 * v + 1; };

  MinCostFlow mcf(2 * n + 2);
  // Split edges carry capacity 1; every other edge gets slack capacity 2 so
  // its forward residual always exists, which the potential bounds below need.
  for (int v = 0; v < n; ++v) {
    mcf.add_edge(s, in_node(v), 2, k);
    mcf.add_edge(in_node(v), out_node(v), 1, -1);
    mcf.add_edge(out_node(v), t, 2, 0);
  }
  for (int v = 0; v < n; ++v)
    for (int u : P.greater_vertices(v)) mcf.add_edge(out_node(v), in_node(u), 2, 0);

  std::vector<int> vertex_order(n);
  std::iota(vertex_order.begin(), vertex_order.end(), 0);
  std::stable_sort(vertex_order.begin(), vertex_order.end(),
                   [&P](int a, int b) { return P.rank(a) < P.rank(b); });
  std::vector<int> topo;
  topo.reserve(2 * n + 2);
  topo.push_back(s);
  for (int v : vertex_order) {
    topo.push_back(in_node(v));
    topo.push_back(out_node(v));
  }
  topo.push_back(t);

  mcf.solve(s, t, topo);
  const long long cost = mcf.flow_cost();

  // Edge layout per vertex v: 6*v = source edge, 6*v+2 = split, 6*v+4 = sink.
  const auto& edges = mcf.edges();
  auto split_flow = [&](int v) { return edges[6 * v + 2].flow; };
  long long flow_value = 0;
  for (int v = 0; v < n; ++v) flow_value += edges[6 * v].flow;

  // Feasible potentials for the final flow seen as a min-cost circulation:
  // relax every residual arc plus the value arc t->s (and its reverse when
  // flow moved) until stable. The optimum has no negative residual cycle, so
  // the relaxation terminates; the pop guard would catch a solver bug.
  std::vector<long long> pot(2 * n + 2, 0);
  {
    struct Arc {
      int from, to;
      long long cost;
    };
    std::vector<std::vector<Arc>> out_arcs(2 * n + 2);
    auto add_arc = [&out_arcs](int from, int to, long long c) {
      out_arcs[from].push_back({from, to, c});
    };
    for (std::size_t i = 0; i < edges.size(); i += 2) {
      const FlowEdge& e = edges[i];
      int from = edges[i ^ 1].to;
      if (e.flow < e.cap) add_arc(from, e.to, e.cost);
      if (e.flow > 0) add_arc(e.to, from, -e.cost);
    }
    add_arc(t, s, 0);
    if (flow_value > 0) add_arc(s, t, 0);

    std::deque<int> queue;
    std::vector<bool> queued(2 * n + 2, true);
    for (int v = 0; v < 2 * n + 2; ++v) queue.push_back(v);
    long long pops = 0;
    const long long pop_guard = (long long)(2 * n + 2) * (2 * n + 2) + 16;
    while (!queue.empty()) {
      if (++pops > pop_guard) throw internal_check_error("negative cycle in optimal flow residual");
      int v = queue.front();
      queue.pop_front();
      queued[v] = false;
      for (const Arc& a : out_arcs[v]) {
        if (pot[v] + a.cost < pot[a.to]) {
          pot[a.to] = pot[v] + a.cost;
          if (!queued[a.to]) {
            queued[a.to] = true;
            queue.push_back(a.to);
          }
        }
      }
    }
    long long base = pot[s];
    for (long long& p : pot) p -= base;
  }

  KFamilyCertificate cert;
  cert.k = k;
  cert.size = n + cost;

  // A vertex joins the family when its potential interval crosses one of the
  // k unit levels above zero; each level is an antichain.
  for (int v = 0; v < n; ++v) {
    long long hi = std::min(pot[in_node(v)], (long long)k);
    long long lo = std::max(pot[out_node(v)], 0LL);
    if (hi - lo >= 1) cert.family.push_back(v);
  }

  // Dual chains: follow each unit of flow through the strict-order edges.
  std::vector<int> succ(n, -1);
  std::vector<bool> has_pred(n, false);
  for (std::size_t i = 6u * n; i < edges.size(); i += 2) {
    if (edges[i].flow > 0) {
      int from = edges[i ^ 1].to / 2;
      int to = edges[i].to / 2;
      succ[from] = to;
      has_pred[to] = true;
    }
  }
  std::vector<bool> used(n, false);
  for (int v = 0; v < n; ++v) {
    if (split_flow(v) != 1 || has_pred[v]) continue;
    std::vector<int> chain;
    for (int x = v; x != -1; x = succ[x]) {
      chain.push_back(x);
      used[x] = true;
    }
    cert.dual_chains.push_back(std::move(chain));
  }
  for (int v = 0; v < n; ++v)
    if (!used[v]) cert.dual_chains.push_back({v});

  long long dual_value = 0;
  for (const auto& chain : cert.dual_chains)
    dual_value += std::min<long long>((long long)chain.size(), k);
  if ((long long)cert.family.size() != cert.size || dual_value != cert.size)
    throw internal_check_error("flow certificate does not match the computed optimum");
  return cert;
}

long long max_k_family_exhaustive(const GradedPoset& P, int k) {
  if (k < 1) throw validation_error("max_k_family_exhaustive requires k >= 1");
  const int n = P.size();
  if (n > 22)
    throw size_guard_error("exhaustive k-family search refuses posets with more than 22 vertices");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&P](int a, int b) { return P.rank(a) < P.rank(b); });

  long long best = k_largest_rank_sum(rank_sequence(P), k);  // rank-level seed

  // Depth-first include/exclude in rank order; chain_len[i] tracks the longest
  // chosen chain ending at order[i].
  std::vector<int> chain_len(n, 0);
  std::vector<bool> chosen(n, false);
  auto dfs = [&](auto&& self, int at, long long size) -> void {
    if (size + (n - at) <= best) return;
    if (at == n) {
      best = std::max(best, size);
      return;
    }
    int v = order[at];
    int longest = 1;
    for (int j = 0; j < at; ++j)
      if (chosen[j] && P.less(order[j], v)) longest = std::max(longest, chain_len[j] + 1);
    if (longest <= k) {
      chosen[at] = true;
      chain_len[at] = longest;
      self(self, at + 1, size + 1);
      chosen[at] = false;
    }
    self(self, at + 1, size);
  };
  dfs(dfs, 0, 0);
  return best;
}

bool validate_certificate(const GradedPoset& P, const KFamilyCertificate& cert) {
  if (cert.k < 1) return false;
  if ((long long)cert.family.size() != cert.size) return false;
  try {
    if (!is_k_family(P, cert.family, cert.k)) return false;
  } catch (const validation_error&) {
    return false;
  }
  std::vector<bool> seen(P.size(), false);
  long long covered = 0, value = 0;
  for (const auto& chain : cert.dual_chains) {
    if (chain.empty()) return false;
    for (std::size_t i = 0; i < chain.size(); ++i) {
      int v = chain[i];
      if (v < 0 || v >= P.size() || seen[v]) return false;
      seen[v] = true;
      ++covered;
      if (i > 0 && !P.less(chain[i - 1], v)) return false;
    }
    value += std::min<long long>((long long)chain.size(), cert.k);
  }
  return covered == P.size() && value == cert.size;
}

long long k_largest_rank_sum(const RankSequence& s, int k) {
  RankSequence sorted = s;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  long long sum = 0;
  for (int i = 0; i < k && i < (int)sorted.size(); ++i) sum += sorted[i];
  return sum;
}

bool is_k_sperner(const GradedPoset& P, int k) {
  return max_k_family(P, k).size == k_largest_rank_sum(rank_sequence(P), k);
}

bool is_strong_sperner(const GradedPoset& P) {
  for (int k = 1; k <= P.top_rank() + 1; ++k)
    if (!is_k_sperner(P, k)) return false;
  return true;
}

ClawFlow claw_normalized_flow(int k) {
  if (k < 2) throw validation_error("claw_normalized_flow requires k >= 2");
  ClawFlow flow;
  flow.k = k;
  flow.edge_values.assign(k - 1, Rational::of(1, k - 1));
  return flow;
}

bool verify_claw_flow(const ClawFlow& flow) {
  if (flow.k < 2 || (int)flow.edge_values.size() != flow.k - 1) return false;
  Rational total{0, 1};
  const Rational share = Rational::of(1, flow.k - 1);  // top weight / top level weight
  for (const Rational& value : flow.edge_values) {
    if (value.num <= 0) return false;
    if (!(value == share)) return false;
    total = total + value;
  }
  return total == Rational{1, 1};
}

}  // namespace absorder
