#include "signed_spectra/frustration.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace signed_spectra {

namespace {

struct Neighbor {
  int other;
  int sign;
};

// Component-minimum flags for the subgraph induced on ranks 0..m-1.
std::vector<char> component_roots(const std::vector<std::vector<Neighbor>>& adj) {
  const auto m = adj.size();
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (const Neighbor& nb : adj[i]) {
      int a = find(static_cast<int>(i)), b = find(nb.other);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  std::vector<char> root(m, 0);
  for (std::size_t i = 0; i < m; ++i) root[i] = find(static_cast<int>(i)) == static_cast<int>(i);
  return root;
}

class FrustrationSearch {
 public:
  explicit FrustrationSearch(std::vector<std::vector<Neighbor>> adj)
      : adj_(std::move(adj)),
        pinned_(component_roots(adj_)),
        labels_(adj_.size(), 0),
        agree_(adj_.size(), 0),
        disagree_(adj_.size(), 0) {}

  void run() { dfs(0, 0, 0); }
  int best() const { return best_; }
  const std::vector<int>& best_labels() const { return best_labels_; }

 private:
  // agree_[j]: edges to assigned vertices satisfied when j takes +1.
  // disagree_[j]: edges satisfied when j takes -1.
  void dfs(std::size_t i, int cost, int slack) {
    if (cost + slack >= best_) return;
    if (i == adj_.size()) {
      best_ = cost;
      best_labels_ = labels_;
      return;
    }
    const int own_min = std::min(agree_[i], disagree_[i]);
    for (int label : {1, -1}) {
      if (label < 0 && pinned_[i]) break;
      const int added = label > 0 ? disagree_[i] : agree_[i];
      int next_slack = slack - own_min;
      labels_[i] = label;
      for (const Neighbor& nb : adj_[i]) {
        const auto j = static_cast<std::size_t>(nb.other);
        if (j <= i) continue;
        const int before = std::min(agree_[j], disagree_[j]);
        (label * nb.sign > 0 ? agree_[j] : disagree_[j]) += 1;
        next_slack += std::min(agree_[j], disagree_[j]) - before;
      }
      dfs(i + 1, cost + added, next_slack);
      for (const Neighbor& nb : adj_[i]) {
        const auto j = static_cast<std::size_t>(nb.other);
        if (j <= i) continue;
        (label * nb.sign > 0 ? agree_[j] : disagree_[j]) -= 1;
      }
      labels_[i] = 0;
    }
  }

  std::vector<std::vector<Neighbor>> adj_;
  std::vector<char> pinned_;
  std::vector<int> labels_;
  std::vector<int> agree_;
  std::vector<int> disagree_;
  int best_ = std::numeric_limits<int>::max();
  std::vector<int> best_labels_;
};

std::vector<int> rank_in(const SignedGraph& g, const VertexSubset& s) {
  check_subset(g, s);
  std::vector<int> rank(static_cast<std::size_t>(g.vertex_count()), -1);
  int r = 0;
  for (int v : s) rank[static_cast<std::size_t>(v)] = r++;
  return rank;
}

// Contribution of the edges at one vertex, given its state and the counts of
// its incident edges by the state of the other endpoint.
struct EdgeCounts {
  int excluded = 0;  // other endpoint outside S
  int plus = 0;      // other endpoint w in S with sigma(w) * sign = +1
  int minus = 0;     // other endpoint w in S with sigma(w) * sign = -1
};

int state_cost(const EdgeCounts& c, int state, int weight) {
  if (state == 0) return c.plus + c.minus;
  return c.excluded + weight * (state > 0 ? c.minus : c.plus);
}

// Objective value (|dS| + weight * frustrated) and |S| of a full state vector.
std::pair<std::int64_t, int> evaluate_state(const SignedGraph& g, const std::vector<int>& state, int weight) {
  std::int64_t num = 0;
  int size = 0;
  for (int x : state) size += x != 0;
  for (const Edge& e : g.edges()) {
    const int a = state[static_cast<std::size_t>(e.u)], b = state[static_cast<std::size_t>(e.v)];
    if ((a == 0) != (b == 0)) {
      num += 1;
    } else if (a != 0 && a * b * e.sign < 0) {
      num += weight;
    }
  }
  return {num, size};
}

VertexSubset support(const std::vector<int>& state) {
  std::vector<int> members;
  for (std::size_t v = 0; v < state.size(); ++v)
    if (state[v] != 0) members.push_back(static_cast<int>(v));
  return VertexSubset(std::move(members));
}

struct Candidate {
  Rational value{0};
  VertexSubset set;
  std::vector<int> state;
  bool valid = false;

  // Smaller ratio wins; ties go to the lexicographically smaller set.
  void offer(const Rational& v, const std::vector<int>& s) {
    if (!valid || v < value) {
      value = v;
      state = s;
      set = support(s);
      valid = true;
    } else if (v == value) {
      VertexSubset other = support(s);
      if (other < set) {
        set = std::move(other);
        state = s;
      }
    }
  }
};

class LocalSearch {
 public:
  LocalSearch(const SignedGraph& g, int weight) : g_(g), weight_(weight) {}

  // Steepest descent from `state` until no single-vertex move improves.
  std::vector<int> descend(std::vector<int> state) const {
    const auto n = static_cast<std::size_t>(g_.vertex_count());
    std::vector<EdgeCounts> counts(n);
    for (std::size_t v = 0; v < n; ++v) counts[v] = tally(state, static_cast<int>(v));
    auto [num, size] = evaluate_state(g_, state, weight_);

    for (;;) {
      int best_vertex = -1, best_state = 0;
      std::int64_t best_num = num;
      int best_size = size;
      for (std::size_t v = 0; v < n; ++v) {
        const int current = state[v];
        for (int next : {1, -1, 0}) {
          if (next == current) continue;
          const int next_size = size + (next != 0) - (current != 0);
          if (next_size == 0) continue;
          const std::int64_t next_num =
              num - state_cost(counts[v], current, weight_) + state_cost(counts[v], next, weight_);
          // next_num / next_size < best_num / best_size
          if (next_num * best_size < best_num * next_size) {
            best_vertex = static_cast<int>(v);
            best_state = next;
            best_num = next_num;
            best_size = next_size;
          }
        }
      }
      if (best_vertex < 0) break;
      const int old = state[static_cast<std::size_t>(best_vertex)];
      state[static_cast<std::size_t>(best_vertex)] = best_state;
      for (const Incident& inc : g_.incident(best_vertex)) {
        EdgeCounts& c = counts[static_cast<std::size_t>(inc.neighbor)];
        bump(c, old, inc.sign, -1);
        bump(c, best_state, inc.sign, +1);
      }
      num = best_num;
      size = best_size;
    }
    return state;
  }

 private:
  static void bump(EdgeCounts& c, int state, int sign, int delta) {
    if (state == 0) {
      c.excluded += delta;
    } else if (state * sign > 0) {
      c.plus += delta;
    } else {
      c.minus += delta;
    }
  }

  EdgeCounts tally(const std::vector<int>& state, int v) const {
    EdgeCounts c;
    for (const Incident& inc : g_.incident(v)) bump(c, state[static_cast<std::size_t>(inc.neighbor)], inc.sign, +1);
    return c;
  }

  const SignedGraph& g_;
  int weight_;
};

// Spanning-forest labels: a switching that satisfies every tree edge.
std::vector<int> forest_labels(const SignedGraph& g) {
  BalanceCertificate cert = check_balance(g);
  if (cert.balanced) return cert.switching->labels();
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> label(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (label[root] != 0) continue;
    label[root] = 1;
    std::vector<int> stack{static_cast<int>(root)};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const Incident& inc : g.incident(x)) {
        auto y = static_cast<std::size_t>(inc.neighbor);
        if (label[y] == 0) {
          label[y] = label[static_cast<std::size_t>(x)] * inc.sign;
          stack.push_back(inc.neighbor);
        }
      }
    }
  }
  return label;
}

std::pair<Candidate, Candidate> heuristic_search(const SignedGraph& g, const PsiOptions& options) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::mt19937_64 rng(options.seed);
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);

  std::vector<std::vector<int>> starts;
  starts.push_back(forest_labels(g));
  for (int r = 1; r < options.restarts; ++r) {
    std::vector<int> state(n, 0);
    for (auto& x : state) x = coin(rng) ? (coin(rng) ? 1 : -1) : 0;
    if (std::all_of(state.begin(), state.end(), [](int x) { return x == 0; })) state[pick(rng)] = 1;
    starts.push_back(std::move(state));
  }

  Candidate psi, psi_tilde;
  for (int weight : {2, 4}) {
    LocalSearch search(g, weight);
    for (const auto& start : starts) {
      std::vector<int> local = search.descend(start);
      // Every local optimum is scored under both objectives; this keeps
      // psi <= psi_tilde <= 2 psi for the reported upper bounds.
      auto [n2, s2] = evaluate_state(g, local, 2);
      auto [n4, s4] = evaluate_state(g, local, 4);
      psi.offer(Rational(n2, s2), local);
      psi_tilde.offer(Rational(n4, s4), local);
    }
  }
  return {psi, psi_tilde};
}

class ExactPsiSearch {
 public:
  ExactPsiSearch(const SignedGraph& g, int weight, const Candidate& seed) : g_(g), weight_(weight), best_(seed) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    order_ = connectivity_order();
    position_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) position_[static_cast<std::size_t>(order_[i])] = i;
    state_.assign(n, 0);
    counts_.assign(n, EdgeCounts{});
  }

  void run() { dfs(0, 0, 0, false); }
  const Candidate& best() const { return best_; }

 private:
  // Greedy order: next vertex has the most edges into the prefix.
  std::vector<int> connectivity_order() const {
    const int n = g_.vertex_count();
    std::vector<int> order;
    std::vector<int> links(static_cast<std::size_t>(n), 0);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
      int pick = -1;
      for (int v = 0; v < n; ++v) {
        if (used[static_cast<std::size_t>(v)]) continue;
        if (pick < 0 || links[static_cast<std::size_t>(v)] > links[static_cast<std::size_t>(pick)] ||
            (links[static_cast<std::size_t>(v)] == links[static_cast<std::size_t>(pick)] &&
             g_.valency(v) > g_.valency(pick)))
          pick = v;
      }
      used[static_cast<std::size_t>(pick)] = 1;
      order.push_back(pick);
      for (const Incident& inc : g_.incident(pick)) ++links[static_cast<std::size_t>(inc.neighbor)];
    }
    return order;
  }

  // Scaled objective num * den(best) - num(best) * size; negative beats best.
  std::int64_t scaled(std::int64_t num, int size) const {
    return num * best_.value.denominator() - best_.value.numerator() * size;
  }

  void dfs(std::size_t depth, std::int64_t num, int size, bool any_included) {
    const std::size_t n = order_.size();
    const std::int64_t den = best_.value.denominator();
    const std::int64_t lam = best_.value.numerator();

    std::int64_t bound = scaled(num, size);
    for (std::size_t d = depth; d < n; ++d) {
      const EdgeCounts& c = counts_[static_cast<std::size_t>(order_[d])];
      const std::int64_t out = std::int64_t{state_cost(c, 0, weight_)} * den;
      const std::int64_t in =
          std::int64_t{std::min(state_cost(c, 1, weight_), state_cost(c, -1, weight_))} * den - lam;
      bound += std::min(out, in);
    }
    if (bound > 0) return;

    if (depth == n) {
      if (size > 0) best_.offer(Rational(num, size), state_);
      return;
    }

    const int v = order_[depth];
    const EdgeCounts& c = counts_[static_cast<std::size_t>(v)];
    for (int s : {1, -1, 0}) {
      if (s < 0 && !any_included) continue;  // global sign flip
      const std::int64_t added = state_cost(c, s, weight_);
      state_[static_cast<std::size_t>(v)] = s;
      for (const Incident& inc : g_.incident(v)) {
        if (position_[static_cast<std::size_t>(inc.neighbor)] > depth)
          bump(counts_[static_cast<std::size_t>(inc.neighbor)], s, inc.sign, +1);
      }
      dfs(depth + 1, num + added, size + (s != 0), any_included || s != 0);
      for (const Incident& inc : g_.incident(v)) {
        if (position_[static_cast<std::size_t>(inc.neighbor)] > depth)
          bump(counts_[static_cast<std::size_t>(inc.neighbor)], s, inc.sign, -1);
      }
      state_[static_cast<std::size_t>(v)] = 0;
    }
  }

  static void bump(EdgeCounts& c, int state, int sign, int delta) {
    if (state == 0) {
      c.excluded += delta;
    } else if (state * sign > 0) {
      c.plus += delta;
    } else {
      c.minus += delta;
    }
  }

  const SignedGraph& g_;
  int weight_;
  Candidate best_;
  std::vector<int> order_;
  std::vector<std::size_t> position_;
  std::vector<int> state_;
  std::vector<EdgeCounts> counts_;
};

}  // namespace

FrustrationResult frustration_index(const SignedGraph& g, const VertexSubset& s) {
  if (s.empty()) throw std::invalid_argument("frustration index of empty subset");
  const auto rank = rank_in(g, s);
  std::vector<std::vector<Neighbor>> adj(s.size());
  std::vector<std::size_t> internal;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    const int a = rank[static_cast<std::size_t>(e.u)], b = rank[static_cast<std::size_t>(e.v)];
    if (a < 0 || b < 0) continue;
    internal.push_back(i);
    adj[static_cast<std::size_t>(a)].push_back({b, e.sign});
    adj[static_cast<std::size_t>(b)].push_back({a, e.sign});
  }

  FrustrationSearch search(std::move(adj));
  search.run();

  FrustrationResult result;
  result.value = search.best();
  result.switching = Switching(search.best_labels());
  for (std::size_t i : internal) {
    const Edge& e = g.edge(i);
    if (result.switching[rank[static_cast<std::size_t>(e.u)]] * result.switching[rank[static_cast<std::size_t>(e.v)]] *
            e.sign <
        0)
      result.removal_set.push_back(i);
  }
  return result;
}

int frustrated_edges(const SignedGraph& g, const VertexSubset& s, const Switching& labels) {
  if (labels.size() != s.size()) throw std::invalid_argument("switching length does not match subset size");
  const auto rank = rank_in(g, s);
  int count = 0;
  for (const Edge& e : g.edges()) {
    const int a = rank[static_cast<std::size_t>(e.u)], b = rank[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0 && labels[a] * labels[b] * e.sign < 0) ++count;
  }
  return count;
}

Rational psi_subset(const SignedGraph& g, const VertexSubset& s) {
  if (s.empty()) throw std::invalid_argument("psi of empty subset");
  const auto boundary = static_cast<std::int64_t>(boundary_size(g, s));
  return Rational(boundary + 2 * frustration_index(g, s).value, static_cast<std::int64_t>(s.size()));
}

Rational psi_tilde_subset(const SignedGraph& g, const VertexSubset& s) {
  if (s.empty()) throw std::invalid_argument("psi of empty subset");
  const auto boundary = static_cast<std::int64_t>(boundary_size(g, s));
  return Rational(boundary + 4 * frustration_index(g, s).value, static_cast<std::int64_t>(s.size()));
}

IsoperimetricReport psi_global(const SignedGraph& g, const PsiOptions& options) {
  if (g.vertex_count() == 0) throw std::invalid_argument("psi of a graph without vertices");
  if (options.mode == SearchMode::exact && g.vertex_count() > options.exact_threshold)
    throw std::invalid_argument("exact psi limited to n <= " + std::to_string(options.exact_threshold) + " (graph has n=" +
                                std::to_string(g.vertex_count()) + "); use heuristic mode or raise the threshold");

  auto [psi, psi_tilde] = heuristic_search(g, options);

  IsoperimetricReport report;
  report.exact = options.mode == SearchMode::exact;
  if (report.exact) {
    ExactPsiSearch search2(g, 2, psi);
    search2.run();
    ExactPsiSearch search4(g, 4, psi_tilde);
    search4.run();
    psi = search2.best();
    psi_tilde = search4.best();
  }
  report.psi = psi.value;
  report.psi_tilde = psi_tilde.value;
  report.witness_psi = psi.set;
  report.witness_psi_tilde = psi_tilde.set;
  return report;
}

Rational edge_isoperimetric_h(const SignedGraph& g, const VertexSubset& s, int threshold) {
  if (s.empty()) throw std::invalid_argument("h of empty subset");
  if (static_cast<int>(s.size()) > threshold || s.size() >= 63)
    throw std::invalid_argument("h(S) enumeration limited to |S| <= " + std::to_string(threshold));
  check_subset(g, s);
  const auto& members = s.members();
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
  Rational best{-1};
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << members.size()); ++mask) {
    int size = 0;
    for (std::size_t i = 0; i < members.size(); ++i) {
      const bool bit = (mask >> i) & 1u;
      in[static_cast<std::size_t>(members[i])] = bit;
      size += bit;
    }
    std::int64_t boundary = 0;
    for (const Edge& e : g.edges())
      boundary += in[static_cast<std::size_t>(e.u)] != in[static_cast<std::size_t>(e.v)];
    Rational value(boundary, size);
    if (best < 0 || value < best) best = value;
  }
  return best;
}

}  // namespace signed_spectra
