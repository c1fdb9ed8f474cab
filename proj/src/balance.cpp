#include "signed_spectra/balance.hpp"

#include <algorithm>
#include <queue>

namespace signed_spectra {

Switching::Switching(std::vector<int> labels) : labels_(std::move(labels)) {
  for (int l : labels_)
    if (l != 1 && l != -1) throw std::invalid_argument("switching labels must be +1 or -1");
}

Switching Switching::identity(int n) { return Switching(std::vector<int>(static_cast<std::size_t>(n), 1)); }

UnbalancedError::UnbalancedError(BalanceCertificate certificate)
    : std::runtime_error("graph is not coherently signed"), certificate_(std::move(certificate)) {}

namespace {

constexpr std::size_t kNoEdge = static_cast<std::size_t>(-1);

BalanceCertificate fundamental_cycle(const std::vector<int>& parent,
                                     const std::vector<std::size_t>& parent_edge, const std::vector<int>& depth,
                                     int x, int y, std::size_t closing_edge) {
  // Climb both endpoints to their lowest common ancestor.
  std::vector<int> down_x{x}, up_y{y};
  std::vector<std::size_t> edges_x, edges_y;
  int a = x, b = y;
  while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)]) {
    edges_x.push_back(parent_edge[static_cast<std::size_t>(a)]);
    a = parent[static_cast<std::size_t>(a)];
    down_x.push_back(a);
  }
  while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)]) {
    edges_y.push_back(parent_edge[static_cast<std::size_t>(b)]);
    b = parent[static_cast<std::size_t>(b)];
    up_y.push_back(b);
  }
  while (a != b) {
    edges_x.push_back(parent_edge[static_cast<std::size_t>(a)]);
    a = parent[static_cast<std::size_t>(a)];
    down_x.push_back(a);
    edges_y.push_back(parent_edge[static_cast<std::size_t>(b)]);
    b = parent[static_cast<std::size_t>(b)];
    up_y.push_back(b);
  }

  BalanceCertificate cert;
  cert.balanced = false;
  // lca ... x, then y ... lca
  cert.odd_cycle.assign(down_x.rbegin(), down_x.rend());
  cert.odd_cycle.insert(cert.odd_cycle.end(), up_y.begin(), up_y.end());
  cert.odd_cycle_edges.assign(edges_x.rbegin(), edges_x.rend());
  cert.odd_cycle_edges.push_back(closing_edge);
  cert.odd_cycle_edges.insert(cert.odd_cycle_edges.end(), edges_y.begin(), edges_y.end());
  return cert;
}

}  // namespace

BalanceCertificate check_balance(const SignedGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> label(n, 0), parent(n, -1), depth(n, 0);
  std::vector<std::size_t> parent_edge(n, kNoEdge);

  for (int root = 0; root < g.vertex_count(); ++root) {
    if (label[static_cast<std::size_t>(root)] != 0) continue;
    label[static_cast<std::size_t>(root)] = 1;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop();
      for (const Incident& inc : g.incident(x)) {
        const auto y = static_cast<std::size_t>(inc.neighbor);
        const int expected = label[static_cast<std::size_t>(x)] * inc.sign;
        if (label[y] == 0) {
          label[y] = expected;
          parent[y] = x;
          parent_edge[y] = inc.edge;
          depth[y] = depth[static_cast<std::size_t>(x)] + 1;
          queue.push(inc.neighbor);
        } else if (label[y] != expected) {
          return fundamental_cycle(parent, parent_edge, depth, x, inc.neighbor, inc.edge);
        }
      }
    }
  }

  BalanceCertificate cert;
  cert.balanced = true;
  cert.switching = Switching(std::move(label));
  return cert;
}

CutSet negative_cut_set(const SignedGraph& g) {
  BalanceCertificate cert = check_balance(g);
  if (!cert.balanced) throw UnbalancedError(std::move(cert));
  std::vector<int> s, t;
  for (int v = 0; v < g.vertex_count(); ++v) ((*cert.switching)[v] > 0 ? s : t).push_back(v);
  return {VertexSubset(std::move(s)), VertexSubset(std::move(t))};
}

SignedGraph switch_graph(const SignedGraph& g, const Switching& sigma) {
  if (sigma.size() != static_cast<std::size_t>(g.vertex_count()))
    throw std::invalid_argument("switching length does not match vertex count");
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Edge& e : edges) e.sign *= sigma[e.u] * sigma[e.v];
  return SignedGraph(g.vertex_count(), std::move(edges));
}

int walk_sign(const SignedGraph& g, const std::vector<std::size_t>& edges) {
  int sign = 1;
  for (std::size_t e : edges) sign *= g.edge(e).sign;
  return sign;
}

}  // namespace signed_spectra
