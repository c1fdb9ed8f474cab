#include "signed_spectra/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <queue>
#include <sstream>

namespace signed_spectra {

SignedGraph::SignedGraph(int n) : SignedGraph(n, {}) {}

SignedGraph::SignedGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    Edge& e = edges_[i];
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (e.sign != 1 && e.sign != -1) throw std::invalid_argument("edge sign must be +1 or -1");
    if (e.u > e.v) std::swap(e.u, e.v);
    adjacency_[static_cast<std::size_t>(e.u)].push_back({e.v, e.sign, i});
    adjacency_[static_cast<std::size_t>(e.v)].push_back({e.u, e.sign, i});
  }
  for (auto& list : adjacency_) {
    std::stable_sort(list.begin(), list.end(),
                     [](const Incident& a, const Incident& b) { return a.neighbor < b.neighbor; });
  }
}

bool SignedGraph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::queue<int> queue;
  queue.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop();
    for (const Incident& inc : incident(x)) {
      if (!seen[static_cast<std::size_t>(inc.neighbor)]) {
        seen[static_cast<std::size_t>(inc.neighbor)] = 1;
        ++reached;
        queue.push(inc.neighbor);
      }
    }
  }
  return reached == n_;
}

int SignedGraph::regular_degree() const {
  if (n_ == 0) return -1;
  int d = valency(0);
  for (int v = 1; v < n_; ++v)
    if (valency(v) != d) return -1;
  return d;
}

bool operator==(const SignedGraph& a, const SignedGraph& b) {
  if (a.n_ != b.n_ || a.edges_.size() != b.edges_.size()) return false;
  std::vector<Edge> ea = a.edges_, eb = b.edges_;
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  return ea == eb;
}

VertexSubset::VertexSubset(std::initializer_list<int> members) : VertexSubset(std::vector<int>(members)) {}

VertexSubset::VertexSubset(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSubset VertexSubset::all(int n) {
  std::vector<int> m(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = i;
  return VertexSubset(std::move(m));
}

VertexSubset VertexSubset::from_mask(std::uint64_t mask) {
  std::vector<int> m;
  for (int i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1u) m.push_back(i);
  return VertexSubset(std::move(m));
}

bool VertexSubset::contains(int v) const { return std::binary_search(members_.begin(), members_.end(), v); }

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<int> parse_index(std::string_view token) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value < 0) return std::nullopt;
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

struct RawEdge {
  std::size_t line;
  std::string u, v;
  int sign;
};

}  // namespace

SignedGraph load_graph(std::string_view text) {
  std::optional<int> declared_n;
  std::vector<RawEdge> raw;
  bool named = false;

  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string buffer;
  while (std::getline(in, buffer)) {
    ++line_no;
    std::string_view line = buffer;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.starts_with("n=")) {
      if (declared_n) throw ParseError(line_no, "duplicate header");
      auto n = parse_index(trim(line.substr(2)));
      if (!n) throw ParseError(line_no, "malformed header '" + std::string(line) + "'");
      declared_n = *n;
      continue;
    }

    auto tokens = split_ws(line);
    if (tokens.size() != 3) throw ParseError(line_no, "expected '<u> <v> <sign>'");
    int sign = 0;
    if (tokens[2] == "+" || tokens[2] == "+1") {
      sign = 1;
    } else if (tokens[2] == "-" || tokens[2] == "-1") {
      sign = -1;
    } else {
      throw ParseError(line_no, "bad sign token '" + std::string(tokens[2]) + "'");
    }
    if (tokens[0] == tokens[1]) throw ParseError(line_no, "self-loop");
    if (!parse_index(tokens[0]) || !parse_index(tokens[1])) named = true;
    raw.push_back({line_no, std::string(tokens[0]), std::string(tokens[1]), sign});
  }

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  int n = 0;
  if (named) {
    std::map<std::string, int> names;
    auto lookup = [&](const std::string& name) {
      auto [it, inserted] = names.try_emplace(name, static_cast<int>(names.size()));
      return it->second;
    };
    for (const RawEdge& r : raw) {
      int u = lookup(r.u);
      int v = lookup(r.v);
      edges.push_back({u, v, r.sign});
    }
    n = static_cast<int>(names.size());
    if (declared_n) {
      if (*declared_n < n) throw ParseError(raw.back().line, "more vertex names than declared n");
      n = *declared_n;
    }
  } else {
    int max_index = -1;
    for (const RawEdge& r : raw) {
      int u = *parse_index(r.u);
      int v = *parse_index(r.v);
      if (u == v) throw ParseError(r.line, "self-loop");
      if (declared_n && (u >= *declared_n || v >= *declared_n))
        throw ParseError(r.line, "vertex index exceeds declared n=" + std::to_string(*declared_n));
      max_index = std::max({max_index, u, v});
      edges.push_back({u, v, r.sign});
    }
    n = declared_n ? *declared_n : max_index + 1;
  }
  return SignedGraph(n, std::move(edges));
}

SignedGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return load_graph(buf.str());
}

std::string serialize_graph(const SignedGraph& g) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::sort(edges.begin(), edges.end());
  std::ostringstream out;
  out << "n=" << g.vertex_count() << '\n';
  for (const Edge& e : edges) out << e.u << ' ' << e.v << ' ' << (e.sign > 0 ? '+' : '-') << '\n';
  return out.str();
}

DegreeStats degree_stats(const SignedGraph& g) {
  DegreeStats stats;
  if (g.vertex_count() == 0) return stats;
  stats.d_min = g.valency(0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    stats.d_max = std::max(stats.d_max, g.valency(v));
    stats.d_min = std::min(stats.d_min, g.valency(v));
  }
  stats.d_ave = Rational(2 * static_cast<std::int64_t>(g.edge_count()), g.vertex_count());
  return stats;
}

void check_subset(const SignedGraph& g, const VertexSubset& s) {
  for (int v : s)
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("vertex " + std::to_string(v) + " not in graph");
}

std::vector<char> membership(const SignedGraph& g, const VertexSubset& s) {
  check_subset(g, s);
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : s) in[static_cast<std::size_t>(v)] = 1;
  return in;
}

std::vector<Edge> boundary_edges(const SignedGraph& g, const VertexSubset& s) {
  if (s.empty()) throw std::invalid_argument("boundary of empty subset");
  auto in = membership(g, s);
  std::vector<Edge> out;
  for (const Edge& e : g.edges())
    if (in[static_cast<std::size_t>(e.u)] != in[static_cast<std::size_t>(e.v)]) out.push_back(e);
  return out;
}

std::size_t boundary_size(const SignedGraph& g, const VertexSubset& s) { return boundary_edges(g, s).size(); }

EdgePartition edge_partition(const SignedGraph& g, const VertexSubset& s, const VertexSubset& t) {
  auto in_s = membership(g, s);
  auto in_t = membership(g, t);
  for (int v : t)
    if (in_s[static_cast<std::size_t>(v)]) throw std::invalid_argument("S and T overlap at vertex " + std::to_string(v));

  EdgePartition parts;
  for (const Edge& e : g.edges()) {
    const auto u = static_cast<std::size_t>(e.u), v = static_cast<std::size_t>(e.v);
    if (in_s[u] && in_s[v]) {
      parts.internal_s.push_back(e);
      if (e.sign < 0) parts.negative_in_s.push_back(e);
    } else if (in_t[u] && in_t[v]) {
      if (e.sign < 0) parts.negative_in_t.push_back(e);
    } else if ((in_s[u] && in_t[v]) || (in_t[u] && in_s[v])) {
      parts.across.push_back(e);
      if (e.sign > 0) parts.positive_across.push_back(e);
    }
  }
  return parts;
}

SignedVector indicator(const SignedGraph& g, const VertexSubset& s, const VertexSubset& t) {
  auto in_s = membership(g, s);
  check_subset(g, t);
  SignedVector r(static_cast<std::size_t>(g.vertex_count()), 0.0);
  for (int v : s) r[static_cast<std::size_t>(v)] = 1.0;
  for (int v : t) {
    if (in_s[static_cast<std::size_t>(v)]) throw std::invalid_argument("S and T overlap at vertex " + std::to_string(v));
    r[static_cast<std::size_t>(v)] = -1.0;
  }
  return r;
}

SignedGraph induced_subgraph(const SignedGraph& g, const VertexSubset& s) {
  check_subset(g, s);
  std::vector<int> rank(static_cast<std::size_t>(g.vertex_count()), -1);
  int next = 0;
  for (int v : s) rank[static_cast<std::size_t>(v)] = next++;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    int a = rank[static_cast<std::size_t>(e.u)], b = rank[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.push_back({a, b, e.sign});
  }
  return SignedGraph(next, std::move(edges));
}

SignedGraph unsigned_version(const SignedGraph& g) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Edge& e : edges) e.sign = 1;
  return SignedGraph(g.vertex_count(), std::move(edges));
}

}  // namespace signed_spectra
