#include "treedep/multigraph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace treedep {

Multigraph::Multigraph(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 1) throw std::invalid_argument("multigraph needs at least one vertex");
}

std::int64_t Multigraph::edge_units() const {
  std::int64_t total = 0;
  for (const auto& e : edges_) total += e.multiplicity;
  return total;
}

const EdgeRecord& Multigraph::edge(std::size_t index) const {
  if (index >= edges_.size()) throw std::out_of_range("edge index out of range");
  return edges_[index];
}

void Multigraph::add_edge(int u, int v, std::int64_t multiplicity, std::string label) {
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_)
    throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loops are not representable");
  if (multiplicity < 1) throw std::invalid_argument("edge multiplicity must be positive");
  if (u > v) std::swap(u, v);
  edges_.push_back(EdgeRecord{u, v, multiplicity, std::move(label)});
}

IdentifyResult identify_with_map(const Multigraph& g, int u, int v) {
  const int n = g.vertex_count();
  if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("vertex out of range");
  if (u == v) throw std::invalid_argument("cannot identify a vertex with itself");

  const int keep = std::min(u, v);
  const int drop = std::max(u, v);
  auto remap = [&](int x) {
    if (x == drop) return keep;
    return x > drop ? x - 1 : x;
  };

  std::vector<EdgeRecord> merged;
  std::vector<std::optional<std::size_t>> edge_map(g.edge_count());
  std::map<std::pair<int, int>, std::size_t> slot;  // merged bundle per vertex pair

  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edges()[i];
    int a = remap(e.u);
    int b = remap(e.v);
    if (a == b) continue;  // loop: never part of a spanning tree
    if (a > b) std::swap(a, b);
    auto [it, fresh] = slot.try_emplace({a, b}, merged.size());
    if (fresh) {
      merged.push_back(EdgeRecord{a, b, e.multiplicity, e.label});
    } else {
      // merging parallels keeps Laplacian assembly linear in records
      merged[it->second].multiplicity += e.multiplicity;
    }
    edge_map[i] = it->second;
  }

  Multigraph out(n - 1);
  for (auto& e : merged) out.add_edge(e.u, e.v, e.multiplicity, std::move(e.label));
  return IdentifyResult{std::move(out), std::move(edge_map)};
}

Multigraph contract(const Multigraph& g, std::size_t index) {
  const auto& e = g.edge(index);
  return identify_with_map(g, e.u, e.v).graph;
}

Multigraph identify(const Multigraph& g, int u, int v) {
  return identify_with_map(g, u, v).graph;
}

Multigraph delete_unit(const Multigraph& g, std::size_t index) {
  g.edge(index);  // bounds check
  Multigraph out(g.vertex_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edges()[i];
    const std::int64_t m = (i == index) ? e.multiplicity - 1 : e.multiplicity;
    if (m > 0) out.add_edge(e.u, e.v, m, e.label);
  }
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

bool is_connected(const Multigraph& g) {
  UnionFind uf(g.vertex_count());
  int components = g.vertex_count();
  for (const auto& e : g.edges())
    if (uf.unite(e.u, e.v)) --components;
  return components == 1;
}

std::optional<std::vector<int>> bipartition(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> color(n, -1);
  for (int start = 0; start < n; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::queue<int> todo;
    todo.push(start);
    while (!todo.empty()) {
      const int x = todo.front();
      todo.pop();
      for (int y : adj[x]) {
        if (color[y] == -1) {
          color[y] = 1 - color[x];
          todo.push(y);
        } else if (color[y] == color[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

bool is_simple(const Multigraph& g) {
  std::map<std::pair<int, int>, std::int64_t> units;
  for (const auto& e : g.edges()) {
    if ((units[{e.u, e.v}] += e.multiplicity) > 1) return false;
  }
  return true;
}

std::optional<std::size_t> find_edge(const Multigraph& g, int u, int v) {
  if (u > v) std::swap(u, v);
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if (g.edges()[i].u == u && g.edges()[i].v == v) return i;
  return std::nullopt;
}

namespace {

long long parse_int_token(const std::string& token, int lineno, const char* what) {
  std::size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != token.size())
    throw std::invalid_argument("line " + std::to_string(lineno) + ": malformed " + what +
                                " '" + token + "'");
  return value;
}

}  // namespace

Multigraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<Multigraph> g;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(std::move(t));
    if (tokens.empty()) continue;

    if (!g) {
      if (tokens.size() != 1)
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": expected the vertex count alone");
      const long long n = parse_int_token(tokens[0], lineno, "vertex count");
      if (n < 1)
        throw std::invalid_argument("line " + std::to_string(lineno) + ": vertex count must be >= 1");
      g.emplace(static_cast<int>(n));
      continue;
    }

    if (tokens.size() < 3 || tokens.size() > 4)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'u v m [label]'");
    const long long u = parse_int_token(tokens[0], lineno, "endpoint");
    const long long v = parse_int_token(tokens[1], lineno, "endpoint");
    const long long m = parse_int_token(tokens[2], lineno, "multiplicity");
    if (u < 0 || v >= g->vertex_count() || u >= v)
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": endpoints must satisfy 0 <= u < v < n");
    if (m < 1)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": multiplicity must be >= 1");
    g->add_edge(static_cast<int>(u), static_cast<int>(v), m,
                tokens.size() == 4 ? std::move(tokens[3]) : std::string{});
  }
  if (!g) throw std::invalid_argument("empty graph description");
  return *g;
}

std::string serialize_graph(const Multigraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << "\n";
  for (const auto& e : g.edges()) {
    out << e.u << " " << e.v << " " << e.multiplicity;
    if (!e.label.empty()) out << " " << e.label;
    out << "\n";
  }
  return out.str();
}

Multigraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

}  // namespace treedep
