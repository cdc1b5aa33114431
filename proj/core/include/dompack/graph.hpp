#pragma once

// Simple undirected graphs on up to 64 vertices, stored as one adjacency
// bit row per vertex.  Vertex subsets are plain 64-bit masks wrapped in
// VertexSet.  All operations are deterministic; where a search has to pick
// among ties it returns the candidate with the smallest mask value.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dompack {

class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
  static constexpr VertexSet first_n(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
  int size() const;
  int lowest() const;  // index of the lowest vertex, -1 when empty

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet minus(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;

  std::vector<int> vertices() const;
  std::string to_string() const;  // "{0,2,5}"

 private:
  std::uint64_t bits_ = 0;
};

// Diameter of a graph; disconnected graphs get the infinite value, which
// compares larger than every finite one.
class Diameter {
 public:
  static Diameter finite(int value);
  static Diameter infinite();

  bool is_infinite() const { return infinite_; }
  int value() const;                 // throws std::logic_error when infinite
  bool at_least(int k) const { return infinite_ || value_ >= k; }
  bool at_most(int k) const { return !infinite_ && value_ <= k; }

  friend bool operator==(const Diameter&, const Diameter&) = default;

 private:
  int value_ = 0;
  bool infinite_ = false;
};

class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  // Duplicate edges collapse; self-loops and out-of-range endpoints throw.
  static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);
  // Takes ownership of adjacency rows; validates symmetry and irreflexivity.
  static Graph from_rows(int n, std::vector<std::uint64_t> rows);

  int order() const { return n_; }
  std::uint64_t full_mask() const { return full_; }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
  std::uint64_t row(int v) const { return adj_[v]; }
  std::uint64_t closed_row(int v) const { return adj_[v] | (std::uint64_t{1} << v); }
  VertexSet neighborhood(int v) const { return VertexSet(adj_[v]); }
  VertexSet closed_neighborhood(int v) const { return VertexSet(closed_row(v)); }

  int degree(int v) const;
  int min_degree() const;
  int max_degree() const;
  int edge_count() const;

  Graph complement() const;
  Graph disjoint_union(const Graph& other) const;
  // Keeps the vertices of `keep`, relabelled in increasing order.
  Graph induced_subgraph(VertexSet keep) const;

  std::vector<VertexSet> components() const;
  bool is_connected() const;
  Diameter diameter() const;

  // Smallest vertex set whose removal disconnects the graph; nullopt for
  // complete graphs.  Ties break to the smallest mask.
  std::optional<VertexSet> min_vertex_cut() const;
  int vertex_connectivity() const;

  VertexSet max_clique() const;
  VertexSet max_clique_within(VertexSet allowed) const;
  VertexSet max_independent_set() const;

  std::uint64_t hash() const;  // order-sensitive digest of the adjacency rows

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph(int n, std::vector<std::uint64_t> adj);

  int n_ = 0;
  std::uint64_t full_ = 0;
  std::vector<std::uint64_t> adj_;
};

// Fixed small families used all over the test and verification code.
Graph edgeless(int n);
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);      // n >= 3
Graph star(int leaves);  // center is vertex 0
Graph matching(int pairs);

// First size-`size` clique inside `allowed` in increasing mask order, or
// nullopt if none exists.
std::optional<VertexSet> find_clique_of_size(const Graph& g, VertexSet allowed, int size);

}  // namespace dompack
