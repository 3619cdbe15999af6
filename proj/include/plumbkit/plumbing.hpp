#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plumbkit/lattice.hpp"

namespace plumbkit {

struct Vertex {
  std::string id;
  std::int64_t weight = 0;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

using EdgeIds = std::pair<std::string, std::string>;

/// Weighted plumbing graph. Vertex order is significant: it fixes the basis of
/// the intersection form. Construction rejects duplicate ids, unknown edge
/// endpoints, self-loops, duplicate edges and disconnected graphs.
class PlumbingGraph {
 public:
  PlumbingGraph() = default;
  PlumbingGraph(std::vector<Vertex> vertices, const std::vector<EdgeIds>& edges);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& vertex(std::size_t i) const { return vertices_[i]; }
  // Index pairs with first < second, in insertion order.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return adjacency_[i]; }
  std::size_t degree(std::size_t i) const { return adjacency_[i].size(); }
  std::optional<std::size_t> index_of(const std::string& id) const;
  bool is_tree() const { return edges_.size() + 1 == vertices_.size() || vertices_.empty(); }

  std::vector<EdgeIds> edge_ids() const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

SymmetricIntMatrix intersection_matrix(const PlumbingGraph& g);

bool is_homology_sphere(const PlumbingGraph& g);

// Unique w in {0,1}^V with M w = diag(M) mod 2. Throws WuUndefined if M is singular mod 2.
BitVector wu_class(const PlumbingGraph& g);
Integer wu_square(const PlumbingGraph& g);

// Signature minus the Wu square.
Integer mu_bar(const PlumbingGraph& g);

// (mu_bar / 8) mod 2. Throws InvalidInput for non-homology-sphere graphs and
// MuBarNotDivisible when 8 does not divide mu_bar.
int rokhlin(const PlumbingGraph& g);
int rokhlin_from_mu_bar(const Integer& mu_bar);

struct InvariantReport {
  Integer det;
  Inertia inertia;
  std::optional<BitVector> wu;
  std::optional<Integer> wu_square;
  std::optional<Integer> mu_bar;
  std::optional<int> rokhlin;
};

// Never throws on well-formed graphs; fields that are undefined stay empty.
InvariantReport report(const PlumbingGraph& g);

// Graphviz export, vertices labelled by weight.
std::string to_dot(const PlumbingGraph& g, const std::string& name = "plumbing");

}  // namespace plumbkit
