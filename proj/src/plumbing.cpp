#include "plumbkit/plumbing.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

#include "plumbkit/error.hpp"

namespace plumbkit {

PlumbingGraph::PlumbingGraph(std::vector<Vertex> vertices, const std::vector<EdgeIds>& edges)
    : vertices_(std::move(vertices)), adjacency_(vertices_.size()) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (!index.emplace(vertices_[i].id, i).second)
      throw InvalidInput("duplicate vertex id '" + vertices_[i].id + "'");

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [u, v] : edges) {
    auto iu = index.find(u);
    auto iv = index.find(v);
    if (iu == index.end() || iv == index.end())
      throw InvalidInput("edge endpoint not a vertex: '" + (iu == index.end() ? u : v) + "'");
    if (iu->second == iv->second) throw InvalidInput("self-loop at '" + u + "'");
    auto e = std::minmax(iu->second, iv->second);
    if (!seen.insert(e).second) throw InvalidInput("duplicate edge '" + u + "'-'" + v + "'");
    edges_.emplace_back(e.first, e.second);
    adjacency_[e.first].push_back(e.second);
    adjacency_[e.second].push_back(e.first);
  }

  if (vertices_.empty()) return;
  std::vector<bool> reached(vertices_.size(), false);
  std::vector<std::size_t> stack{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v : adjacency_[u])
      if (!reached[v]) {
        reached[v] = true;
        ++count;
        stack.push_back(v);
      }
  }
  if (count != vertices_.size()) throw InvalidInput("plumbing graph is not connected");
}

std::optional<std::size_t> PlumbingGraph::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].id == id) return i;
  return std::nullopt;
}

std::vector<EdgeIds> PlumbingGraph::edge_ids() const {
  std::vector<EdgeIds> out;
  out.reserve(edges_.size());
  for (const auto& [u, v] : edges_) out.emplace_back(vertices_[u].id, vertices_[v].id);
  return out;
}

SymmetricIntMatrix intersection_matrix(const PlumbingGraph& g) {
  SymmetricIntMatrix m(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) m.set(i, i, Integer(static_cast<long>(g.vertex(i).weight)));
  for (const auto& [u, v] : g.edges()) m.set(u, v, 1);
  return m;
}

bool is_homology_sphere(const PlumbingGraph& g) { return abs(determinant(intersection_matrix(g))) == 1; }

namespace {

BitVector wu_of(const SymmetricIntMatrix& m) {
  BitVector diagonal(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) diagonal[i] = mpz_odd_p(m(i, i).get_mpz_t()) ? 1 : 0;
  auto solution = solve_mod2(m, diagonal);
  if (solution.status != Mod2Status::Unique) throw WuUndefined();
  return solution.x;
}

Integer square_of(const SymmetricIntMatrix& m, const BitVector& w) {
  Integer s = 0;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (!w[i]) continue;
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (w[j]) s += m(i, j);
  }
  return s;
}

}  // namespace

int rokhlin_from_mu_bar(const Integer& mu) {
  if (mpz_divisible_ui_p(mu.get_mpz_t(), 8) == 0)
    throw MuBarNotDivisible("mu_bar = " + mu.get_str() + " is not divisible by 8");
  Integer q;
  mpz_fdiv_q_ui(q.get_mpz_t(), mu.get_mpz_t(), 8);
  return mpz_odd_p(q.get_mpz_t()) ? 1 : 0;
}

BitVector wu_class(const PlumbingGraph& g) { return wu_of(intersection_matrix(g)); }

Integer wu_square(const PlumbingGraph& g) {
  const auto m = intersection_matrix(g);
  return square_of(m, wu_of(m));
}

Integer mu_bar(const PlumbingGraph& g) {
  const auto m = intersection_matrix(g);
  const auto w = wu_of(m);
  return Integer(inertia(m).signature()) - square_of(m, w);
}

int rokhlin(const PlumbingGraph& g) {
  if (!is_homology_sphere(g)) throw InvalidInput("Rokhlin invariant needs a homology-sphere plumbing");
  return rokhlin_from_mu_bar(mu_bar(g));
}

InvariantReport report(const PlumbingGraph& g) {
  const auto m = intersection_matrix(g);
  InvariantReport r;
  r.det = determinant(m);
  r.inertia = inertia(m);
  if (mpz_even_p(r.det.get_mpz_t())) return r;

  r.wu = wu_of(m);
  r.wu_square = square_of(m, *r.wu);
  r.mu_bar = Integer(r.inertia.signature()) - *r.wu_square;
  if (abs(r.det) == 1 && mpz_divisible_ui_p(r.mu_bar->get_mpz_t(), 8) != 0) r.rokhlin = rokhlin_from_mu_bar(*r.mu_bar);
  return r;
}

std::string to_dot(const PlumbingGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n  node [shape=point];\n";
  for (const auto& v : g.vertices())
    out << "  \"" << v.id << "\" [xlabel=\"" << v.weight << "\"];\n";
  for (const auto& [u, v] : g.edge_ids()) out << "  \"" << u << "\" -- \"" << v << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace plumbkit
