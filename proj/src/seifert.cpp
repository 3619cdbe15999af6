#include "plumbkit/seifert.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "plumbkit/error.hpp"

namespace plumbkit {

mpq_class SeifertData::euler_number() const {
  mpq_class e(static_cast<long>(e0));
  for (const auto& [a, beta] : pairs) e += mpq_class(static_cast<long>(beta), static_cast<long>(a));
  e.canonicalize();
  return e;
}

bool operator==(const SeifertData& lhs, const SeifertData& rhs) {
  if (lhs.e0 != rhs.e0 || lhs.pairs.size() != rhs.pairs.size()) return false;
  auto a = lhs.pairs;
  auto b = rhs.pairs;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

SeifertData brieskorn_seifert(std::int64_t p, std::int64_t q, std::int64_t r) {
  const std::int64_t params[3] = {p, q, r};
  for (auto v : params)
    if (v < 2) throw InvalidInput("Brieskorn parameters must be >= 2");
  if (std::gcd(p, q) != 1 || std::gcd(p, r) != 1 || std::gcd(q, r) != 1)
    throw InvalidInput("Brieskorn parameters must be pairwise coprime");

  const Integer product = Integer(static_cast<long>(p)) * static_cast<long>(q) * static_cast<long>(r);
  SeifertData s;
  Integer weighted = 0;  // sum beta_i * pqr / a_i
  for (auto a : params) {
    const Integer big_a(static_cast<long>(a));
    const Integer cofactor = product / big_a;
    Integer inverse;
    mpz_invert(inverse.get_mpz_t(), cofactor.get_mpz_t(), big_a.get_mpz_t());
    // beta * cofactor = -1 (mod a)
    Integer beta = big_a - inverse;
    mpz_mod(beta.get_mpz_t(), beta.get_mpz_t(), big_a.get_mpz_t());
    s.pairs.push_back({a, beta.get_si()});
    weighted += beta * cofactor;
  }
  const Integer numerator = -1 - weighted;
  if (!mpz_divisible_p(numerator.get_mpz_t(), product.get_mpz_t()))
    throw Error("internal: central weight is not integral");
  s.e0 = Integer(numerator / product).get_si();
  return s;
}

std::vector<std::int64_t> neg_continued_fraction(std::int64_t a, std::int64_t b) {
  if (!(a > b && b > 0)) throw InvalidInput("continued fraction needs a > b > 0");
  if (std::gcd(a, b) != 1) throw InvalidInput("continued fraction needs coprime a, b");
  std::vector<std::int64_t> out;
  while (b > 0) {
    const std::int64_t c = (a + b - 1) / b;
    out.push_back(c);
    const std::int64_t next = c * b - a;
    a = b;
    b = next;
  }
  return out;
}

mpq_class evaluate_neg_continued_fraction(std::span<const std::int64_t> coefficients) {
  if (coefficients.empty()) throw InvalidInput("empty continued fraction");
  mpq_class value(static_cast<long>(coefficients.back()));
  for (auto it = coefficients.rbegin() + 1; it != coefficients.rend(); ++it) {
    value = mpq_class(static_cast<long>(*it)) - 1 / value;
    value.canonicalize();
  }
  return value;
}

PlumbingGraph canonical_plumbing(const SeifertData& s) {
  if (s.euler_number() >= 0) throw InvalidInput("canonical plumbing needs negative euler number");
  std::vector<Vertex> vertices{{"x", s.e0}};
  std::vector<EdgeIds> edges;
  for (std::size_t i = 0; i < s.pairs.size(); ++i) {
    const auto coefficients = neg_continued_fraction(s.pairs[i].a, s.pairs[i].beta);
    std::string previous = "x";
    for (std::size_t j = 0; j < coefficients.size(); ++j) {
      std::string id = "a" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
      vertices.push_back({id, -coefficients[j]});
      edges.emplace_back(previous, id);
      previous = std::move(id);
    }
  }
  return PlumbingGraph(std::move(vertices), edges);
}

SeifertData plumbing_to_seifert(const PlumbingGraph& g, const std::optional<std::string>& center) {
  if (g.size() == 0) throw InvalidInput("empty plumbing");
  if (!g.is_tree()) throw InvalidInput("plumbing is not a tree");

  std::size_t c = 0;
  if (center) {
    auto idx = g.index_of(*center);
    if (!idx) throw InvalidInput("unknown center '" + *center + "'");
    c = *idx;
  }
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.degree(i) >= 3) {
      if (center && i != c) throw InvalidInput("not star-shaped around the given center");
      c = i;
      break;
    }
  if (g.vertex(c).weight >= 0) throw InvalidInput("central weight must be negative");

  SeifertData s;
  s.e0 = g.vertex(c).weight;
  for (std::size_t start : g.neighbors(c)) {
    std::vector<std::int64_t> coefficients;
    std::size_t previous = c;
    std::size_t current = start;
    for (;;) {
      if (g.vertex(current).weight > -2) throw InvalidInput("arm weight must be <= -2 at '" + g.vertex(current).id + "'");
      if (g.degree(current) > 2) throw InvalidInput("plumbing is not star-shaped");
      coefficients.push_back(-g.vertex(current).weight);
      std::size_t next = previous;
      for (std::size_t v : g.neighbors(current))
        if (v != previous) next = v;
      if (next == previous) break;
      previous = current;
      current = next;
    }
    const mpq_class ratio = evaluate_neg_continued_fraction(coefficients);
    s.pairs.push_back({ratio.get_num().get_si(), ratio.get_den().get_si()});
  }
  return s;
}

namespace {

std::vector<std::size_t> tree_centers(const PlumbingGraph& g) {
  const std::size_t n = g.size();
  if (n <= 2) {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  std::vector<std::size_t> degree(n);
  std::vector<std::size_t> leaves;
  for (std::size_t i = 0; i < n; ++i) {
    degree[i] = g.degree(i);
    if (degree[i] <= 1) leaves.push_back(i);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= leaves.size();
    std::vector<std::size_t> next;
    for (std::size_t leaf : leaves)
      for (std::size_t v : g.neighbors(leaf))
        if (--degree[v] == 1) next.push_back(v);
    leaves = std::move(next);
  }
  return leaves;
}

std::string rooted_code(const PlumbingGraph& g, std::size_t v, std::size_t parent) {
  std::vector<std::string> children;
  for (std::size_t u : g.neighbors(v))
    if (u != parent) children.push_back(rooted_code(g, u, v));
  std::sort(children.begin(), children.end());
  std::string code = "(" + std::to_string(g.vertex(v).weight);
  for (const auto& child : children) code += child;
  return code + ")";
}

std::string tree_code(const PlumbingGraph& g) {
  if (g.size() == 0) return "";
  std::string best;
  for (std::size_t c : tree_centers(g)) {
    auto code = rooted_code(g, c, g.size());
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

bool backtrack_isomorphic(const PlumbingGraph& g1, const PlumbingGraph& g2) {
  const std::size_t n = g1.size();
  auto adjacent = [](const PlumbingGraph& g, std::size_t u, std::size_t v) {
    const auto& nb = g.neighbors(u);
    return std::find(nb.begin(), nb.end(), v) != nb.end();
  };
  std::vector<std::size_t> image(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || g1.vertex(i).weight != g2.vertex(j).weight || g1.degree(i) != g2.degree(j)) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) ok = adjacent(g1, i, k) == adjacent(g2, j, image[k]);
      if (!ok) continue;
      image[i] = j;
      used[j] = true;
      if (extend(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return extend(0);
}

}  // namespace

bool plumbings_isomorphic(const PlumbingGraph& g1, const PlumbingGraph& g2) {
  if (g1.size() != g2.size() || g1.edges().size() != g2.edges().size()) return false;
  if (g1.is_tree()) return tree_code(g1) == tree_code(g2);
  return backtrack_isomorphic(g1, g2);
}

}  // namespace plumbkit
