#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "plumbkit/plumbing.hpp"

namespace plumbkit {

struct ConePair {
  std::int64_t a = 0;     // multiplicity, > 1
  std::int64_t beta = 0;  // 0 < beta < a, gcd(a, beta) = 1

  friend auto operator<=>(const ConePair&, const ConePair&) = default;
};

/// Normalized Seifert invariants (e0; (a_1,beta_1), ..., (a_k,beta_k)).
struct SeifertData {
  std::int64_t e0 = 0;
  std::vector<ConePair> pairs;

  // e0 + sum beta_i / a_i
  mpq_class euler_number() const;

  // Pair order is presentational; equality compares the multiset.
  friend bool operator==(const SeifertData& lhs, const SeifertData& rhs);
};

// Seifert invariants of the Brieskorn sphere with e = -1/(pqr).
// Requires p, q, r >= 2 and pairwise coprime (InvalidInput otherwise).
SeifertData brieskorn_seifert(std::int64_t p, std::int64_t q, std::int64_t r);

// Hirzebruch-Jung expansion a/b = c_1 - 1/(c_2 - ... - 1/c_k), all c_i >= 2.
// Requires a > b > 0 coprime.
std::vector<std::int64_t> neg_continued_fraction(std::int64_t a, std::int64_t b);
mpq_class evaluate_neg_continued_fraction(std::span<const std::int64_t> coefficients);

// Star-shaped plumbing: center "x" with weight e0; arm i has vertices
// "a<i>_1", "a<i>_2", ... weighted -c_1, -c_2, ..., with "a<i>_1" next to the center.
// Requires e < 0.
PlumbingGraph canonical_plumbing(const SeifertData& s);

// Inverse of canonical_plumbing. The center is the unique vertex of degree >= 3,
// or `center` when given, or else vertex 0. Rejects non-stars, arms with a weight
// >= -1 and a center weight >= 0.
SeifertData plumbing_to_seifert(const PlumbingGraph& g, const std::optional<std::string>& center = std::nullopt);

// Isomorphism of weighted graphs up to relabeling. Trees are compared through a
// canonical rooted encoding at the tree center; other graphs by backtracking.
bool plumbings_isomorphic(const PlumbingGraph& g1, const PlumbingGraph& g2);

}  // namespace plumbkit
