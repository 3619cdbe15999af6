#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "plumbkit/kirby.hpp"
#include "plumbkit/plumbing.hpp"

namespace plumbkit {

// A: Sigma(2, 4n+1, 12n+5).  B: Sigma(3, 3n+1, 12n+5).
enum class Family { A, B };

struct FamilyId {
  Family tag = Family::A;
  int n = 1;

  friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

std::string family_name(Family tag);

// Star with 5+n vertices, in this order:
//   x  (center, -1)
//   c1 (short arm: -2 for A, -3 for B)
//   a1, am, a2 (upper chain: -4, -(n+1), -3 for A; -3, -(n+1), -4 for B)
//   b1, b2, ..., bn (lower chain: -5 resp. -4, then n-1 vertices of weight -2)
// Throws InvalidInput for n < 1.
PlumbingGraph family_plumbing(FamilyId f);

std::array<std::int64_t, 3> brieskorn_params(FamilyId f);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct FamilyVerification {
  FamilyId id;
  std::array<std::int64_t, 3> params{};
  InvariantReport report;
  std::vector<Check> checks;

  bool passed() const;
};

// Oracle isomorphism, inertia (0,0,5+n), |det| = 1, and for odd n the Wu square
// -13-n, mu_bar 8 and Rokhlin 1. For even n the Rokhlin value is only recorded.
FamilyVerification verify_family(FamilyId f);

// verify_family for n = 1..n_max; runs concurrently, result ordered by n.
std::vector<FamilyVerification> verify_sweep(Family tag, int n_max, unsigned threads = 0);

struct IterationStep {
  int n = 0;  // family parameter the gray part should now realize
  bool gray_matches = false;
  bool reduces_to_zero_surgery = false;
  Integer det;
  long signature = 0;
};

struct CandidateRun {
  std::vector<Integer> links;  // black curve against family_plumbing(n = 1)
  std::string target;          // gray component whose framing drops each step
  std::vector<IterationStep> steps;
  bool survived = false;
  std::string failure;
};

struct IterationVerification {
  Family tag = Family::A;
  int steps = 0;
  int max_link = 0;
  int max_support = 0;
  std::size_t search_hits = 0;
  std::vector<CandidateRun> runs;

  // False is the NoCandidate outcome: no searched curve propagated through every step.
  bool passed() const;
};

// Searches surgery curves on family_plumbing(tag, 1), then applies family_step
// `steps` times per candidate. The first step targets the unique -2 framed gray
// component the curve links once (each choice is tried if several exist); later
// steps keep hitting that same component, whose framing drops by one each time.
IterationVerification verify_iteration(Family tag, int steps, int max_link = 2, int max_support = 4);

}  // namespace plumbkit
