#include "plumbkit/families.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <thread>

#include "plumbkit/error.hpp"
#include "plumbkit/seifert.hpp"

namespace plumbkit {

std::string family_name(Family tag) { return tag == Family::A ? "A" : "B"; }

PlumbingGraph family_plumbing(FamilyId f) {
  if (f.n < 1) throw InvalidInput("family parameter n must be >= 1");
  const bool a = f.tag == Family::A;
  const std::int64_t n = f.n;
  std::vector<Vertex> vertices{
      {"x", -1}, {"c1", a ? -2 : -3}, {"a1", a ? -4 : -3}, {"am", -n - 1}, {"a2", a ? -3 : -4}, {"b1", a ? -5 : -4},
  };
  std::vector<EdgeIds> edges{{"x", "c1"}, {"x", "a1"}, {"a1", "am"}, {"am", "a2"}, {"x", "b1"}};
  for (int k = 2; k <= f.n; ++k) {
    vertices.push_back({"b" + std::to_string(k), -2});
    edges.emplace_back("b" + std::to_string(k - 1), "b" + std::to_string(k));
  }
  return PlumbingGraph(std::move(vertices), edges);
}

std::array<std::int64_t, 3> brieskorn_params(FamilyId f) {
  const std::int64_t n = f.n;
  std::array<std::int64_t, 3> out = f.tag == Family::A ? std::array<std::int64_t, 3>{2, 4 * n + 1, 12 * n + 5}
                                                         : std::array<std::int64_t, 3>{3, 3 * n + 1, 12 * n + 5};
  if (std::gcd(out[0], out[1]) != 1 || std::gcd(out[0], out[2]) != 1 || std::gcd(out[1], out[2]) != 1)
    throw Error("internal: family parameters are not pairwise coprime");
  return out;
}

bool FamilyVerification::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

FamilyVerification verify_family(FamilyId f) {
  FamilyVerification v;
  v.id = f;
  v.params = brieskorn_params(f);
  const auto g = family_plumbing(f);
  v.report = report(g);

  const auto oracle = canonical_plumbing(brieskorn_seifert(v.params[0], v.params[1], v.params[2]));
  v.checks.push_back({"canonical_plumbing", plumbings_isomorphic(g, oracle),
                      "Seifert oracle for Sigma(" + std::to_string(v.params[0]) + "," + std::to_string(v.params[1]) +
                          "," + std::to_string(v.params[2]) + ")"});

  const Inertia expected{0, 0, static_cast<std::size_t>(5 + f.n)};
  v.checks.push_back({"inertia", v.report.inertia == expected,
                      "signature " + std::to_string(v.report.inertia.signature()) + ", expected " +
                          std::to_string(-5 - f.n)});
  v.checks.push_back({"unimodular", abs(v.report.det) == 1, "det " + v.report.det.get_str()});

  const auto show = [](const std::optional<Integer>& x) { return x ? x->get_str() : std::string("undefined"); };
  if (f.n % 2 == 1) {
    v.checks.push_back({"wu_square", v.report.wu_square == Integer(-13 - f.n),
                        show(v.report.wu_square) + ", expected " + std::to_string(-13 - f.n)});
    v.checks.push_back({"mu_bar", v.report.mu_bar == Integer(8), show(v.report.mu_bar) + ", expected 8"});
    v.checks.push_back({"rokhlin", v.report.rokhlin == 1,
                        (v.report.rokhlin ? std::to_string(*v.report.rokhlin) : "undefined") + ", expected 1"});
  } else {
    v.checks.push_back({"rokhlin_recorded", v.report.rokhlin.has_value(),
                        "observed " + (v.report.rokhlin ? std::to_string(*v.report.rokhlin) : "undefined") +
                            " (mu_bar " + show(v.report.mu_bar) + ")"});
  }
  return v;
}

std::vector<FamilyVerification> verify_sweep(Family tag, int n_max, unsigned threads) {
  if (n_max < 1) throw InvalidInput("n_max must be >= 1");
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  std::vector<FamilyVerification> out(static_cast<std::size_t>(n_max));
  for (int start = 1; start <= n_max; start += static_cast<int>(threads)) {
    std::vector<std::future<FamilyVerification>> batch;
    for (int n = start; n < start + static_cast<int>(threads) && n <= n_max; ++n)
      batch.push_back(std::async(std::launch::async, verify_family, FamilyId{tag, n}));
    for (std::size_t k = 0; k < batch.size(); ++k) out[static_cast<std::size_t>(start - 1) + k] = batch[k].get();
  }
  return out;
}

bool IterationVerification::passed() const {
  return std::any_of(runs.begin(), runs.end(), [](const CandidateRun& r) { return r.survived; });
}

namespace {

CandidateRun run_candidate(Family tag, const FramedLinkMatrix& start, const std::vector<Integer>& links,
                           std::size_t target, int steps) {
  CandidateRun run{links, start.component(target).id, {}, false, ""};
  FramedLinkMatrix diagram = start;
  long signature = inertia(diagram.matrix()).signature();
  try {
    for (int k = 1; k <= steps; ++k) {
      diagram = family_step(diagram, target);
      IterationStep step;
      step.n = 1 + k;
      step.det = determinant(diagram.matrix());
      step.signature = inertia(diagram.matrix()).signature();
      try {
        step.gray_matches = plumbings_isomorphic(gray_plumbing(diagram), family_plumbing({tag, step.n}));
      } catch (const InvalidInput&) {
        step.gray_matches = false;
      }
      try {
        step.reduces_to_zero_surgery = is_zero_surgery_presentation(reduce(diagram).result);
      } catch (const IterationCap&) {
        step.reduces_to_zero_surgery = false;
      }
      const bool ok = step.gray_matches && step.reduces_to_zero_surgery && step.det == 0 &&
                      step.signature == signature - 1;
      signature = step.signature;
      run.steps.push_back(std::move(step));
      if (!ok) {
        run.failure = "step " + std::to_string(k) + " broke an invariant";
        return run;
      }
    }
  } catch (const Error& e) {
    run.failure = e.what();
    return run;
  }
  run.survived = true;
  return run;
}

}  // namespace

IterationVerification verify_iteration(Family tag, int steps, int max_link, int max_support) {
  if (steps < 1) throw InvalidInput("iteration needs at least one step");
  IterationVerification v;
  v.tag = tag;
  v.steps = steps;
  v.max_link = max_link;
  v.max_support = max_support;

  const auto base = family_plumbing({tag, 1});
  const auto hits = surgery_search(base, max_link, max_support);
  v.search_hits = hits.size();

  for (const auto& hit : hits) {
    const auto start = augment(base, hit.links);
    const std::size_t black = start.size() - 1;
    std::vector<std::size_t> options;
    for (std::size_t i : start.indices(Tag::Gray))
      if (start.framing(i) == -2 && start.linking(black, i) == 1) options.push_back(i);
    if (options.empty()) {
      v.runs.push_back({hit.links, "", {}, false, "black curve links no -2 framed gray component once"});
      continue;
    }
    for (std::size_t target : options) v.runs.push_back(run_candidate(tag, start, hit.links, target, steps));
  }
  return v;
}

}  // namespace plumbkit
