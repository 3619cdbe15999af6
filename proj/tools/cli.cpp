#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "plumbkit/error.hpp"
#include "plumbkit/families.hpp"
#include "plumbkit/io.hpp"
#include "plumbkit/kirby.hpp"
#include "plumbkit/seifert.hpp"

namespace plumbkit::cli {

namespace {

using io::json;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput("malformed JSON in '" + path + "': " + e.what());
  }
}

std::string show(const std::optional<Integer>& v) { return v ? v->get_str() : "-"; }

void print_sweep_table(std::ostream& out, const std::vector<FamilyVerification>& sweep) {
  out << std::left << std::setw(5) << "n" << std::setw(18) << "brieskorn" << std::setw(6) << "det" << std::setw(6)
      << "sig" << std::setw(8) << "wu^2" << std::setw(8) << "mu_bar" << std::setw(9) << "rokhlin"
      << "status\n";
  for (const auto& v : sweep) {
    std::ostringstream triple;
    triple << "(" << v.params[0] << "," << v.params[1] << "," << v.params[2] << ")";
    out << std::setw(5) << v.id.n << std::setw(18) << triple.str() << std::setw(6) << v.report.det.get_str()
        << std::setw(6) << v.report.inertia.signature() << std::setw(8) << show(v.report.wu_square) << std::setw(8)
        << show(v.report.mu_bar) << std::setw(9)
        << (v.report.rokhlin ? std::to_string(*v.report.rokhlin) : std::string("-"));
    if (v.passed()) {
      out << "ok\n";
    } else {
      out << "FAILED:";
      for (const auto& c : v.checks)
        if (!c.passed) out << " " << c.name << " (" << c.detail << ")";
      out << "\n";
    }
  }
}

void print_iteration(std::ostream& out, const IterationVerification& v) {
  out << "iteration from n=1, " << v.steps << " steps, " << v.search_hits << " searched curves (max_link "
      << v.max_link << ", max_support " << v.max_support << ")\n";
  for (const auto& run : v.runs) {
    out << "  curve [";
    for (std::size_t i = 0; i < run.links.size(); ++i) out << (i ? "," : "") << run.links[i].get_str();
    out << "]";
    if (!run.target.empty()) out << " target " << run.target;
    out << ": " << (run.survived ? "survives all steps" : "dropped, " + run.failure) << "\n";
  }
  out << (v.passed() ? "iteration ok\n" : "iteration FAILED: no candidate survived\n");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Brieskorn sphere invariants, plumbings and linking-matrix Kirby moves", "plumbkit"};
  app.require_subcommand(1);

  // brieskorn
  auto* brieskorn = app.add_subcommand("brieskorn", "Seifert data, canonical plumbing or invariants of Sigma(p,q,r)");
  std::vector<std::int64_t> pqr;
  bool want_plumbing = false, want_invariants = false, brieskorn_json = false, brieskorn_dot = false;
  brieskorn->add_option("pqr", pqr, "p q r")->required()->expected(3);
  auto* plumbing_flag = brieskorn->add_flag("--plumbing", want_plumbing, "emit the canonical plumbing");
  brieskorn->add_flag("--invariants", want_invariants, "emit the invariant report")->excludes(plumbing_flag);
  auto* bjson = brieskorn->add_flag("--json", brieskorn_json, "JSON output (default)");
  brieskorn->add_flag("--dot", brieskorn_dot, "Graphviz output of the canonical plumbing")->excludes(bjson);

  // plumbing invariants
  auto* plumbing = app.add_subcommand("plumbing", "operations on plumbing graph files");
  plumbing->require_subcommand(1);
  auto* plumbing_invariants = plumbing->add_subcommand("invariants", "invariant report of a plumbing JSON file");
  std::string plumbing_file;
  bool plumbing_json = false;
  plumbing_invariants->add_option("file", plumbing_file, "plumbing JSON")->required();
  plumbing_invariants->add_flag("--json", plumbing_json, "JSON output (default)");

  // family verify
  auto* family = app.add_subcommand("family", "the two Brieskorn families");
  family->require_subcommand(1);
  auto* family_verify = family->add_subcommand("verify", "verify invariants for n = 1..N");
  std::string family_tag;
  int n_max = 0;
  int iterate = 0;
  bool family_json = false;
  family_verify->add_option("family", family_tag, "A or B")->required()->check(CLI::IsMember({"A", "B"}));
  family_verify->add_option("--n-max", n_max, "largest n")->required()->check(CLI::Range(1, 100000));
  family_verify->add_option("--iterate", iterate, "also run the blow-up iteration for K steps")
      ->check(CLI::Range(1, 100000));
  family_verify->add_flag("--json", family_json, "JSON output");

  // kirby reduce / search
  auto* kirby = app.add_subcommand("kirby", "linking-matrix Kirby moves");
  kirby->require_subcommand(1);
  auto* kirby_reduce = kirby->add_subcommand("reduce", "blow down unit-framed components until none remain");
  std::string link_file;
  bool want_trace = false, reduce_json = false;
  std::size_t cap = 0;
  kirby_reduce->add_option("file", link_file, "framed link JSON")->required();
  kirby_reduce->add_flag("--trace", want_trace, "include the move trace");
  kirby_reduce->add_option("--cap", cap, "move cap (default 10 * components)");
  kirby_reduce->add_flag("--json", reduce_json, "JSON output (default)");

  auto* kirby_search = kirby->add_subcommand("search", "search black surgery curves reducing to 0-surgery");
  std::string search_file;
  int max_link = 0, max_support = 0;
  unsigned threads = 0;
  bool search_json = false;
  kirby_search->add_option("file", search_file, "plumbing JSON")->required();
  kirby_search->add_option("--max-link", max_link, "largest |linking number|")->required()->check(CLI::Range(1, 64));
  kirby_search->add_option("--max-support", max_support, "largest number of linked components")
      ->required()
      ->check(CLI::Range(1, 64));
  kirby_search->add_option("--threads", threads, "worker threads (0 = all cores)");
  kirby_search->add_flag("--json", search_json, "JSON output (default)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "plumbkit: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (brieskorn->parsed()) {
      const auto s = brieskorn_seifert(pqr[0], pqr[1], pqr[2]);
      const auto g = canonical_plumbing(s);
      if (brieskorn_dot) {
        out << to_dot(g, "Sigma(" + std::to_string(pqr[0]) + "," + std::to_string(pqr[1]) + "," +
                             std::to_string(pqr[2]) + ")");
        return kOk;
      }
      json j{{"brieskorn", pqr}};
      if (want_plumbing) {
        j["plumbing"] = io::plumbing_to_json(g);
      } else {
        j["seifert"] = io::seifert_to_json(s);
        if (want_invariants) j["report"] = io::report_to_json(report(g));
      }
      out << j.dump(2) << "\n";
      return kOk;
    }

    if (plumbing_invariants->parsed()) {
      const auto g = io::plumbing_from_json(read_json_file(plumbing_file));
      out << io::report_to_json(report(g)).dump(2) << "\n";
      return kOk;
    }

    if (family_verify->parsed()) {
      const Family tag = family_tag == "A" ? Family::A : Family::B;
      const auto sweep = verify_sweep(tag, n_max);
      bool ok = std::all_of(sweep.begin(), sweep.end(), [](const FamilyVerification& v) { return v.passed(); });
      std::optional<IterationVerification> iteration;
      if (iterate > 0) {
        iteration = verify_iteration(tag, iterate);
        ok = ok && iteration->passed();
      }
      if (family_json) {
        json j{{"family", family_tag}, {"sweep", json::array()}};
        for (const auto& v : sweep) j["sweep"].push_back(io::verification_to_json(v));
        if (iteration) j["iteration"] = io::iteration_to_json(*iteration);
        j["passed"] = ok;
        out << j.dump(2) << "\n";
      } else {
        out << "family " << family_tag << (tag == Family::A ? ": Sigma(2,4n+1,12n+5)\n" : ": Sigma(3,3n+1,12n+5)\n");
        print_sweep_table(out, sweep);
        if (iteration) print_iteration(out, *iteration);
      }
      return ok ? kOk : kCheckFailed;
    }

    if (kirby_reduce->parsed()) {
      const auto l = io::framed_link_from_json(read_json_file(link_file));
      Reduction r;
      try {
        r = reduce(l, ReduceOrder::LowestIndexFirst, cap > 0 ? std::optional<std::size_t>(cap) : std::nullopt);
      } catch (const IterationCap& e) {
        err << "plumbkit: " << e.what() << "\n";
        return kCheckFailed;
      }
      json j{{"result", io::framed_link_to_json(r.result)},
             {"zero_surgery", is_zero_surgery_presentation(r.result)}};
      if (want_trace) j["trace"] = io::trace_to_json(r.trace);
      out << j.dump(2) << "\n";
      return kOk;
    }

    if (kirby_search->parsed()) {
      const auto g = io::plumbing_from_json(read_json_file(search_file));
      const auto hits = surgery_search(g, max_link, max_support, threads);
      json j{{"max_link", max_link}, {"max_support", max_support}, {"count", hits.size()}, {"hits", json::array()}};
      for (const auto& h : hits) j["hits"].push_back(io::search_hit_to_json(h));
      out << j.dump(2) << "\n";
      return kOk;
    }
  } catch (const InvalidInput& e) {
    err << "plumbkit: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "plumbkit: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace plumbkit::cli
