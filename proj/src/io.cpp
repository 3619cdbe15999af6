#include "plumbkit/io.hpp"

#include "plumbkit/error.hpp"

namespace plumbkit::io {

json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw InvalidInput("not a decimal integer: " + j.dump());
    return v;
  }
  throw InvalidInput("expected an integer, got " + j.dump());
}

json matrix_to_json(const SymmetricIntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.dim(); ++k) row.push_back(integer_to_json(m(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

SymmetricIntMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("matrix must be an array of rows");
  std::vector<std::vector<Integer>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw InvalidInput("matrix row must be an array");
    std::vector<Integer> r;
    for (const auto& v : row) r.push_back(integer_from_json(v));
    rows.push_back(std::move(r));
  }
  return SymmetricIntMatrix::from_rows(rows);
}

json bits_to_json(const BitVector& bits) {
  json out = json::array();
  for (auto b : bits) out.push_back(static_cast<int>(b));
  return out;
}

json plumbing_to_json(const PlumbingGraph& g) {
  json vertices = json::array();
  for (const auto& v : g.vertices()) vertices.push_back({{"id", v.id}, {"weight", v.weight}});
  json edges = json::array();
  for (const auto& [u, v] : g.edge_ids()) edges.push_back(json::array({u, v}));
  return {{"vertices", vertices}, {"edges", edges}};
}

PlumbingGraph plumbing_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    throw InvalidInput("plumbing JSON needs a \"vertices\" array");
  std::vector<Vertex> vertices;
  for (const auto& v : j["vertices"]) {
    if (!v.is_object() || !v.contains("id") || !v["id"].is_string() || !v.contains("weight") ||
        !v["weight"].is_number_integer())
      throw InvalidInput("vertex needs a string \"id\" and an integer \"weight\": " + v.dump());
    vertices.push_back({v["id"].get<std::string>(), v["weight"].get<std::int64_t>()});
  }
  std::vector<EdgeIds> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw InvalidInput("\"edges\" must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        throw InvalidInput("edge must be a pair of vertex ids: " + e.dump());
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  return PlumbingGraph(std::move(vertices), edges);
}

json framed_link_to_json(const FramedLinkMatrix& l) {
  json components = json::array();
  for (const auto& c : l.components())
    components.push_back({{"id", c.id}, {"tag", c.tag == Tag::Gray ? "gray" : "black"}});
  return {{"components", components}, {"matrix", matrix_to_json(l.matrix())}};
}

FramedLinkMatrix framed_link_from_json(const json& j) {
  if (!j.is_object() || !j.contains("components") || !j["components"].is_array() || !j.contains("matrix"))
    throw InvalidInput("framed link JSON needs \"components\" and \"matrix\"");
  std::vector<Component> components;
  for (const auto& c : j["components"]) {
    if (!c.is_object() || !c.contains("id") || !c["id"].is_string())
      throw InvalidInput("component needs a string \"id\": " + c.dump());
    Tag tag = Tag::Gray;
    if (c.contains("tag")) {
      const auto t = c["tag"].is_string() ? c["tag"].get<std::string>() : std::string();
      if (t == "black")
        tag = Tag::Black;
      else if (t != "gray")
        throw InvalidInput("component tag must be \"gray\" or \"black\": " + c.dump());
    }
    components.push_back({c["id"].get<std::string>(), tag});
  }
  return FramedLinkMatrix(std::move(components), matrix_from_json(j["matrix"]));
}

json seifert_to_json(const SeifertData& s) {
  json pairs = json::array();
  for (const auto& [a, beta] : s.pairs) pairs.push_back(json::array({a, beta}));
  return {{"e0", s.e0}, {"pairs", pairs}, {"euler_number", s.euler_number().get_str()}};
}

json report_to_json(const InvariantReport& r) {
  json out{{"det", integer_to_json(r.det)},
           {"inertia", json::array({r.inertia.positive, r.inertia.zero, r.inertia.negative})},
           {"signature", r.inertia.signature()}};
  out["wu"] = r.wu ? bits_to_json(*r.wu) : json(nullptr);
  out["wu_square"] = r.wu_square ? integer_to_json(*r.wu_square) : json(nullptr);
  out["mu_bar"] = r.mu_bar ? integer_to_json(*r.mu_bar) : json(nullptr);
  out["rokhlin"] = r.rokhlin ? json(*r.rokhlin) : json(nullptr);
  return out;
}

json trace_to_json(const std::vector<TraceStep>& trace) {
  json out = json::array();
  for (const auto& step : trace)
    out.push_back({{"move", step.move}, {"component", step.component}, {"matrix", matrix_to_json(step.matrix)}});
  return out;
}

json search_hit_to_json(const SearchHit& hit) {
  json links = json::array();
  for (const auto& v : hit.links) links.push_back(integer_to_json(v));
  return {{"links", links}, {"trace", trace_to_json(hit.reduction.trace)}};
}

json verification_to_json(const FamilyVerification& v) {
  json checks = json::array();
  for (const auto& c : v.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"family", family_name(v.id.tag)},
          {"n", v.id.n},
          {"brieskorn", json::array({v.params[0], v.params[1], v.params[2]})},
          {"report", report_to_json(v.report)},
          {"checks", checks},
          {"passed", v.passed()}};
}

json iteration_to_json(const IterationVerification& v) {
  json runs = json::array();
  for (const auto& run : v.runs) {
    json links = json::array();
    for (const auto& x : run.links) links.push_back(integer_to_json(x));
    json steps = json::array();
    for (const auto& s : run.steps)
      steps.push_back({{"n", s.n},
                       {"gray_matches", s.gray_matches},
                       {"reduces_to_zero_surgery", s.reduces_to_zero_surgery},
                       {"det", integer_to_json(s.det)},
                       {"signature", s.signature}});
    runs.push_back({{"links", links},
                    {"target", run.target},
                    {"survived", run.survived},
                    {"failure", run.failure},
                    {"steps", steps}});
  }
  return {{"family", family_name(v.tag)}, {"steps", v.steps},     {"max_link", v.max_link},
          {"max_support", v.max_support}, {"search_hits", v.search_hits}, {"runs", runs},
          {"passed", v.passed()}};
}

}  // namespace plumbkit::io
