#include "plumbkit/kirby.hpp"

#include <algorithm>
#include <limits>
#include <thread>
#include <unordered_set>

#include "plumbkit/error.hpp"

namespace plumbkit {

FramedLinkMatrix::FramedLinkMatrix(std::vector<Component> components, SymmetricIntMatrix matrix)
    : components_(std::move(components)), matrix_(std::move(matrix)) {
  if (components_.size() != matrix_.dim()) throw InvalidInput("component count does not match matrix dimension");
  std::unordered_set<std::string> ids;
  for (const auto& c : components_)
    if (!ids.insert(c.id).second) throw InvalidInput("duplicate component id '" + c.id + "'");
}

FramedLinkMatrix FramedLinkMatrix::from_plumbing(const PlumbingGraph& g) {
  std::vector<Component> components;
  for (const auto& v : g.vertices()) components.push_back({v.id, Tag::Gray});
  return FramedLinkMatrix(std::move(components), intersection_matrix(g));
}

std::optional<std::size_t> FramedLinkMatrix::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (components_[i].id == id) return i;
  return std::nullopt;
}

std::size_t FramedLinkMatrix::require(const std::string& id) const {
  auto i = index_of(id);
  if (!i) throw InvalidInput("unknown component '" + id + "'");
  return *i;
}

std::vector<std::size_t> FramedLinkMatrix::indices(Tag tag) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (components_[i].tag == tag) out.push_back(i);
  return out;
}

std::string FramedLinkMatrix::fresh_id(const std::string& prefix) const {
  for (std::size_t k = 1;; ++k) {
    std::string id = prefix + std::to_string(k);
    if (!index_of(id)) return id;
  }
}

FramedLinkMatrix augment(const PlumbingGraph& g, std::span<const Integer> links, const Integer& framing,
                         const std::string& id) {
  auto base = FramedLinkMatrix::from_plumbing(g);
  auto components = base.components();
  components.push_back({id, Tag::Black});
  return FramedLinkMatrix(std::move(components), base.matrix().bordered(links, framing));
}

PlumbingGraph gray_plumbing(const FramedLinkMatrix& l) {
  const auto gray = l.indices(Tag::Gray);
  std::vector<Vertex> vertices;
  std::vector<EdgeIds> edges;
  for (std::size_t a = 0; a < gray.size(); ++a) {
    const auto& f = l.framing(gray[a]);
    if (!f.fits_slong_p()) throw InvalidInput("framing out of range for a plumbing weight");
    vertices.push_back({l.component(gray[a]).id, f.get_si()});
    for (std::size_t b = a + 1; b < gray.size(); ++b) {
      const auto& lk = l.linking(gray[a], gray[b]);
      if (lk == 0) continue;
      if (abs(lk) != 1) throw InvalidInput("gray linking number is not 0 or +-1");
      edges.emplace_back(l.component(gray[a]).id, l.component(gray[b]).id);
    }
  }
  PlumbingGraph g(std::move(vertices), edges);
  // Edge signs can only be normalized away on a forest.
  if (!g.is_tree()) throw InvalidInput("gray sublink is not a tree plumbing");
  return g;
}

FramedLinkMatrix blow_down(const FramedLinkMatrix& l, std::size_t j) {
  if (j >= l.size()) throw InvalidInput("component index out of range");
  const Integer& eps = l.framing(j);
  if (abs(eps) != 1) throw FramingNotUnit("component '" + l.component(j).id + "' has framing " + eps.get_str());

  const auto& m = l.matrix();
  SymmetricIntMatrix out(l.size() - 1);
  std::vector<Component> components;
  for (std::size_t i = 0, a = 0; i < l.size(); ++i) {
    if (i == j) continue;
    components.push_back(l.component(i));
    for (std::size_t k = i, b = a; k < l.size(); ++k) {
      if (k == j) continue;
      out.set(a, b, m(i, k) - eps * m(i, j) * m(j, k));
      ++b;
    }
    ++a;
  }
  return FramedLinkMatrix(std::move(components), std::move(out));
}

FramedLinkMatrix blow_up(const FramedLinkMatrix& l, std::span<const Integer> links, int sign, const std::string& id,
                         Tag tag) {
  if (sign != 1 && sign != -1) throw InvalidInput("blow-up sign must be +1 or -1");
  if (links.size() != l.size()) throw InvalidInput("linking vector length must equal component count");
  const Integer eps = -sign;
  const auto& m = l.matrix();
  SymmetricIntMatrix shifted(l.size());
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t k = i; k < l.size(); ++k) shifted.set(i, k, m(i, k) + eps * links[i] * links[k]);

  auto components = l.components();
  components.push_back({id.empty() ? l.fresh_id("e") : id, tag});
  return FramedLinkMatrix(std::move(components), shifted.bordered(links, eps));
}

FramedLinkMatrix unlink_blowup(const FramedLinkMatrix& l, std::size_t i, std::size_t j, const std::string& id,
                               Tag tag) {
  if (i >= l.size() || j >= l.size() || i == j) throw InvalidInput("unlinking needs two distinct components");
  if (l.linking(i, j) < 1)
    throw NotLinked("components '" + l.component(i).id + "' and '" + l.component(j).id + "' have linking " +
                    l.linking(i, j).get_str());
  std::vector<Integer> links(l.size(), Integer(0));
  links[i] = 1;
  links[j] = 1;
  return blow_up(l, links, +1, id, tag);
}

Reduction reduce(const FramedLinkMatrix& l, ReduceOrder order, std::optional<std::size_t> cap) {
  const std::size_t limit = cap.value_or(10 * l.size());
  Reduction r{l, {}};
  for (;;) {
    std::optional<std::size_t> pick;
    for (std::size_t t = 0; t < r.result.size(); ++t) {
      const std::size_t i = order == ReduceOrder::LowestIndexFirst ? t : r.result.size() - 1 - t;
      if (abs(r.result.framing(i)) == 1) {
        pick = i;
        break;
      }
    }
    if (!pick) return r;
    if (r.trace.size() >= limit) throw IterationCap("reduction exceeded " + std::to_string(limit) + " moves");
    const std::string id = r.result.component(*pick).id;
    r.result = blow_down(r.result, *pick);
    r.trace.push_back({"blow_down", id, r.result.matrix()});
  }
}

bool is_zero_surgery_presentation(const FramedLinkMatrix& l) { return l.size() == 1 && l.framing(0) == 0; }

namespace {

std::vector<std::vector<Integer>> enumerate_vectors(std::size_t dim, int max_link, int max_support) {
  std::vector<long> values;
  for (long v = -max_link; v <= max_link; ++v)
    if (v != 0) values.push_back(v);

  std::vector<std::vector<Integer>> out;
  const std::size_t support_cap = std::min<std::size_t>(static_cast<std::size_t>(max_support), dim);
  for (std::size_t s = 1; s <= support_cap; ++s) {
    // Supports in lexicographic order, values as a mixed-radix counter.
    std::vector<std::size_t> support(s);
    for (std::size_t k = 0; k < s; ++k) support[k] = k;
    for (;;) {
      std::vector<std::size_t> digit(s, 0);
      for (;;) {
        std::vector<Integer> v(dim, Integer(0));
        for (std::size_t k = 0; k < s; ++k) v[support[k]] = values[digit[k]];
        out.push_back(std::move(v));
        std::size_t k = 0;
        while (k < s && ++digit[k] == values.size()) digit[k++] = 0;
        if (k == s) break;
      }
      std::size_t k = s;
      while (k > 0 && support[k - 1] == dim - s + k - 1) --k;
      if (k == 0) break;
      ++support[k - 1];
      for (std::size_t t = k; t < s; ++t) support[t] = support[t - 1] + 1;
    }
  }
  return out;
}

std::optional<SearchHit> evaluate_candidate(const PlumbingGraph& g, const std::vector<Integer>& links) {
  const auto augmented = augment(g, links);
  if (determinant(augmented.matrix()) != 0) return std::nullopt;
  if (!cokernel(augmented.matrix()).is_infinite_cyclic()) return std::nullopt;
  try {
    auto reduction = reduce(augmented);
    if (!is_zero_surgery_presentation(reduction.result)) return std::nullopt;
    return SearchHit{links, std::move(reduction)};
  } catch (const IterationCap&) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<SearchHit> surgery_search(const PlumbingGraph& g, int max_link, int max_support, unsigned threads) {
  if (max_link < 1 || max_support < 1) throw InvalidInput("search bounds must be >= 1");
  const auto candidates = enumerate_vectors(g.size(), max_link, max_support);

  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, candidates.size())));

  std::vector<std::vector<SearchHit>> partial(threads);
  auto work = [&](unsigned t) {
    for (std::size_t i = t; i < candidates.size(); i += threads)
      if (auto hit = evaluate_candidate(g, candidates[i])) partial[t].push_back(std::move(*hit));
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }

  std::vector<SearchHit> hits;
  for (auto& p : partial)
    for (auto& h : p) hits.push_back(std::move(h));
  std::sort(hits.begin(), hits.end(), [](const SearchHit& a, const SearchHit& b) { return a.links < b.links; });
  return hits;
}

FramedLinkMatrix family_step(const FramedLinkMatrix& l, std::optional<std::size_t> target) {
  std::optional<std::size_t> black;
  for (std::size_t i : l.indices(Tag::Black)) {
    if (l.framing(i) != -1) continue;
    if (black) throw InvalidInput("more than one -1 framed black component");
    black = i;
  }
  if (!black) throw InvalidInput("no -1 framed black component");

  if (!target) {
    std::vector<std::size_t> options;
    for (std::size_t i : l.indices(Tag::Gray))
      if (l.framing(i) == -2 && l.linking(*black, i) == 1) options.push_back(i);
    if (options.empty()) throw NotLinked("black curve links no -2 framed gray component once");
    if (options.size() > 1) throw AmbiguousTarget("black curve links several -2 framed gray components once");
    target = options.front();
  }
  if (*target >= l.size() || l.component(*target).tag != Tag::Gray)
    throw InvalidInput("family step target must be a gray component");

  auto out = unlink_blowup(l, *black, *target, l.fresh_id("k"), Tag::Black);
  out.retag(*black, Tag::Gray);
  return out;
}

}  // namespace plumbkit
