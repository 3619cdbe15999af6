#pragma once

// Kirby moves on framed links, tracked through the linking matrix only:
// framings on the diagonal, algebraic linking numbers off it.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plumbkit/lattice.hpp"
#include "plumbkit/plumbing.hpp"

namespace plumbkit {

// Gray components carry the plumbing; black ones are auxiliary surgery curves.
enum class Tag { Gray, Black };

struct Component {
  std::string id;
  Tag tag = Tag::Gray;

  friend bool operator==(const Component&, const Component&) = default;
};

class FramedLinkMatrix {
 public:
  FramedLinkMatrix() = default;
  // Throws InvalidInput on duplicate ids or a dimension mismatch.
  FramedLinkMatrix(std::vector<Component> components, SymmetricIntMatrix matrix);

  static FramedLinkMatrix from_plumbing(const PlumbingGraph& g);

  std::size_t size() const { return components_.size(); }
  bool empty() const { return components_.empty(); }
  const std::vector<Component>& components() const { return components_; }
  const Component& component(std::size_t i) const { return components_[i]; }
  const SymmetricIntMatrix& matrix() const { return matrix_; }
  const Integer& framing(std::size_t i) const { return matrix_(i, i); }
  const Integer& linking(std::size_t i, std::size_t j) const { return matrix_(i, j); }

  std::optional<std::size_t> index_of(const std::string& id) const;
  // Like index_of but throws InvalidInput for unknown ids.
  std::size_t require(const std::string& id) const;
  std::vector<std::size_t> indices(Tag tag) const;

  void retag(std::size_t i, Tag tag) { components_[i].tag = tag; }
  // First id of the form "<prefix><k>", k = 1, 2, ..., not already in use.
  std::string fresh_id(const std::string& prefix) const;

  friend bool operator==(const FramedLinkMatrix&, const FramedLinkMatrix&) = default;

 private:
  std::vector<Component> components_;
  SymmetricIntMatrix matrix_;
};

// Gray components plus one black curve with the given linking vector and framing.
FramedLinkMatrix augment(const PlumbingGraph& g, std::span<const Integer> links, const Integer& framing = -1,
                         const std::string& id = "k");

// Reads the gray sublink as a plumbing graph. Linking numbers of +-1 become edges;
// this is only meaningful when the result is a forest, so anything else throws
// InvalidInput (as do framings outside int64 and |linking| > 1).
PlumbingGraph gray_plumbing(const FramedLinkMatrix& l);

// For eps = framing(j) = +-1: drop j, f_i -= eps*l_ij^2, l_ik -= eps*l_ij*l_jk.
// Throws FramingNotUnit otherwise.
FramedLinkMatrix blow_down(const FramedLinkMatrix& l, std::size_t j);

// Appends a component with framing -sign and linking vector `links`, adjusting the
// rest so that blow_down of the new component returns `l`.
FramedLinkMatrix blow_up(const FramedLinkMatrix& l, std::span<const Integer> links, int sign,
                         const std::string& id = "", Tag tag = Tag::Black);

// Blow-up along a -1 curve meeting i and j once each; l_ij, f_i and f_j each drop by 1.
// Throws NotLinked unless l_ij >= 1.
FramedLinkMatrix unlink_blowup(const FramedLinkMatrix& l, std::size_t i, std::size_t j,
                               const std::string& id = "", Tag tag = Tag::Black);

struct TraceStep {
  std::string move;
  std::string component;
  SymmetricIntMatrix matrix;  // after the move
};

struct Reduction {
  FramedLinkMatrix result;
  std::vector<TraceStep> trace;
};

enum class ReduceOrder { LowestIndexFirst, HighestIndexFirst };

// Blows down unit-framed components until none is left. Throws IterationCap after
// `cap` moves (default 10 * size).
Reduction reduce(const FramedLinkMatrix& l, ReduceOrder order = ReduceOrder::LowestIndexFirst,
                 std::optional<std::size_t> cap = std::nullopt);

// A single 0-framed component: the linking-matrix shadow of 0-surgery on a knot.
bool is_zero_surgery_presentation(const FramedLinkMatrix& l);

struct SearchHit {
  std::vector<Integer> links;
  Reduction reduction;
};

// All black -1 curves with entries in [-max_link, max_link] and 1..max_support
// nonzero entries whose augmented diagram has det 0, cokernel Z, and reduces to a
// single 0-framed component. Sorted lexicographically by linking vector.
// `threads` = 0 picks the hardware concurrency.
std::vector<SearchHit> surgery_search(const PlumbingGraph& g, int max_link, int max_support, unsigned threads = 0);

// Unlinking blow-up between the single black -1 curve and `target` (by default the
// unique -2 framed gray component it links once). The old black curve turns gray,
// the new curve is black. Throws NotLinked, AmbiguousTarget or InvalidInput.
FramedLinkMatrix family_step(const FramedLinkMatrix& l, std::optional<std::size_t> target = std::nullopt);

}  // namespace plumbkit
