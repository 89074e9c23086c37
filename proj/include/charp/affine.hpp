#ifndef CHARP_AFFINE_HPP
#define CHARP_AFFINE_HPP

#include <optional>
#include <unordered_map>
#include <vector>

#include "charp/cartan.hpp"
#include "charp/weyl.hpp"

namespace charp {

// The affine Weyl group acts on X through the rho-shift nu = lambda + rho:
// in shifted coordinates every element is nu -> linear nu + translation with
// translation in p times the root lattice.  Generator indices are 0 for the
// affine reflection and 1..rank for the finite simple reflections, matching
// the word alphabet of the KL cache format.
struct AffineMap {
  Mat linear;
  Vec translation;

  Vec apply_shifted(const Vec& nu) const { return linear * nu + translation; }

  static AffineMap identity(int rank) {
    return {Mat::Identity(rank, rank), Vec::Zero(rank)};
  }

  friend AffineMap compose(const AffineMap& a, const AffineMap& b) {
    return {a.linear * b.linear, a.linear * b.translation + a.translation};
  }

  AffineMap inverse() const;

  bool operator==(const AffineMap& o) const {
    return linear == o.linear && translation == o.translation;
  }
};

struct AffineElement {
  AffineMap map;
  Int length = 0;
  std::vector<int> word;  // lexicographically smallest reduced word
};

// Unshifted action on X.
Vec act(const RootDatum& rd, const AffineMap& x, const Vec& lambda);
Vec act(const RootDatum& rd, const AffineElement& x, const Vec& lambda);

// Shifted-coordinate maps of the generators s'_0, s'_1, ..., s'_rank.
AffineMap affine_generator_map(const RootDatum& rd, Int p, int g);

// The generators as elements (length 1, word {g}).
std::vector<AffineElement> affine_generators(const RootDatum& rd, Int p);

// Membership in the fundamental domain: <coroot_i, lambda+rho> <= 0 for all
// i and <highest coroot, lambda+rho> >= -p.
bool in_domain(const RootDatum& rd, Int p, const Vec& lambda);

// The unique point of the domain in the affine orbit of lambda, found by the
// greedy reflection loop; `word_out`, when given, receives the applied
// generators in application order (so they spell w_lambda left to right).
Vec domain_point(const RootDatum& rd, Int p, const Vec& lambda, std::vector<int>* word_out = nullptr);

// All dominant weights mu <= lambda in the affine orbit of lambda, sorted by
// (height, lex); always contains lambda itself.
std::vector<Vec> linked_dominant_weights(const RootDatum& rd, Int p, const Vec& lambda);

// Breadth-first table of the affine Weyl group up to a length bound.
// Construction assigns ids in nondecreasing length order and is append-only,
// so ids stay valid across ensure_length calls.  Queries are read-only after
// building; growing the table needs exclusive access.
class AffineTable {
 public:
  AffineTable(const RootDatum& rd, Int p, Int max_len = 24);

  const RootDatum& datum() const { return *rd_; }
  Int p() const { return p_; }
  Int max_len() const { return max_len_; }
  void set_max_len(Int max_len) { max_len_ = max_len; }
  Int built_length() const { return built_len_; }

  // Grow the table to cover every element of length <= len.
  void ensure_length(Int len);

  std::size_t size() const { return entries_.size(); }
  const AffineElement& element(int id) const { return entries_[static_cast<std::size_t>(id)]; }
  int identity_id() const { return 0; }
  int generator_id(int g);

  // Id lookup; grows the table to `length_hint` first.  Returns nullopt when
  // the element is not present within the built length.
  std::optional<int> find(const AffineMap& map) const;
  int require(const AffineMap& map, Int length_hint);

  // Ids of all elements of the given length (table must cover it).
  std::pair<int, int> length_range(Int len) const;  // [first, last)
  std::size_t count_of_length(Int len) const;

  // Left multiplication by a generator; the result must lie within the
  // built length.
  int left_mult(int g, int id) const;
  bool left_descent(int g, int id) const;
  int smallest_left_descent(int id) const;
  bool right_descent(int g, int id) const;

  // Group operations with canonical length/word recovered from the table.
  AffineElement compose_elements(const AffineElement& a, const AffineElement& b);
  AffineElement inverse_element(const AffineElement& a);

  // Element of a word (product of generators), canonicalized via the table.
  AffineElement element_of_word(const std::vector<int>& word);

  // Bruhat order via the lifting recursion, memoized; requires the table to
  // cover length l(w).
  bool bruhat_leq(int y, int w);

  // Minimal-length w with w^{-1}(lambda) in the domain.
  AffineElement min_length_to_domain(const Vec& lambda);

  // All y with l(y) <= max_length and y(delta_point) = mu, delta_point in
  // the domain.  Wall points yield several elements; none are deduplicated.
  std::vector<AffineElement> fiber_elements(const Vec& mu, const Vec& delta_point, Int max_length);

 private:
  const RootDatum* rd_;
  Int p_;
  Int max_len_;
  Int built_len_ = -1;
  std::vector<AffineMap> gens_;
  std::vector<AffineElement> entries_;
  std::vector<int> layer_first_;  // layer_first_[l] = first id of length l
  std::unordered_map<std::size_t, std::vector<int>> index_;  // hash -> ids
  mutable std::unordered_map<std::uint64_t, bool> bruhat_memo_;

  static std::size_t map_hash(const AffineMap& m);
  int insert(const AffineMap& m, Int length);
};

}  // namespace charp

#endif
