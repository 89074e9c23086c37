#include "charp/affine.hpp"

#include <algorithm>

#include "charp/errors.hpp"

namespace charp {

AffineMap AffineMap::inverse() const {
  Int det = det_exact(linear);
  if (det != 1 && det != -1) throw ConsistencyError("affine linear part is not unimodular");
  Mat inv = adjugate_exact(linear);
  if (det == -1) inv = -inv;
  return {inv, -(inv * translation).eval()};
}

Vec act(const RootDatum& rd, const AffineMap& x, const Vec& lambda) {
  rd.check_rank(lambda);
  return x.apply_shifted(lambda + rd.rho()) - rd.rho();
}

Vec act(const RootDatum& rd, const AffineElement& x, const Vec& lambda) { return act(rd, x.map, lambda); }

AffineMap affine_generator_map(const RootDatum& rd, Int p, int g) {
  if (p < 2) throw InvalidCharacteristic("p must be at least 2");
  const int n = rd.rank();
  if (g < 0 || g > n) throw Error("affine generator index out of range: " + std::to_string(g));
  if (g == 0) {
    // nu -> nu - (<highest coroot, nu> + p) alpha_0, reflection across the
    // hyperplane <highest coroot, nu> = -p.
    const Vec& a0 = rd.highest_coroot().coords;
    const Vec& alpha0 = rd.highest_coroot().paired_root;
    Mat linear = Mat::Identity(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) linear(i, j) -= alpha0[i] * a0[j];
    }
    return {linear, (-p * alpha0).eval()};
  }
  return {weyl_generator_matrix(rd, g - 1), Vec::Zero(n)};
}

std::vector<AffineElement> affine_generators(const RootDatum& rd, Int p) {
  std::vector<AffineElement> gens;
  for (int g = 0; g <= rd.rank(); ++g) {
    gens.push_back({affine_generator_map(rd, p, g), 1, {g}});
  }
  return gens;
}

bool in_domain(const RootDatum& rd, Int p, const Vec& lambda) {
  rd.check_rank(lambda);
  const Vec nu = lambda + rd.rho();
  if ((nu.array() > 0).any()) return false;
  return pairing(rd.highest_coroot(), nu) >= -p;
}

Vec domain_point(const RootDatum& rd, Int p, const Vec& lambda, std::vector<int>* word_out) {
  rd.check_rank(lambda);
  if (word_out) word_out->clear();
  std::vector<AffineMap> gens;
  for (int g = 0; g <= rd.rank(); ++g) gens.push_back(affine_generator_map(rd, p, g));
  Vec nu = lambda + rd.rho();
  for (long long guard = 0;; ++guard) {
    if (guard > 100000000LL) throw ConsistencyError("domain reduction did not terminate");
    int g = -1;
    if (pairing(rd.highest_coroot(), nu) < -p) {
      g = 0;
    } else {
      for (int i = 0; i < rd.rank(); ++i) {
        if (nu[i] > 0) {
          g = i + 1;
          break;
        }
      }
    }
    if (g < 0) break;
    nu = gens[static_cast<std::size_t>(g)].apply_shifted(nu);
    if (word_out) word_out->push_back(g);
  }
  return nu - rd.rho();
}

std::vector<Vec> linked_dominant_weights(const RootDatum& rd, Int p, const Vec& lambda) {
  if (!is_dominant(rd, lambda)) throw NotDominant("linked weights need a dominant weight");
  const int n = rd.rank();
  const Vec delta = domain_point(rd, p, lambda);

  // mu <= lambda dominant means lambda - mu = C c with integral c in the box
  // 0 <= c <= C^{-1} lambda (the inverse Cartan matrix has nonnegative
  // entries for finite type).
  Vec bound(n);
  for (int i = 0; i < n; ++i) {
    Int num = 0;
    for (int j = 0; j < n; ++j) num = chk_add(num, chk_mul(rd.cartan_adjugate()(i, j), lambda[j]));
    bound[i] = num / rd.cartan_det();
  }

  std::vector<Vec> linked;
  Vec c = Vec::Zero(n);
  for (;;) {
    Vec mu = lambda - rd.cartan() * c;
    if (is_dominant(rd, mu) && domain_point(rd, p, mu) == delta) linked.push_back(mu);
    int i = 0;
    while (i < n && c[i] == bound[i]) {
      c[i] = 0;
      ++i;
    }
    if (i == n) break;
    ++c[i];
  }
  std::sort(linked.begin(), linked.end(), HeightLexLess{&rd});
  return linked;
}

std::size_t AffineTable::map_hash(const AffineMap& m) {
  std::size_t h = 0x243f6a8885a308d3ull;
  for (Eigen::Index i = 0; i < m.linear.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.linear.cols(); ++j) {
      h ^= static_cast<std::size_t>(m.linear(i, j)) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
  }
  for (Eigen::Index i = 0; i < m.translation.size(); ++i) {
    h ^= static_cast<std::size_t>(m.translation[i]) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

AffineTable::AffineTable(const RootDatum& rd, Int p, Int max_len) : rd_(&rd), p_(p), max_len_(max_len) {
  if (p < 2) throw InvalidCharacteristic("p must be at least 2");
  if (max_len_ < 0) throw Error("affine table length bound must be nonnegative");
  for (int g = 0; g <= rd.rank(); ++g) gens_.push_back(affine_generator_map(rd, p, g));
  insert(AffineMap::identity(rd.rank()), 0);
  entries_[0].word.clear();
  layer_first_ = {0, 1};
  built_len_ = 0;
}

int AffineTable::insert(const AffineMap& m, Int length) {
  int id = static_cast<int>(entries_.size());
  entries_.push_back({m, length, {}});
  index_[map_hash(m)].push_back(id);
  return id;
}

std::optional<int> AffineTable::find(const AffineMap& m) const {
  auto it = index_.find(map_hash(m));
  if (it == index_.end()) return std::nullopt;
  for (int id : it->second) {
    if (entries_[static_cast<std::size_t>(id)].map == m) return id;
  }
  return std::nullopt;
}

void AffineTable::ensure_length(Int len) {
  if (len <= built_len_) return;
  if (len > max_len_) {
    throw BoundExceeded("affine table needs elements of length " + std::to_string(len) +
                            ", above the configured bound " + std::to_string(max_len_) +
                            " (raise --max-len)",
                        max_len_, "--max-len");
  }
  while (built_len_ < len) {
    const int first = layer_first_[static_cast<std::size_t>(built_len_)];
    const int last = layer_first_[static_cast<std::size_t>(built_len_) + 1];
    for (int id = first; id < last; ++id) {
      for (int g = 0; g <= rd_->rank(); ++g) {
        AffineMap next = compose(gens_[static_cast<std::size_t>(g)], entries_[static_cast<std::size_t>(id)].map);
        if (!find(next)) insert(next, built_len_ + 1);
      }
    }
    layer_first_.push_back(static_cast<int>(entries_.size()));
    ++built_len_;
    // Lex-min reduced word: smallest left descent, then the word of the
    // shortened element.
    for (int id = layer_first_[static_cast<std::size_t>(built_len_)];
         id < layer_first_[static_cast<std::size_t>(built_len_) + 1]; ++id) {
      int g = smallest_left_descent(id);
      int down = left_mult(g, id);
      auto& word = entries_[static_cast<std::size_t>(id)].word;
      word = entries_[static_cast<std::size_t>(down)].word;
      word.insert(word.begin(), g);
    }
  }
}

int AffineTable::generator_id(int g) {
  ensure_length(1);
  return *find(gens_.at(static_cast<std::size_t>(g)));
}

int AffineTable::require(const AffineMap& map, Int length_hint) {
  ensure_length(std::min(length_hint, max_len_));
  auto id = find(map);
  if (!id) {
    throw BoundExceeded("affine element lies beyond the table length bound " + std::to_string(max_len_) +
                            " (raise --max-len)",
                        max_len_, "--max-len");
  }
  return *id;
}

std::pair<int, int> AffineTable::length_range(Int len) const {
  if (len < 0 || len > built_len_) throw Error("length " + std::to_string(len) + " not built");
  return {layer_first_[static_cast<std::size_t>(len)], layer_first_[static_cast<std::size_t>(len) + 1]};
}

std::size_t AffineTable::count_of_length(Int len) const {
  auto [a, b] = length_range(len);
  return static_cast<std::size_t>(b - a);
}

int AffineTable::left_mult(int g, int id) const {
  AffineMap next = compose(gens_.at(static_cast<std::size_t>(g)), element(id).map);
  auto found = find(next);
  if (!found) throw ConsistencyError("left product left the built table");
  return *found;
}

bool AffineTable::left_descent(int g, int id) const {
  AffineMap next = compose(gens_.at(static_cast<std::size_t>(g)), element(id).map);
  auto found = find(next);
  return found && element(*found).length < element(id).length;
}

bool AffineTable::right_descent(int g, int id) const {
  AffineMap next = compose(element(id).map, gens_.at(static_cast<std::size_t>(g)));
  auto found = find(next);
  return found && element(*found).length < element(id).length;
}

int AffineTable::smallest_left_descent(int id) const {
  for (int g = 0; g <= rd_->rank(); ++g) {
    if (left_descent(g, id)) return g;
  }
  throw ConsistencyError("element of positive length has no left descent");
}

AffineElement AffineTable::compose_elements(const AffineElement& a, const AffineElement& b) {
  AffineMap m = compose(a.map, b.map);
  return element(require(m, a.length + b.length));
}

AffineElement AffineTable::inverse_element(const AffineElement& a) {
  return element(require(a.map.inverse(), a.length));
}

AffineElement AffineTable::element_of_word(const std::vector<int>& word) {
  AffineMap m = AffineMap::identity(rd_->rank());
  for (int g : word) {
    if (g < 0 || g > rd_->rank()) throw ParseError("word letter out of range: " + std::to_string(g));
    m = compose(m, gens_[static_cast<std::size_t>(g)]);
  }
  return element(require(m, static_cast<Int>(word.size())));
}

bool AffineTable::bruhat_leq(int y, int w) {
  if (y == w) return true;
  const Int ly = element(y).length, lw = element(w).length;
  if (ly >= lw) return false;
  if (ly == 0) return true;
  std::uint64_t key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(y)) << 32) |
                      static_cast<std::uint32_t>(w);
  auto it = bruhat_memo_.find(key);
  if (it != bruhat_memo_.end()) return it->second;
  // Lifting: for s with sw < w, y <= w iff sy <= sw (when sy < y) or
  // y <= sw (when sy > y).
  const int s = smallest_left_descent(w);
  const int sw = left_mult(s, w);
  const int sy = left_mult(s, y);
  bool result = element(sy).length < ly ? bruhat_leq(sy, sw) : bruhat_leq(y, sw);
  bruhat_memo_.emplace(key, result);
  return result;
}

AffineElement AffineTable::min_length_to_domain(const Vec& lambda) {
  std::vector<int> applied;
  domain_point(*rd_, p_, lambda, &applied);
  AffineMap m = AffineMap::identity(rd_->rank());
  for (int g : applied) m = compose(m, gens_[static_cast<std::size_t>(g)]);
  return element(require(m, static_cast<Int>(applied.size())));
}

std::vector<AffineElement> AffineTable::fiber_elements(const Vec& mu, const Vec& delta_point, Int max_length) {
  rd_->check_rank(mu);
  if (!in_domain(*rd_, p_, delta_point)) throw Error("fiber base point is not in the domain");
  ensure_length(max_length);
  std::vector<AffineElement> out;
  const int end = layer_first_[static_cast<std::size_t>(max_length) + 1];
  for (int id = 0; id < end; ++id) {
    if (act(*rd_, entries_[static_cast<std::size_t>(id)].map, delta_point) == mu) {
      out.push_back(entries_[static_cast<std::size_t>(id)]);
    }
  }
  return out;
}

}  // namespace charp
