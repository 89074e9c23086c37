#ifndef CHARP_KL_HPP
#define CHARP_KL_HPP

#include <filesystem>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "charp/affine.hpp"
#include "charp/integer.hpp"

namespace charp {

// Integer polynomial in q, coefficients by ascending degree, no trailing
// zeros.  Nonzero KL polynomials have constant term 1.
class KLPolynomial {
 public:
  KLPolynomial() = default;
  explicit KLPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
  static KLPolynomial one() { return KLPolynomial({Integer(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  Int degree() const { return static_cast<Int>(coeffs_.size()) - 1; }
  Integer coeff(Int d) const {
    if (d < 0 || d >= static_cast<Int>(coeffs_.size())) return Integer(0);
    return coeffs_[static_cast<std::size_t>(d)];
  }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  Integer at_one() const;

  // this += scale * q^shift * other
  void add_scaled(const KLPolynomial& other, const Integer& scale, Int shift);

  bool operator==(const KLPolynomial& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const KLPolynomial& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  std::vector<Integer> coeffs_;
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
};

// Word-keyed persistent store, independent of p.  File format (bit-exact):
//   klcache 1 <affine-type>
//   <y-word>|<w-word>|<c0>,<c1>,...
// with words as comma-separated generator indices (identity = empty string),
// LF line endings, entries sorted by (y-word, w-word).
struct KLCache {
  using Word = std::vector<int>;
  std::string type_key;  // e.g. "A~2"
  std::map<std::pair<Word, Word>, std::vector<Integer>> entries;

  static KLCache load(const std::filesystem::path& path);
  void store(const std::filesystem::path& path) const;  // write temp, rename

  static std::string word_to_string(const Word& w);
  static Word word_from_string(const std::string& s);
};

enum class DescentRule { SmallestIndex, LargestIndex };

// Kazhdan-Lusztig polynomials P_{y,w} for the affine Coxeter system of the
// table, by induction on l(w) through a left descent s of w:
//   P_{y,w} = P_{sy,sw} + q P_{y,sw}
//             - sum over z with sz < z, y <= z < sw of
//               mu(z,sw) q^{(l(w)-l(z))/2} P_{y,z},
// with P_{y,w} = P_{sy,w} when sy > y.  The table must cover l(w).
class KLComputer {
 public:
  explicit KLComputer(AffineTable& table, DescentRule rule = DescentRule::SmallestIndex)
      : table_(&table), rule_(rule) {}

  AffineTable& table() { return *table_; }

  const KLPolynomial& polynomial(int y, int w);
  KLPolynomial polynomial(const AffineElement& y, const AffineElement& w);

  // Coefficient of q^{(l(w)-l(z)-1)/2} in P_{z,w}; zero when the length gap
  // is even or z is not below w.
  Integer mu(int z, int w);

  // All pairs computed so far, for invariant audits.
  const std::unordered_map<std::uint64_t, KLPolynomial>& computed() const { return memo_; }

  // Seed the memo from a cache (skipping words beyond the table bound);
  // throws CacheTypeError when the cache belongs to a different type.
  void absorb(const KLCache& cache);
  // Merge every computed pair into the cache, keyed by lex-min words.
  void export_into(KLCache& cache) const;

 private:
  AffineTable* table_;
  DescentRule rule_;
  std::unordered_map<std::uint64_t, KLPolynomial> memo_;
  KLPolynomial zero_;

  int descent_of(int w) const;
  static std::uint64_t pack(int y, int w) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(y)) << 32) | static_cast<std::uint32_t>(w);
  }
};

}  // namespace charp

#endif
