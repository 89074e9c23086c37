#ifndef CHARP_CARTAN_HPP
#define CHARP_CARTAN_HPP

#include <Eigen/Dense>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "charp/integer.hpp"

namespace charp {

// Dense integer types.  Weights live in the fundamental-weight basis, so
// coeff i of a weight is its pairing with the i-th simple coroot.
using Vec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using Mat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

Vec vec_of(std::initializer_list<Int> xs);

// Exact integer determinant (fraction-free Bareiss) and adjugate, so that
// m * adjugate = det * identity without ever leaving the integers.
Int det_exact(Mat m);
Mat adjugate_exact(const Mat& m);

struct VecLexLess {
  bool operator()(const Vec& a, const Vec& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

struct VecHash {
  std::size_t operator()(const Vec& v) const {
    std::size_t h = static_cast<std::size_t>(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      h ^= static_cast<std::size_t>(v[i]) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct VecEq {
  bool operator()(const Vec& a, const Vec& b) const { return a.size() == b.size() && a == b; }
};

// One of the simple series A..G with a rank; invalid pairs are rejected.
struct CartanType {
  char series = 'A';
  int rank = 1;

  CartanType() = default;
  CartanType(char series_, int rank_);

  // "A1", "b2", "G2" (case-insensitive).
  static CartanType parse(std::string_view text);

  std::string to_string() const;
  // Key naming the untwisted affinization, e.g. "A~2"; used by the KL cache.
  std::string affine_key() const;

  Integer weyl_order() const;

  bool operator==(const CartanType& o) const { return series == o.series && rank == o.rank; }
};

// A coroot together with the root whose reflection it induces.  Coordinates
// of `coords` are in the simple-coroot basis, `paired_root` is in the
// fundamental-weight basis.
struct Coroot {
  Vec coords;
  Vec paired_root;
};

// Cartan data for a simple type.  Convention: cartan()(i, j) equals the
// pairing of the i-th simple coroot with the j-th simple root (rows indexed
// by coroots, Bourbaki node numbering), which fixes the transpose ambiguity
// for B/C and G2.
class RootDatum {
 public:
  explicit RootDatum(CartanType type);

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const Mat& cartan() const { return cartan_; }
  const Vec& rho() const { return rho_; }
  const std::vector<Coroot>& simple_coroots() const { return simple_coroots_; }
  const Coroot& highest_coroot() const { return highest_coroot_; }
  Int coxeter_number() const { return coxeter_number_; }

  // j-th simple root in fundamental-weight coordinates (column j of the
  // Cartan matrix).
  Vec simple_root(int j) const { return cartan_.col(j); }

  // The full coroot set, closed under the Weyl group, in a deterministic
  // order.  Size is rank * coxeter_number.
  const std::vector<Coroot>& coroots() const { return coroots_; }
  const std::vector<Coroot>& positive_coroots() const { return positive_coroots_; }

  // Exact linear algebra for the Cartan matrix: adj(C) with det(C) > 0, so
  // C^{-1} = adjugate / det.
  const Mat& cartan_adjugate() const { return adjugate_; }
  Int cartan_det() const { return det_; }

  // Row vector k with k . (simple root) = det(C) > 0; a strictly positive
  // height functional used for dominance-compatible total orders.
  const Vec& height_functional() const { return height_functional_; }
  Int height(const Vec& weight) const;

  // Scaled W-invariant symmetric form on X: form(x, y) = x^T S y with S
  // integral; any positive scaling works for Freudenthal's recursion.
  const Mat& invariant_form() const { return form_; }
  Int form(const Vec& x, const Vec& y) const;

  void check_rank(const Vec& weight) const;

 private:
  CartanType type_;
  Mat cartan_;
  Vec rho_;
  std::vector<Coroot> simple_coroots_;
  std::vector<Coroot> coroots_;
  std::vector<Coroot> positive_coroots_;
  Coroot highest_coroot_;
  Int coxeter_number_ = 0;
  Mat adjugate_;
  Int det_ = 0;
  Vec height_functional_;
  Mat form_;
};

// The pairing <y, lambda>; bilinear, and <coroot_i, lambda> reads off
// coordinate i.
Int pairing(const Coroot& y, const Vec& lambda);

bool is_dominant(const RootDatum& rd, const Vec& lambda);

// (dominant, restricted): restricted means dominant with all coordinates
// <= p - 1.  Requires p >= 2.
std::pair<bool, bool> dominance_flags(const RootDatum& rd, const Vec& lambda, Int p);

// True iff hi - lo is a nonnegative integer combination of simple roots,
// decided by exact integer linear algebra (no floating point).
bool dominance_leq(const RootDatum& rd, const Vec& lo, const Vec& hi);

// Base-p digits of a dominant weight, least significant first; every digit
// is restricted, trailing zero digits are trimmed, and the zero weight has
// no digits.  Defined for any p >= 2.
std::vector<Vec> p_adic_digits(const RootDatum& rd, const Vec& lambda, Int p);

// Digit k of lambda (zero vector beyond the last digit).
Vec p_adic_digit(const RootDatum& rd, const Vec& lambda, Int p, int k);

// Rejects p < 2 and composite p with distinct messages; the theorems are
// about a prime characteristic even though digits make sense for any p >= 2.
void validate_characteristic(Int p);

// Total order compatible with dominance: by height functional, ties broken
// lexicographically.
struct HeightLexLess {
  const RootDatum* rd;
  bool operator()(const Vec& a, const Vec& b) const {
    Int ha = rd->height(a), hb = rd->height(b);
    if (ha != hb) return ha < hb;
    return VecLexLess{}(a, b);
  }
};

}  // namespace charp

#endif
