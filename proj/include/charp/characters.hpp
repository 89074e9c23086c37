#ifndef CHARP_CHARACTERS_HPP
#define CHARP_CHARACTERS_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "charp/affine.hpp"
#include "charp/group_ring.hpp"
#include "charp/kl.hpp"
#include "charp/weyl.hpp"

namespace charp {

// Square integer matrix of p- or q-coefficients over one linkage class,
// weights ascending in (height, lex) order, so the matrix is
// upper unitriangular.
struct CoeffMatrix {
  enum class Kind { P, Q };
  Kind kind;
  CartanType type;
  Int p;
  std::vector<Vec> weights;
  std::vector<std::vector<Integer>> entries;

  std::size_t size() const { return weights.size(); }
  const Integer& at(std::size_t row, std::size_t col) const { return entries[row][col]; }
};

struct EngineOptions {
  Int max_len = 24;          // affine table length bound
  Int weyl_bound = 1000000;  // finite Weyl enumeration bound
  DescentRule descent_rule = DescentRule::SmallestIndex;
  bool crosscheck_factorization = false;  // recompute E_infinity as a twisted product
};

struct CharacterResult {
  GroupRingElement character;
  std::vector<std::string> diagnostics;
};

// Sanity conditions of an irreducible character: nonnegative coefficients
// and leading coefficient 1 at lambda.  Returns human-readable violations.
std::vector<std::string> character_sanity_diagnostics(const RootDatum& rd, const Vec& lambda,
                                                      const GroupRingElement& ch);

// Computation session for one (Cartan type, p): owns the root datum, the
// Weyl and affine tables, the KL computer and all memo tables.  Operations
// are pure functions of (lambda, k); the memos only cache them.
class Engine {
 public:
  Engine(CartanType type, Int p, EngineOptions options = {});

  const RootDatum& datum() const { return rd_; }
  Int p() const { return p_; }
  const EngineOptions& options() const { return options_; }
  AffineTable& affine_table() { return affine_; }
  KLComputer& kl() { return kl_; }
  const WeylGroup& weyl();

  // p-adic digit helpers: head(lambda, k) = sum_{j<k} p^j lambda^j,
  // tail(lambda, k) = sum_{j>=k} p^{j-k} lambda^j.
  int digit_count(const Vec& lambda) const;
  Vec digit_head(const Vec& lambda, Int k) const;
  Vec digit_tail(const Vec& lambda, Int k) const;

  // E^0 by exact division of Weyl alternating sums; throws ConsistencyError
  // on a nonzero remainder.
  const GroupRingElement& weyl_character(const Vec& lambda);

  // Independent oracle for E^0 via Freudenthal's multiplicity recursion.
  GroupRingElement freudenthal_character(const Vec& lambda);

  // Classical dimension formula, product over positive coroots.
  Integer weyl_dimension(const Vec& lambda);

  Integer p_coeff(const Vec& mu, const Vec& lambda);
  CoeffMatrix p_matrix(const Vec& lambda);
  // Exact inverse of the unitriangular p-matrix; p * q = identity is
  // asserted at construction time.
  CoeffMatrix q_matrix(const Vec& lambda);
  Integer q_coeff(const Vec& mu, const Vec& lambda);

  const GroupRingElement& e_k(const Vec& lambda, Int k);
  const GroupRingElement& e_infinity(const Vec& lambda);

  CharacterResult irreducible_character(const Vec& lambda);

  const std::vector<Vec>& linked_weights(const Vec& lambda);

  // Memo snapshots for invariant audits.
  using PairKey = std::pair<Vec, Vec>;
  struct PairKeyLess {
    bool operator()(const PairKey& a, const PairKey& b) const {
      VecLexLess less;
      if (less(a.first, b.first)) return true;
      if (less(b.first, a.first)) return false;
      return less(a.second, b.second);
    }
  };
  struct EkKeyLess {
    bool operator()(const std::pair<Vec, Int>& a, const std::pair<Vec, Int>& b) const {
      VecLexLess less;
      if (less(a.first, b.first)) return true;
      if (less(b.first, a.first)) return false;
      return a.second < b.second;
    }
  };
  const std::map<PairKey, Integer, PairKeyLess>& computed_p_coeffs() const { return p_memo_; }
  const std::map<Vec, CoeffMatrix, VecLexLess>& computed_q_matrices() const { return q_memo_; }
  const std::map<std::pair<Vec, Int>, GroupRingElement, EkKeyLess>& computed_e_k() const { return ek_memo_; }

 private:
  RootDatum rd_;
  Int p_;
  EngineOptions options_;
  AffineTable affine_;
  KLComputer kl_;
  std::optional<WeylGroup> weyl_;

  std::map<Vec, GroupRingElement, VecLexLess> e0_memo_;
  std::map<Vec, std::vector<Vec>, VecLexLess> linked_memo_;
  std::map<PairKey, Integer, PairKeyLess> p_memo_;
  std::map<Vec, CoeffMatrix, VecLexLess> q_memo_;
  std::map<std::pair<Vec, Int>, GroupRingElement, EkKeyLess> ek_memo_;

  GroupRingElement divide_exact(const GroupRingElement& numerator, const GroupRingElement& denominator,
                                Int height_floor);
};

// Independent closed form for type A1: the character of V(m) is
// e^m + e^{m-2} + ... + e^{-m}, restricted irreducibles are Weyl modules,
// and the full character is the twisted product over base-p digits.
GroupRingElement sl2_weyl_character(Int m);
GroupRingElement sl2_oracle(Int m, Int p);

}  // namespace charp

#endif
