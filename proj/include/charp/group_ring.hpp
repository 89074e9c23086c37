#ifndef CHARP_GROUP_RING_HPP
#define CHARP_GROUP_RING_HPP

#include <map>
#include <string>

#include "charp/cartan.hpp"
#include "charp/integer.hpp"

namespace charp {

// Element of the group ring Z[X]: a finitely supported map from weights to
// integer coefficients with e^mu e^nu = e^{mu+nu}.  Zero coefficients are
// never stored, so structural equality is ring equality.
class GroupRingElement {
 public:
  using Terms = std::map<Vec, Integer, VecLexLess>;

  GroupRingElement() = default;

  static GroupRingElement unit(int rank) { return monomial(Vec::Zero(rank)); }
  static GroupRingElement monomial(const Vec& mu, Integer coeff = Integer(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }
  Integer coefficient(const Vec& mu) const;

  GroupRingElement& operator+=(const GroupRingElement& rhs);
  GroupRingElement& operator-=(const GroupRingElement& rhs);
  GroupRingElement& operator*=(const GroupRingElement& rhs);
  GroupRingElement operator-() const;

  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);

  GroupRingElement scaled(const Integer& c) const;

  // Image under a weight transform (reflection, twist); collisions
  // accumulate.
  template <typename F>
  GroupRingElement mapped(F&& f) const {
    GroupRingElement out;
    for (const auto& [mu, c] : terms_) out.add_term(f(mu), c);
    return out;
  }

  void add_term(const Vec& mu, const Integer& coeff);

  // Sum of all coefficients (the dimension when the element is a
  // character).
  Integer dimension() const;

  bool operator==(const GroupRingElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const GroupRingElement& o) const { return !(*this == o); }

  // Human-readable rendering like "e[3] + 2*e[0,1]"; deterministic.
  std::string to_string() const;

  // First term where the two elements differ, rendered for diagnostics;
  // empty string when equal.
  static std::string first_difference(const GroupRingElement& a, const GroupRingElement& b);

 private:
  Terms terms_;
};

// The Frobenius-style twist: e^mu -> e^{p^h mu}, coefficients unchanged.
GroupRingElement twist(const GroupRingElement& xi, Int p, Int h);

}  // namespace charp

#endif
