#include "charp/group_ring.hpp"

#include <sstream>

#include "charp/errors.hpp"

namespace charp {

GroupRingElement GroupRingElement::monomial(const Vec& mu, Integer coeff) {
  GroupRingElement e;
  e.add_term(mu, coeff);
  return e;
}

Integer GroupRingElement::coefficient(const Vec& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? Integer(0) : it->second;
}

void GroupRingElement::add_term(const Vec& mu, const Integer& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(mu, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& rhs) {
  for (const auto& [mu, c] : rhs.terms_) add_term(mu, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& rhs) {
  for (const auto& [mu, c] : rhs.terms_) add_term(mu, -c);
  return *this;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement out;
  for (const auto& [mu, c] : terms_) out.terms_.emplace(mu, -c);
  return out;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement out;
  for (const auto& [mu, ca] : a.terms_) {
    for (const auto& [nu, cb] : b.terms_) {
      Vec sum(mu.size());
      for (Eigen::Index i = 0; i < mu.size(); ++i) sum[i] = chk_add(mu[i], nu[i]);
      out.add_term(sum, ca * cb);
    }
  }
  return out;
}

GroupRingElement& GroupRingElement::operator*=(const GroupRingElement& rhs) {
  *this = *this * rhs;
  return *this;
}

GroupRingElement GroupRingElement::scaled(const Integer& c) const {
  GroupRingElement out;
  if (c.is_zero()) return out;
  for (const auto& [mu, coeff] : terms_) out.terms_.emplace(mu, coeff * c);
  return out;
}

Integer GroupRingElement::dimension() const {
  Integer s(0);
  for (const auto& [mu, c] : terms_) s += c;
  return s;
}

namespace {

std::string weight_brackets(const Vec& mu) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < mu.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(mu[i]);
  }
  return s + "]";
}

}  // namespace

std::string GroupRingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mu, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (c != Integer(1)) out += c.to_string() + "*";
    out += "e" + weight_brackets(mu);
  }
  return out;
}

std::string GroupRingElement::first_difference(const GroupRingElement& a, const GroupRingElement& b) {
  auto ita = a.terms_.begin();
  auto itb = b.terms_.begin();
  VecLexLess less;
  while (ita != a.terms_.end() || itb != b.terms_.end()) {
    if (ita == a.terms_.end() || (itb != b.terms_.end() && less(itb->first, ita->first))) {
      return "coefficient at e" + weight_brackets(itb->first) + ": 0 vs " + itb->second.to_string();
    }
    if (itb == b.terms_.end() || less(ita->first, itb->first)) {
      return "coefficient at e" + weight_brackets(ita->first) + ": " + ita->second.to_string() + " vs 0";
    }
    if (ita->second != itb->second) {
      return "coefficient at e" + weight_brackets(ita->first) + ": " + ita->second.to_string() + " vs " +
             itb->second.to_string();
    }
    ++ita;
    ++itb;
  }
  return "";
}

GroupRingElement twist(const GroupRingElement& xi, Int p, Int h) {
  if (p < 2) throw InvalidCharacteristic("p must be at least 2");
  if (h < 0) throw Error("twist exponent must be nonnegative");
  Int factor = 1;
  for (Int i = 0; i < h; ++i) factor = chk_mul(factor, p);
  return xi.mapped([factor](const Vec& mu) {
    Vec out(mu.size());
    for (Eigen::Index i = 0; i < mu.size(); ++i) out[i] = chk_mul(mu[i], factor);
    return out;
  });
}

}  // namespace charp
