#include "charp/characters.hpp"

#include <algorithm>
#include <set>

#include "charp/errors.hpp"

namespace charp {

std::vector<std::string> character_sanity_diagnostics(const RootDatum& rd, const Vec& lambda,
                                                      const GroupRingElement& ch) {
  std::vector<std::string> out;
  for (const auto& [mu, c] : ch.terms()) {
    if (c.sign() < 0) {
      out.push_back("formula out of validity range: negative coefficient " + c.to_string() +
                    " at " + GroupRingElement::monomial(mu).to_string());
      break;
    }
  }
  if (ch.coefficient(lambda) != Integer(1)) {
    out.push_back("formula out of validity range: coefficient at the highest weight is " +
                  ch.coefficient(lambda).to_string() + ", expected 1");
  }
  (void)rd;
  return out;
}

Engine::Engine(CartanType type, Int p, EngineOptions options)
    : rd_(type), p_(p), options_(options), affine_(rd_, p, options.max_len), kl_(affine_, options.descent_rule) {
  validate_characteristic(p);
}

const WeylGroup& Engine::weyl() {
  if (!weyl_) weyl_.emplace(rd_, options_.weyl_bound);
  return *weyl_;
}

int Engine::digit_count(const Vec& lambda) const {
  return static_cast<int>(p_adic_digits(rd_, lambda, p_).size());
}

Vec Engine::digit_head(const Vec& lambda, Int k) const {
  auto digits = p_adic_digits(rd_, lambda, p_);
  Vec head = Vec::Zero(rd_.rank());
  Int scale = 1;
  for (Int j = 0; j < k && j < static_cast<Int>(digits.size()); ++j) {
    for (int i = 0; i < rd_.rank(); ++i) head[i] = chk_add(head[i], chk_mul(scale, digits[static_cast<std::size_t>(j)][i]));
    scale = chk_mul(scale, p_);
  }
  return head;
}

Vec Engine::digit_tail(const Vec& lambda, Int k) const {
  auto digits = p_adic_digits(rd_, lambda, p_);
  Vec tail = Vec::Zero(rd_.rank());
  Int scale = 1;
  for (Int j = k; j < static_cast<Int>(digits.size()); ++j) {
    if (j < 0) continue;
    for (int i = 0; i < rd_.rank(); ++i) tail[i] = chk_add(tail[i], chk_mul(scale, digits[static_cast<std::size_t>(j)][i]));
    scale = chk_mul(scale, p_);
  }
  return tail;
}

GroupRingElement Engine::divide_exact(const GroupRingElement& numerator, const GroupRingElement& denominator,
                                      Int height_floor) {
  // Leading-term elimination in the (height, lex) order.  The denominator's
  // leading coefficient is +1 at e^rho, so no coefficient division is ever
  // needed; the quotient's leading heights strictly decrease, which bounds
  // the loop.
  using Ordered = std::map<Vec, Integer, HeightLexLess>;
  Ordered rem{HeightLexLess{&rd_}};
  for (const auto& [mu, c] : numerator.terms()) rem.emplace(mu, c);
  // terms() is lex-sorted; recover the (height, lex) leading term of the
  // denominator explicitly.
  Vec den_lead;
  {
    HeightLexLess less{&rd_};
    for (const auto& [nu, c] : denominator.terms()) {
      if (den_lead.size() == 0 || less(den_lead, nu)) den_lead = nu;
    }
  }
  const Integer den_lead_coeff = denominator.coefficient(den_lead);
  if (den_lead_coeff != Integer(1)) throw ConsistencyError("division expects a monic leading denominator term");

  GroupRingElement quotient;
  while (!rem.empty()) {
    auto lead = std::prev(rem.end());
    const Vec mu = lead->first;
    const Integer c = lead->second;
    Vec shift = mu - den_lead;
    if (rd_.height(shift) < height_floor) {
      throw ConsistencyError("alternating-sum division does not terminate: nonzero remainder");
    }
    quotient.add_term(shift, c);
    for (const auto& [nu, d] : denominator.terms()) {
      Vec target(shift.size());
      for (Eigen::Index i = 0; i < shift.size(); ++i) target[i] = chk_add(shift[i], nu[i]);
      auto [it, inserted] = rem.emplace(target, -(c * d));
      if (!inserted) {
        it->second -= c * d;
        if (it->second.is_zero()) rem.erase(it);
      } else if (it->second.is_zero()) {
        rem.erase(it);
      }
    }
  }
  return quotient;
}

const GroupRingElement& Engine::weyl_character(const Vec& lambda) {
  if (!is_dominant(rd_, lambda)) throw NotDominant("Weyl character needs a dominant weight");
  auto it = e0_memo_.find(lambda);
  if (it != e0_memo_.end()) return it->second;

  const WeylGroup& w = weyl();
  GroupRingElement numerator, denominator;
  const Vec num_seed = lambda + rd_.rho();
  for (const auto& el : w.elements()) {
    numerator.add_term(el.matrix * num_seed, Integer(el.sign()));
    denominator.add_term(el.matrix * rd_.rho(), Integer(el.sign()));
  }
  GroupRingElement quotient = divide_exact(numerator, denominator, -rd_.height(num_seed));
  return e0_memo_.emplace(lambda, std::move(quotient)).first->second;
}

GroupRingElement Engine::freudenthal_character(const Vec& lambda) {
  if (!is_dominant(rd_, lambda)) throw NotDominant("Freudenthal character needs a dominant weight");
  const int n = rd_.rank();

  // Dominant weights mu <= lambda; by saturation these are exactly the
  // dominant weights of V(lambda).
  std::vector<Vec> dominants;
  {
    Vec bound(n);
    for (int i = 0; i < n; ++i) {
      Int num = 0;
      for (int j = 0; j < n; ++j) num = chk_add(num, chk_mul(rd_.cartan_adjugate()(i, j), lambda[j]));
      bound[i] = num / rd_.cartan_det();
    }
    Vec c = Vec::Zero(n);
    for (;;) {
      Vec mu = lambda - rd_.cartan() * c;
      if (is_dominant(rd_, mu)) dominants.push_back(mu);
      int i = 0;
      while (i < n && c[i] == bound[i]) {
        c[i] = 0;
        ++i;
      }
      if (i == n) break;
      ++c[i];
    }
  }
  std::sort(dominants.begin(), dominants.end(), HeightLexLess{&rd_});
  std::reverse(dominants.begin(), dominants.end());  // descending height
  std::set<Vec, VecLexLess> weight_set(dominants.begin(), dominants.end());

  const Vec rho = rd_.rho();
  const Int norm_top = rd_.form(lambda + rho, lambda + rho);

  std::map<Vec, Integer, VecLexLess> mult;
  mult.emplace(lambda, Integer(1));
  for (const auto& mu : dominants) {
    if (mu == lambda) continue;
    Integer acc(0);
    for (const auto& coroot : rd_.positive_coroots()) {
      const Vec& root = coroot.paired_root;
      for (Int k = 1;; ++k) {
        Vec x(n);
        for (int i = 0; i < n; ++i) x[i] = chk_add(mu[i], chk_mul(k, root[i]));
        Vec rep = to_dominant(rd_, x).dominant;
        if (weight_set.find(rep) == weight_set.end()) break;
        acc += mult.at(rep) * Integer(rd_.form(x, root));
      }
    }
    const Int denom = chk_sub(norm_top, rd_.form(mu + rho, mu + rho));
    if (denom <= 0) throw ConsistencyError("Freudenthal denominator is not positive");
    mult.emplace(mu, (acc * Integer(2)).div_exact(Integer(denom)));
  }

  GroupRingElement out;
  const WeylGroup& w = weyl();
  for (const auto& [mu, m] : mult) {
    if (m.is_zero()) continue;
    for (const auto& img : w.orbit(mu)) out.add_term(img, m);
  }
  return out;
}

Integer Engine::weyl_dimension(const Vec& lambda) {
  if (!is_dominant(rd_, lambda)) throw NotDominant("dimension formula needs a dominant weight");
  Integer num(1), den(1);
  const Vec top = lambda + rd_.rho();
  for (const auto& coroot : rd_.positive_coroots()) {
    num *= Integer(pairing(coroot, top));
    den *= Integer(pairing(coroot, rd_.rho()));
  }
  return num.div_exact(den);
}

const std::vector<Vec>& Engine::linked_weights(const Vec& lambda) {
  auto it = linked_memo_.find(lambda);
  if (it != linked_memo_.end()) return it->second;
  return linked_memo_.emplace(lambda, linked_dominant_weights(rd_, p_, lambda)).first->second;
}

Integer Engine::p_coeff(const Vec& mu, const Vec& lambda) {
  if (!is_dominant(rd_, mu) || !is_dominant(rd_, lambda)) {
    throw NotDominant("p-coefficients are indexed by dominant weights");
  }
  PairKey key{mu, lambda};
  auto it = p_memo_.find(key);
  if (it != p_memo_.end()) return it->second;

  Integer value(0);
  // The support condition p != 0 => mu <= lambda (and same linkage class)
  // lets the fiber scan be skipped for unrelated pairs.
  if (dominance_leq(rd_, mu, lambda) &&
      domain_point(rd_, p_, mu) == domain_point(rd_, p_, lambda)) {
    AffineElement w = affine_.min_length_to_domain(lambda);
    const Vec delta = act(rd_, w.map.inverse(), lambda);
    auto wid = affine_.find(w.map);
    for (const auto& y : affine_.fiber_elements(mu, delta, w.length)) {
      auto yid = affine_.find(y.map);
      Integer term = kl_.polynomial(*yid, *wid).at_one();
      if ((y.length + w.length) % 2 != 0) term = -term;
      value += term;
    }
  }
  return p_memo_.emplace(std::move(key), std::move(value)).first->second;
}

CoeffMatrix Engine::p_matrix(const Vec& lambda) {
  if (!is_dominant(rd_, lambda)) throw NotDominant("p-matrix needs a dominant weight");
  const auto& weights = linked_weights(lambda);
  const std::size_t n = weights.size();
  CoeffMatrix m{CoeffMatrix::Kind::P, rd_.type(), p_, weights, {}};
  m.entries.assign(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.entries[i][j] = p_coeff(weights[i], weights[j]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (m.entries[i][i] != Integer(1)) throw ConsistencyError("p-matrix diagonal entry is not 1");
    for (std::size_t j = 0; j < i; ++j) {
      if (!m.entries[i][j].is_zero()) throw ConsistencyError("p-matrix is not upper triangular");
    }
  }
  return m;
}

CoeffMatrix Engine::q_matrix(const Vec& lambda) {
  if (!is_dominant(rd_, lambda)) throw NotDominant("q-matrix needs a dominant weight");
  auto it = q_memo_.find(lambda);
  if (it != q_memo_.end()) return it->second;

  CoeffMatrix pm = p_matrix(lambda);
  const std::size_t n = pm.size();
  CoeffMatrix qm{CoeffMatrix::Kind::Q, rd_.type(), p_, pm.weights, {}};
  qm.entries.assign(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t j = 0; j < n; ++j) {
    qm.entries[j][j] = Integer(1);
    for (std::size_t i = j; i-- > 0;) {
      Integer acc(0);
      for (std::size_t k = i + 1; k <= j; ++k) acc += pm.entries[i][k] * qm.entries[k][j];
      qm.entries[i][j] = -acc;
    }
  }
  // The defining relation sum_nu p_{mu,nu} q_{nu,lambda} = delta, checked
  // entry by entry.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Integer acc(0);
      for (std::size_t k = 0; k < n; ++k) acc += pm.entries[i][k] * qm.entries[k][j];
      if (acc != Integer(i == j ? 1 : 0)) throw ConsistencyError("p-matrix times q-matrix is not the identity");
    }
  }
  return q_memo_.emplace(lambda, std::move(qm)).first->second;
}

Integer Engine::q_coeff(const Vec& mu, const Vec& lambda) {
  if (!dominance_leq(rd_, mu, lambda)) return Integer(0);
  CoeffMatrix qm = q_matrix(lambda);
  for (std::size_t i = 0; i < qm.size(); ++i) {
    if (qm.weights[i] == mu) return qm.entries[i][qm.size() - 1];
  }
  return Integer(0);
}

const GroupRingElement& Engine::e_k(const Vec& lambda, Int k) {
  if (!is_dominant(rd_, lambda)) throw NotDominant("E^k needs a dominant weight");
  if (k < 0) throw Error("E^k needs k >= 0");
  if (k == 0) return weyl_character(lambda);
  std::pair<Vec, Int> key{lambda, k};
  auto it = ek_memo_.find(key);
  if (it != ek_memo_.end()) return it->second;

  const Vec tail = digit_tail(lambda, k - 1);
  const Vec head = digit_head(lambda, k - 1);
  Int scale = 1;
  for (Int j = 0; j < k - 1; ++j) scale = chk_mul(scale, p_);

  GroupRingElement sum;
  for (const auto& mu : linked_weights(tail)) {
    Integer c = p_coeff(mu, tail);
    if (c.is_zero()) continue;
    Vec arg(rd_.rank());
    for (int i = 0; i < rd_.rank(); ++i) arg[i] = chk_add(head[i], chk_mul(scale, mu[i]));
    sum += e_k(arg, k - 1).scaled(c);
  }
  return ek_memo_.emplace(std::move(key), std::move(sum)).first->second;
}

const GroupRingElement& Engine::e_infinity(const Vec& lambda) {
  const GroupRingElement& stable = e_k(lambda, digit_count(lambda));
  if (options_.crosscheck_factorization) {
    auto digits = p_adic_digits(rd_, lambda, p_);
    GroupRingElement product = GroupRingElement::unit(rd_.rank());
    for (std::size_t h = 0; h < digits.size(); ++h) {
      product = product * twist(e_k(digits[h], 1), p_, static_cast<Int>(h));
    }
    if (product != stable) {
      throw ConsistencyError("stabilized E^k disagrees with the twisted product: " +
                             GroupRingElement::first_difference(stable, product));
    }
  }
  return stable;
}

CharacterResult Engine::irreducible_character(const Vec& lambda) {
  if (!is_dominant(rd_, lambda)) throw NotDominant("irreducible character needs a dominant weight");
  CharacterResult result;
  if (p_ < rd_.coxeter_number()) {
    result.diagnostics.push_back("p = " + std::to_string(p_) + " is below the Coxeter number h = " +
                                 std::to_string(rd_.coxeter_number()) +
                                 "; the character identity is proved only for large p");
  }
  result.character = e_infinity(lambda);
  auto sanity = character_sanity_diagnostics(rd_, lambda, result.character);
  result.diagnostics.insert(result.diagnostics.end(), sanity.begin(), sanity.end());
  return result;
}

GroupRingElement sl2_weyl_character(Int m) {
  if (m < 0) throw NotDominant("sl2 character needs m >= 0");
  GroupRingElement out;
  for (Int j = -m; j <= m; j += 2) out.add_term(vec_of({j}), Integer(1));
  return out;
}

GroupRingElement sl2_oracle(Int m, Int p) {
  if (m < 0) throw NotDominant("sl2 oracle needs m >= 0");
  if (p < 2) throw InvalidCharacteristic("p must be at least 2");
  GroupRingElement out = GroupRingElement::unit(1);
  Int rest = m;
  Int h = 0;
  while (rest != 0) {
    out = out * twist(sl2_weyl_character(rest % p), p, h);
    rest /= p;
    ++h;
  }
  return out;
}

}  // namespace charp
