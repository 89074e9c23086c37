#include "charp/verify.hpp"

#include <functional>

#include "charp/errors.hpp"

namespace charp {

IdentityId parse_identity(const std::string& name) {
  if (name == "4b") return IdentityId::I4b;
  if (name == "4c") return IdentityId::I4c;
  if (name == "4d") return IdentityId::I4d;
  if (name == "5stab") return IdentityId::I5stab;
  if (name == "5c") return IdentityId::I5c;
  if (name == "5d") return IdentityId::I5d;
  if (name == "6a") return IdentityId::I6a;
  if (name == "6b") return IdentityId::I6b;
  if (name == "6c") return IdentityId::I6c;
  if (name == "8a") return IdentityId::I8a;
  throw UnknownIdentity("unknown identity '" + name +
                        "' (expected one of 4b 4c 4d 5stab 5c 5d 6a 6b 6c 8a)");
}

std::string identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::I4b: return "4b";
    case IdentityId::I4c: return "4c";
    case IdentityId::I4d: return "4d";
    case IdentityId::I5stab: return "5stab";
    case IdentityId::I5c: return "5c";
    case IdentityId::I5d: return "5d";
    case IdentityId::I6a: return "6a";
    case IdentityId::I6b: return "6b";
    case IdentityId::I6c: return "6c";
    case IdentityId::I8a: return "8a";
  }
  return "?";
}

std::vector<IdentityId> all_identities() {
  return {IdentityId::I4b, IdentityId::I4c, IdentityId::I4d, IdentityId::I5stab, IdentityId::I5c,
          IdentityId::I5d, IdentityId::I6a, IdentityId::I6b, IdentityId::I6c, IdentityId::I8a};
}

std::vector<Vec> weight_box(const RootDatum& rd, Int max_coord) {
  if (max_coord < 0) throw Error("weight box bound must be nonnegative");
  std::vector<Vec> out;
  Vec c = Vec::Zero(rd.rank());
  for (;;) {
    out.push_back(c);
    int i = 0;
    while (i < rd.rank() && c[i] == max_coord) {
      c[i] = 0;
      ++i;
    }
    if (i == rd.rank()) break;
    ++c[i];
  }
  std::sort(out.begin(), out.end(), HeightLexLess{&rd});
  return out;
}

namespace {

std::string weight_str(const Vec& v) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + "]";
}

struct Checker {
  Engine& engine;
  VerifyReport& report;
  bool conditional;  // identity only holds for p not too small

  void equal(const std::string& description, const GroupRingElement& lhs, const GroupRingElement& rhs) {
    VerifyCase c{description, CaseStatus::Pass, ""};
    if (lhs != rhs) {
      bool outside = conditional && engine.p() < engine.datum().coxeter_number();
      c.status = outside ? CaseStatus::OutsideValidity : CaseStatus::Fail;
      c.detail = GroupRingElement::first_difference(lhs, rhs);
    }
    push(std::move(c));
  }

  void push(VerifyCase c) {
    switch (c.status) {
      case CaseStatus::Pass: ++report.passed; break;
      case CaseStatus::Fail: ++report.failed; break;
      case CaseStatus::OutsideValidity: ++report.outside; break;
    }
    report.cases.push_back(std::move(c));
  }

  void bound_hit(const std::string& description, const BoundExceeded& e) {
    push({description, CaseStatus::Fail, std::string("bound exceeded: ") + e.what()});
  }
};

Vec scale_weight(const Vec& v, Int scale) {
  Vec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = chk_mul(v[i], scale);
  return out;
}

Vec add_weights(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out[i] = chk_add(a[i], b[i]);
  return out;
}

Int power(Int base, Int e) {
  Int r = 1;
  for (Int i = 0; i < e; ++i) r = chk_mul(r, base);
  return r;
}

// Digit 0 of a dominant weight (componentwise remainder mod p).
Vec digit0(const Vec& v, Int p) {
  Vec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = v[i] % p;
  return out;
}

// (v - v^0) / p, the digit shift.
Vec digit_shift(const Vec& v, Int p) {
  Vec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = v[i] / p;
  return out;
}

// Right-to-left chain of identity 4(c): factors p_{mu_j, lambda^j + p mu_{j+1}}
// for j < depth-1 and p_{mu_{depth-1}, tail_{depth-1}} at the top, against
// E^0 of the innermost mu_0.
GroupRingElement p_chain_sum(Engine& engine, const Vec& lambda, Int depth) {
  const Int p = engine.p();
  GroupRingElement total;
  std::function<void(Int, const Vec&, const Integer&)> go = [&](Int j, const Vec& next_mu, const Integer& acc) {
    const Vec target = j == depth - 1 ? engine.digit_tail(lambda, depth - 1)
                                      : add_weights(p_adic_digit(engine.datum(), lambda, p, static_cast<int>(j)),
                                                    scale_weight(next_mu, p));
    for (const auto& mu : engine.linked_weights(target)) {
      Integer c = engine.p_coeff(mu, target);
      if (c.is_zero()) continue;
      Integer next_acc = acc * c;
      if (j == 0) {
        total += engine.weyl_character(mu).scaled(next_acc);
      } else {
        go(j - 1, mu, next_acc);
      }
    }
  };
  go(depth - 1, Vec::Zero(engine.datum().rank()), Integer(1));
  return total;
}

// Chain of identity 4(d): factors q_{nu_0,lambda}, q_{nu_m, (nu_{m-1} -
// nu_{m-1}^0)/p}, against E^depth (or E_infinity) of
// sum_{m<=depth-2} p^m nu_m^0 + p^{depth-1} nu_{depth-1}.
GroupRingElement q_chain_sum(Engine& engine, const Vec& lambda, Int depth, bool use_infinity) {
  const Int p = engine.p();
  GroupRingElement total;
  std::function<void(Int, const Vec&, const Vec&, const Integer&)> go =
      [&](Int m, const Vec& source, const Vec& digit_sum, const Integer& acc) {
        for (const auto& nu : engine.linked_weights(source)) {
          Integer c = engine.q_coeff(nu, source);
          if (c.is_zero()) continue;
          Integer next_acc = acc * c;
          if (m == depth - 1) {
            Vec index = add_weights(digit_sum, scale_weight(nu, power(p, m)));
            const GroupRingElement& e = use_infinity ? engine.e_infinity(index) : engine.e_k(index, depth);
            total += e.scaled(next_acc);
          } else {
            Vec next_sum = add_weights(digit_sum, scale_weight(digit0(nu, p), power(p, m)));
            go(m + 1, digit_shift(nu, p), next_sum, next_acc);
          }
        }
      };
  go(0, lambda, Vec::Zero(engine.datum().rank()), Integer(1));
  return total;
}

// Twisted product of 6(b)/6(c): E^1 factors for digits below k, then an E^0
// tail factor at level k (absent for the E_infinity form).
GroupRingElement twisted_product(Engine& engine, const Vec& lambda, Int k, bool with_tail) {
  const Int p = engine.p();
  GroupRingElement out = GroupRingElement::unit(engine.datum().rank());
  for (Int h = 0; h < k; ++h) {
    Vec digit = p_adic_digit(engine.datum(), lambda, p, static_cast<int>(h));
    out = out * twist(engine.e_k(digit, 1), p, h);
  }
  if (with_tail) out = out * twist(engine.weyl_character(engine.digit_tail(lambda, k)), p, k);
  return out;
}

}  // namespace

VerifyReport verify(Engine& engine, IdentityId id, const VerifySample& sample) {
  VerifyReport report;
  report.id = id;
  const Int p = engine.p();
  const bool conditional = id == IdentityId::I6a || id == IdentityId::I6b || id == IdentityId::I6c;
  Checker check{engine, report, conditional};

  std::vector<Int> ks = sample.ks;
  if (ks.empty()) {
    switch (id) {
      case IdentityId::I4b: ks = {0, 1, 2}; break;
      case IdentityId::I4c:
      case IdentityId::I4d:
      case IdentityId::I6b: ks = {1, 2, 3}; break;
      default: ks = {0}; break;
    }
  }

  for (const auto& lambda : sample.lambdas) {
    const std::string lstr = "lambda=" + weight_str(lambda);
    try {
      switch (id) {
        case IdentityId::I4b: {
          for (Int k : ks) {
            const std::string desc = lstr + " k=" + std::to_string(k);
            const GroupRingElement& lhs = engine.e_k(lambda, k);
            const Vec tail = engine.digit_tail(lambda, k);
            const Vec head = engine.digit_head(lambda, k);
            const Int scale = power(p, k);
            GroupRingElement rhs;
            for (const auto& mu : engine.linked_weights(tail)) {
              Integer c = engine.q_coeff(mu, tail);
              if (c.is_zero()) continue;
              rhs += engine.e_k(add_weights(head, scale_weight(mu, scale)), k + 1).scaled(c);
            }
            check.equal(desc, lhs, rhs);
          }
          break;
        }
        case IdentityId::I4c: {
          for (Int k : ks) {
            if (k < 1) continue;
            check.equal(lstr + " k=" + std::to_string(k), engine.e_k(lambda, k), p_chain_sum(engine, lambda, k));
          }
          break;
        }
        case IdentityId::I4d: {
          for (Int k : ks) {
            if (k < 1) continue;
            check.equal(lstr + " k=" + std::to_string(k), engine.e_k(lambda, 0),
                        q_chain_sum(engine, lambda, k, false));
          }
          break;
        }
        case IdentityId::I5stab: {
          const Int n = engine.digit_count(lambda);
          check.equal(lstr + " E^" + std::to_string(n) + "=E^" + std::to_string(n + 1), engine.e_k(lambda, n),
                      engine.e_k(lambda, n + 1));
          check.equal(lstr + " E^" + std::to_string(n + 1) + "=E^" + std::to_string(n + 2),
                      engine.e_k(lambda, n + 1), engine.e_k(lambda, n + 2));
          break;
        }
        case IdentityId::I5c: {
          const Int depth = engine.digit_count(lambda) + 2;
          check.equal(lstr + " depth=" + std::to_string(depth), engine.e_infinity(lambda),
                      p_chain_sum(engine, lambda, depth));
          break;
        }
        case IdentityId::I5d: {
          const Int depth = engine.digit_count(lambda) + 2;
          check.equal(lstr + " depth=" + std::to_string(depth), engine.e_k(lambda, 0),
                      q_chain_sum(engine, lambda, depth, true));
          break;
        }
        case IdentityId::I6a: {
          const Vec d0 = p_adic_digit(engine.datum(), lambda, p, 0);
          GroupRingElement rhs = engine.e_k(d0, 1) * twist(engine.weyl_character(engine.digit_tail(lambda, 1)), p, 1);
          check.equal(lstr, engine.e_k(lambda, 1), rhs);
          break;
        }
        case IdentityId::I6b: {
          for (Int k : ks) {
            if (k < 1) continue;
            check.equal(lstr + " k=" + std::to_string(k), engine.e_k(lambda, k),
                        twisted_product(engine, lambda, k, true));
          }
          break;
        }
        case IdentityId::I6c: {
          check.equal(lstr, engine.e_infinity(lambda),
                      twisted_product(engine, lambda, engine.digit_count(lambda), false));
          break;
        }
        case IdentityId::I8a: {
          CoeffMatrix qm = engine.q_matrix(lambda);
          VerifyCase c{lstr, CaseStatus::Pass, ""};
          for (std::size_t i = 0; i < qm.size() && c.status == CaseStatus::Pass; ++i) {
            for (std::size_t j = 0; j < qm.size(); ++j) {
              if (qm.at(i, j).sign() < 0) {
                c.status = CaseStatus::Fail;
                c.detail = "q_{" + weight_str(qm.weights[i]) + "," + weight_str(qm.weights[j]) +
                           "} = " + qm.at(i, j).to_string();
                break;
              }
            }
          }
          check.push(std::move(c));
          break;
        }
      }
    } catch (const BoundExceeded& e) {
      check.bound_hit(lstr, e);
    }
  }
  return report;
}

}  // namespace charp
