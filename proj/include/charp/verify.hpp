#ifndef CHARP_VERIFY_HPP
#define CHARP_VERIFY_HPP

#include <string>
#include <vector>

#include "charp/characters.hpp"

namespace charp {

// Machine-checkable identities.  4b/4c/4d and the stabilization checks are
// unconditional: any failure is an implementation bug.  6a/6b/6c hold when p
// is not very small; their failures at p below the Coxeter number are
// reported as outside the validity range instead of as failures.
enum class IdentityId {
  I4b,    // E^k = sum_mu q_{mu,tail_k} E^{k+1}_{head_k + p^k mu}
  I4c,    // closed form: chains of p-coefficients against E^0
  I4d,    // closed form: chains of q-coefficients against E^k
  I5stab, // E^n = E^{n+1} = E^{n+2} with n = digit count
  I5c,    // infinite p-chain form of E_infinity, truncated at depth n+2
  I5d,    // infinite q-chain form of E^0, truncated at depth n+2
  I6a,    // E^1 = E^1_{digit 0} (E^0_{tail})^{(1)}
  I6b,    // E^k as a twisted product with an E^0 tail factor
  I6c,    // E_infinity as the twisted product of restricted E^1 factors
  I8a,    // q_{mu,lambda} >= 0
};

IdentityId parse_identity(const std::string& name);  // "4b", "5stab", ...
std::string identity_name(IdentityId id);
std::vector<IdentityId> all_identities();

enum class CaseStatus { Pass, Fail, OutsideValidity };

struct VerifyCase {
  std::string description;
  CaseStatus status;
  std::string detail;  // first differing term on failure
};

struct VerifyReport {
  IdentityId id;
  std::vector<VerifyCase> cases;

  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t outside = 0;

  // True when no unconditional failure occurred.
  bool ok() const { return failed == 0; }
};

struct VerifySample {
  std::vector<Vec> lambdas;
  std::vector<Int> ks;  // for k-indexed identities; per-identity defaults when empty
};

// All dominant weights with every coordinate <= max_coord.
std::vector<Vec> weight_box(const RootDatum& rd, Int max_coord);

VerifyReport verify(Engine& engine, IdentityId id, const VerifySample& sample);

}  // namespace charp

#endif
