#ifndef CHARP_INTEGER_HPP
#define CHARP_INTEGER_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "charp/errors.hpp"

namespace charp {

// Machine coordinate type for weights, matrices and lengths.
using Int = std::int64_t;

// Checked machine arithmetic for lattice coordinates; throws OverflowError
// instead of wrapping.
Int chk_add(Int a, Int b);
Int chk_sub(Int a, Int b);
Int chk_mul(Int a, Int b);

// Signed integer with an int64 fast path that promotes to a sign/magnitude
// limb vector when a checked operation overflows.  Values that fit in int64
// are always stored in the small representation, so structural equality is
// semantic equality.
class Integer {
 public:
  Integer() = default;
  Integer(Int v) : small_(v) {}  // NOLINT(google-explicit-constructor)

  static Integer parse(const std::string& text);

  bool is_small() const { return big_.empty(); }
  bool is_zero() const { return big_.empty() && small_ == 0; }
  int sign() const;

  // Throws OverflowError when the value does not fit.
  Int to_int64() const;

  std::string to_string() const;

  Integer operator-() const;
  Integer& operator+=(const Integer& rhs);
  Integer& operator-=(const Integer& rhs);
  Integer& operator*=(const Integer& rhs);

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

  // Exact quotient; throws ConsistencyError if rhs does not divide *this,
  // and Error on division by zero.
  Integer div_exact(const Integer& rhs) const;

  bool operator==(const Integer& rhs) const {
    return small_ == rhs.small_ && big_ == rhs.big_;
  }
  bool operator!=(const Integer& rhs) const { return !(*this == rhs); }
  bool operator<(const Integer& rhs) const { return cmp(rhs) < 0; }
  bool operator<=(const Integer& rhs) const { return cmp(rhs) <= 0; }
  bool operator>(const Integer& rhs) const { return cmp(rhs) > 0; }
  bool operator>=(const Integer& rhs) const { return cmp(rhs) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Integer& v);

 private:
  // Small representation: value is small_, big_ empty.
  // Big representation: value is small_ (as sign, +1/-1) times the little-
  // endian base-2^32 magnitude big_ (no trailing zero limbs).
  Int small_ = 0;
  std::vector<std::uint32_t> big_;

  int cmp(const Integer& rhs) const;
  void make_big();
  void normalize();
  static Integer from_magnitude(int sign, std::vector<std::uint32_t> mag);
};

}  // namespace charp

#endif
