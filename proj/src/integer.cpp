#include "charp/integer.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <ostream>

namespace charp {

Int chk_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 addition overflow");
  return r;
}

Int chk_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 subtraction overflow");
  return r;
}

Int chk_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 multiplication overflow");
  return r;
}

namespace {

using Limb = std::uint32_t;
using Mag = std::vector<Limb>;
constexpr std::uint64_t kBase = std::uint64_t(1) << 32;

void trim(Mag& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

Mag mag_of_abs_int64(Int v) {
  // Avoids UB on INT64_MIN by negating in the unsigned domain.
  std::uint64_t u = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
  Mag m;
  while (u != 0) {
    m.push_back(static_cast<Limb>(u & 0xffffffffu));
    u >>= 32;
  }
  return m;
}

int mag_cmp(const Mag& a, const Mag& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

Mag mag_add(const Mag& a, const Mag& b) {
  Mag r;
  r.reserve(std::max(a.size(), b.size()) + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    std::uint64_t s = carry;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    r.push_back(static_cast<Limb>(s & 0xffffffffu));
    carry = s >> 32;
  }
  if (carry) r.push_back(static_cast<Limb>(carry));
  return r;
}

// Requires a >= b.
Mag mag_sub(const Mag& a, const Mag& b) {
  Mag r;
  r.reserve(a.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t d = std::int64_t(a[i]) - borrow - (i < b.size() ? std::int64_t(b[i]) : 0);
    if (d < 0) {
      d += std::int64_t(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r.push_back(static_cast<Limb>(d));
  }
  trim(r);
  return r;
}

Mag mag_mul(const Mag& a, const Mag& b) {
  if (a.empty() || b.empty()) return {};
  Mag r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t cur = r[i + j] + std::uint64_t(a[i]) * b[j] + carry;
      r[i + j] = static_cast<Limb>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    std::size_t k = i + b.size();
    while (carry) {
      std::uint64_t cur = r[k] + carry;
      r[k] = static_cast<Limb>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  trim(r);
  return r;
}

Mag mag_shl(const Mag& a, unsigned bits) {
  if (a.empty() || bits == 0) return a;
  Mag r(a.size() + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t cur = std::uint64_t(a[i]) << bits;
    r[i] |= static_cast<Limb>(cur & 0xffffffffu);
    r[i + 1] |= static_cast<Limb>(cur >> 32);
  }
  trim(r);
  return r;
}

Mag mag_shr(const Mag& a, unsigned bits) {
  if (a.empty() || bits == 0) return a;
  Mag r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] >> bits;
    if (i + 1 < a.size()) r[i] |= static_cast<Limb>((std::uint64_t(a[i + 1]) << (32 - bits)) & 0xffffffffu);
  }
  trim(r);
  return r;
}

// Knuth algorithm D.  Returns quotient, stores remainder in rem.
Mag mag_divmod(const Mag& u_in, const Mag& v_in, Mag& rem) {
  if (v_in.empty()) throw Error("division by zero");
  if (mag_cmp(u_in, v_in) < 0) {
    rem = u_in;
    return {};
  }
  if (v_in.size() == 1) {
    Mag q(u_in.size(), 0);
    std::uint64_t r = 0;
    for (std::size_t i = u_in.size(); i-- > 0;) {
      std::uint64_t cur = (r << 32) | u_in[i];
      q[i] = static_cast<Limb>(cur / v_in[0]);
      r = cur % v_in[0];
    }
    trim(q);
    rem.clear();
    if (r) rem.push_back(static_cast<Limb>(r));
    return q;
  }

  unsigned shift = 0;
  for (Limb top = v_in.back(); (top & 0x80000000u) == 0; top <<= 1) ++shift;
  Mag v = mag_shl(v_in, shift);
  Mag u = mag_shl(u_in, shift);
  const std::size_t n = v.size();
  u.resize(std::max(u.size(), u_in.size() + 1) + 1, 0);
  const std::size_t m = u.size() - n - 1;

  Mag q(m + 1, 0);
  for (std::size_t j = m + 1; j-- > 0;) {
    std::uint64_t num = (std::uint64_t(u[j + n]) << 32) | u[j + n - 1];
    std::uint64_t qhat = num / v[n - 1];
    std::uint64_t rhat = num % v[n - 1];
    while (qhat >= kBase ||
           qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
      --qhat;
      rhat += v[n - 1];
      if (rhat >= kBase) break;
    }
    // Multiply-subtract qhat * v from u[j .. j+n].
    std::int64_t borrow = 0;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t prod = qhat * v[i] + carry;
      carry = prod >> 32;
      std::int64_t d = std::int64_t(u[i + j]) - std::int64_t(prod & 0xffffffffu) - borrow;
      if (d < 0) {
        d += std::int64_t(kBase);
        borrow = 1;
      } else {
        borrow = 0;
      }
      u[i + j] = static_cast<Limb>(d);
    }
    std::int64_t d = std::int64_t(u[j + n]) - std::int64_t(carry) - borrow;
    if (d < 0) {
      // qhat was one too large: add v back.
      d += std::int64_t(kBase);
      --qhat;
      std::uint64_t c2 = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t s = std::uint64_t(u[i + j]) + v[i] + c2;
        u[i + j] = static_cast<Limb>(s & 0xffffffffu);
        c2 = s >> 32;
      }
      d += std::int64_t(c2);
      d &= std::int64_t(kBase) - 1;
    }
    u[j + n] = static_cast<Limb>(d);
    q[j] = static_cast<Limb>(qhat);
  }
  trim(q);
  u.resize(n);
  rem = mag_shr(u, shift);
  trim(rem);
  return q;
}

bool mag_fits_int64(int sign, const Mag& m) {
  if (m.size() > 2) return false;
  std::uint64_t v = 0;
  if (!m.empty()) v = m[0];
  if (m.size() == 2) v |= std::uint64_t(m[1]) << 32;
  if (sign >= 0) return v <= std::uint64_t(std::numeric_limits<Int>::max());
  return v <= std::uint64_t(std::numeric_limits<Int>::max()) + 1;
}

Int mag_to_int64(int sign, const Mag& m) {
  std::uint64_t v = 0;
  if (!m.empty()) v = m[0];
  if (m.size() == 2) v |= std::uint64_t(m[1]) << 32;
  return sign >= 0 ? static_cast<Int>(v) : static_cast<Int>(~v + 1);
}

}  // namespace

int Integer::sign() const {
  if (is_small()) return small_ < 0 ? -1 : (small_ > 0 ? 1 : 0);
  return small_ < 0 ? -1 : 1;
}

Int Integer::to_int64() const {
  if (is_small()) return small_;
  throw OverflowError("Integer value does not fit in int64: " + to_string());
}

void Integer::make_big() {
  if (!is_small()) return;
  int s = small_ < 0 ? -1 : 1;
  big_ = mag_of_abs_int64(small_);
  small_ = s;
}

void Integer::normalize() {
  if (is_small()) return;
  trim(big_);
  if (big_.empty()) {
    small_ = 0;
    return;
  }
  int s = small_ < 0 ? -1 : 1;
  if (mag_fits_int64(s, big_)) {
    small_ = mag_to_int64(s, big_);
    big_.clear();
  }
}

Integer Integer::from_magnitude(int sign, Mag mag) {
  Integer r;
  trim(mag);
  if (mag.empty()) return r;
  r.small_ = sign < 0 ? -1 : 1;
  r.big_ = std::move(mag);
  r.normalize();
  return r;
}

int Integer::cmp(const Integer& rhs) const {
  int sa = sign(), sb = rhs.sign();
  if (sa != sb) return sa < sb ? -1 : 1;
  if (is_small() && rhs.is_small()) {
    return small_ < rhs.small_ ? -1 : (small_ > rhs.small_ ? 1 : 0);
  }
  // At least one big operand; compare magnitudes (big always exceeds small).
  Mag ma = is_small() ? mag_of_abs_int64(small_) : big_;
  Mag mb = rhs.is_small() ? mag_of_abs_int64(rhs.small_) : rhs.big_;
  int c = mag_cmp(ma, mb);
  return sa < 0 ? -c : c;
}

Integer Integer::operator-() const {
  if (is_small()) {
    if (small_ == std::numeric_limits<Int>::min()) {
      return from_magnitude(1, mag_of_abs_int64(small_));
    }
    return Integer(-small_);
  }
  Integer r = *this;
  r.small_ = -r.small_;
  r.normalize();
  return r;
}

Integer& Integer::operator+=(const Integer& rhs) {
  if (is_small() && rhs.is_small()) {
    Int r;
    if (!__builtin_add_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  Mag ma = is_small() ? mag_of_abs_int64(small_) : std::move(big_);
  int sa = sign() == 0 ? 1 : sign();
  Mag mb = rhs.is_small() ? mag_of_abs_int64(rhs.small_) : rhs.big_;
  int sb = rhs.sign() == 0 ? 1 : rhs.sign();
  if (sa == sb) {
    *this = from_magnitude(sa, mag_add(ma, mb));
  } else if (mag_cmp(ma, mb) >= 0) {
    *this = from_magnitude(sa, mag_sub(ma, mb));
  } else {
    *this = from_magnitude(sb, mag_sub(mb, ma));
  }
  return *this;
}

Integer& Integer::operator-=(const Integer& rhs) { return *this += -rhs; }

Integer& Integer::operator*=(const Integer& rhs) {
  if (is_small() && rhs.is_small()) {
    Int r;
    if (!__builtin_mul_overflow(small_, rhs.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  int s = sign() * rhs.sign();
  Mag ma = is_small() ? mag_of_abs_int64(small_) : std::move(big_);
  Mag mb = rhs.is_small() ? mag_of_abs_int64(rhs.small_) : rhs.big_;
  *this = from_magnitude(s, mag_mul(ma, mb));
  return *this;
}

Integer Integer::div_exact(const Integer& rhs) const {
  if (rhs.is_zero()) throw Error("division by zero");
  if (is_zero()) return Integer(0);
  Mag ma = is_small() ? mag_of_abs_int64(small_) : big_;
  Mag mb = rhs.is_small() ? mag_of_abs_int64(rhs.small_) : rhs.big_;
  Mag rem;
  Mag q = mag_divmod(ma, mb, rem);
  if (!rem.empty()) {
    throw ConsistencyError("exact division left a remainder: " + to_string() + " / " + rhs.to_string());
  }
  return from_magnitude(sign() * rhs.sign(), std::move(q));
}

std::string Integer::to_string() const {
  if (is_small()) return std::to_string(small_);
  Mag m = big_;
  std::string digits;
  const Mag billion{1000000000u};
  while (!m.empty()) {
    Mag rem;
    m = mag_divmod(m, billion, rem);
    std::uint32_t chunk = rem.empty() ? 0 : rem[0];
    for (int i = 0; i < 9; ++i) {
      digits.push_back(static_cast<char>('0' + chunk % 10));
      chunk /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign() < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Integer Integer::parse(const std::string& text) {
  std::size_t i = 0;
  int s = 1;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    if (text[i] == '-') s = -1;
    ++i;
  }
  if (i == text.size()) throw ParseError("empty integer literal: '" + text + "'");
  Integer r(0);
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("bad integer literal: '" + text + "'");
    }
    r *= Integer(10);
    r += Integer(text[i] - '0');
  }
  return s < 0 ? -r : r;
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

}  // namespace charp
