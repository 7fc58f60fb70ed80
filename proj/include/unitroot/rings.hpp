#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "unitroot/errors.hpp"

namespace unitroot {

bool is_prime_u64(uint64_t n);

// Exact integers (GMP).
struct ZRing {
  using Value = mpz_class;

  static Value zero() { return mpz_class(0); }
  static Value one() { return mpz_class(1); }
  static bool is_zero(const Value& v) { return sgn(v) == 0; }
  static void add_assign(Value& a, const Value& b) { a += b; }
  // a += b*c without a temporary
  static void addmul(Value& a, const Value& b, const Value& c) {
    mpz_addmul(a.get_mpz_t(), b.get_mpz_t(), c.get_mpz_t());
  }
  static Value mul(const Value& a, const Value& b) { return a * b; }
  static Value neg(const Value& a) { return -a; }
  static std::string to_string(const Value& v) { return v.get_str(); }

  bool operator==(const ZRing&) const = default;
};

// Exact rationals (GMP), always canonicalized.
struct QRing {
  using Value = mpq_class;

  static Value zero() { return mpq_class(0); }
  static Value one() { return mpq_class(1); }
  static bool is_zero(const Value& v) { return sgn(v) == 0; }
  static void add_assign(Value& a, const Value& b) { a += b; }
  static void addmul(Value& a, const Value& b, const Value& c) { a += b * c; }
  static Value mul(const Value& a, const Value& b) { return a * b; }
  static Value neg(const Value& a) { return -a; }
  static std::string to_string(const Value& v) { return v.get_str(); }

  bool operator==(const QRing&) const = default;
};

// Z/p^M with canonical residues in [0, p^M).  p must be prime, M >= 1 and
// p^M < 2^62 so products fit in 128-bit intermediates.
class ZmodRing {
 public:
  using Value = uint64_t;

  ZmodRing(uint64_t p, int precision) : p_(p), m_(precision) {
    if (!is_prime_u64(p)) throw UnsupportedError("modulus base is not prime");
    if (precision < 1) throw UnsupportedError("precision must be >= 1");
    pm_ = 1;
    for (int i = 0; i < precision; ++i) {
      if (pm_ > (uint64_t{1} << 62) / p)
        throw UnsupportedError("p^M exceeds the 2^62 working range");
      pm_ *= p;
    }
  }

  uint64_t p() const { return p_; }
  int precision() const { return m_; }
  uint64_t modulus() const { return pm_; }

  Value zero() const { return 0; }
  Value one() const { return pm_ == 1 ? 0 : 1; }
  bool is_zero(Value v) const { return v == 0; }

  Value add(Value a, Value b) const {
    uint64_t s = a + b;
    if (s >= pm_) s -= pm_;
    return s;
  }
  void add_assign(Value& a, Value b) const { a = add(a, b); }
  Value sub(Value a, Value b) const { return a >= b ? a - b : a + pm_ - b; }
  Value neg(Value a) const { return a == 0 ? 0 : pm_ - a; }
  Value mul(Value a, Value b) const {
    return static_cast<uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % pm_);
  }
  void addmul(Value& a, Value b, Value c) const { a = add(a, mul(b, c)); }

  Value pow(Value base, uint64_t n) const {
    Value r = one(), b = base % pm_;
    while (n) {
      if (n & 1) r = mul(r, b);
      b = mul(b, b);
      n >>= 1;
    }
    return r;
  }

  // canonical residue of an arbitrary integer
  Value reduce(const mpz_class& x) const {
    mpz_class r = x % mpz_class(to_mpz(pm_));
    if (sgn(r) < 0) r += to_mpz(pm_);
    return mpz_get_ui(r.get_mpz_t());
  }

  Value reduce_i64(int64_t x) const {
    int64_t r = x % static_cast<int64_t>(pm_);
    if (r < 0) r += static_cast<int64_t>(pm_);
    return static_cast<uint64_t>(r);
  }

  bool is_unit(Value v) const { return v % p_ != 0; }

  // inverse of a unit; nullopt when p divides v
  std::optional<Value> inv(Value v) const {
    if (!is_unit(v % pm_)) return std::nullopt;
    // extended Euclid on (v, p^M)
    int64_t t = 0, newt = 1;
    int64_t r = static_cast<int64_t>(pm_), newr = static_cast<int64_t>(v % pm_);
    while (newr != 0) {
      int64_t q = r / newr;
      t -= q * newt;
      std::swap(t, newt);
      r -= q * newr;
      std::swap(r, newr);
    }
    if (t < 0) t += static_cast<int64_t>(pm_);
    return static_cast<uint64_t>(t);
  }

  static std::string to_string(Value v) { return std::to_string(v); }

  bool operator==(const ZmodRing&) const = default;

 private:
  static mpz_class to_mpz(uint64_t v) {
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return z;
  }

  uint64_t p_;
  int m_;
  uint64_t pm_;
};

}  // namespace unitroot
