#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>

#include "unitroot/errors.hpp"

namespace unitroot {

inline constexpr int kMaxDim = 8;

// Exponent vector of a Laurent monomial.  Storage capacity is fixed at
// kMaxDim; the owning object knows the live dimension d.  Unused slots are
// kept at zero so equality and hashing do not depend on d.
struct ExpVec {
  std::array<int32_t, kMaxDim> e{};

  int32_t& operator[](int i) { return e[static_cast<std::size_t>(i)]; }
  int32_t operator[](int i) const { return e[static_cast<std::size_t>(i)]; }
  bool operator==(const ExpVec&) const = default;

  static ExpVec zero() { return {}; }

  static ExpVec of(std::initializer_list<int32_t> xs) {
    if (xs.size() > kMaxDim) throw UnsupportedError("exponent vector too long");
    ExpVec v;
    int i = 0;
    for (int32_t x : xs) v.e[static_cast<std::size_t>(i++)] = x;
    return v;
  }

  int64_t l1() const {
    int64_t s = 0;
    for (int32_t x : e) s += x < 0 ? -static_cast<int64_t>(x) : x;
    return s;
  }

  int64_t coord_sum() const {
    int64_t s = 0;
    for (int32_t x : e) s += x;
    return s;
  }

  bool is_zero() const { return *this == ExpVec{}; }
};

inline ExpVec add(const ExpVec& a, const ExpVec& b) {
  ExpVec r;
  for (int i = 0; i < kMaxDim; ++i) {
    int64_t s = static_cast<int64_t>(a.e[i]) + b.e[i];
    if (s < INT32_MIN || s > INT32_MAX)
      throw UnsupportedError("exponent overflow");
    r.e[i] = static_cast<int32_t>(s);
  }
  return r;
}

inline ExpVec sub(const ExpVec& a, const ExpVec& b) {
  ExpVec r;
  for (int i = 0; i < kMaxDim; ++i) {
    int64_t s = static_cast<int64_t>(a.e[i]) - b.e[i];
    if (s < INT32_MIN || s > INT32_MAX)
      throw UnsupportedError("exponent overflow");
    r.e[i] = static_cast<int32_t>(s);
  }
  return r;
}

inline ExpVec negate(const ExpVec& a) { return sub(ExpVec{}, a); }

inline ExpVec scale(const ExpVec& a, int64_t c) {
  ExpVec r;
  for (int i = 0; i < kMaxDim; ++i) {
    int64_t s = static_cast<int64_t>(a.e[i]) * c;
    if (s < INT32_MIN || s > INT32_MAX)
      throw UnsupportedError("exponent overflow");
    r.e[i] = static_cast<int32_t>(s);
  }
  return r;
}

// Graded lexicographic order: L1 norm first, then entrywise comparison.
inline bool graded_lex_less(const ExpVec& a, const ExpVec& b) {
  int64_t la = a.l1(), lb = b.l1();
  if (la != lb) return la < lb;
  return a.e < b.e;
}

struct ExpVecHash {
  std::size_t operator()(const ExpVec& v) const {
    uint64_t h = 0x9e3779b97f4a7c15ull;
    for (int32_t x : v.e) {
      h ^= static_cast<uint64_t>(static_cast<uint32_t>(x)) + 0x9e3779b97f4a7c15ull +
           (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

inline std::string format_expvec(const ExpVec& v, int d) {
  std::string s = "(";
  for (int i = 0; i < d; ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  s += ")";
  return s;
}

}  // namespace unitroot
