#include "unitroot/laurent.hpp"

#include <atomic>
#include <cctype>
#include <cstdlib>

namespace unitroot {

namespace {

std::size_t initial_cap() {
  if (const char* env = std::getenv("UNITROOT_MAX_TERMS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 5'000'000;
}

std::atomic<std::size_t>& cap_slot() {
  static std::atomic<std::size_t> cap{initial_cap()};
  return cap;
}

}  // namespace

std::size_t term_cap() { return cap_slot().load(std::memory_order_relaxed); }

void set_term_cap(std::size_t cap) {
  cap_slot().store(cap == 0 ? 1 : cap, std::memory_order_relaxed);
}

namespace {

struct Lexer {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  char take() {
    char c = peek();
    if (pos < s.size()) ++pos;
    return c;
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  // unsigned decimal integer, arbitrary precision
  mpz_class integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) throw ParseError("expected integer", start);
    return mpz_class(std::string(s.substr(start, pos - start)), 10);
  }

  long signed_small_int(const char* what) {
    skip_ws();
    std::size_t start = pos;
    bool neg = eat('-');
    if (!neg) eat('+');
    mpz_class v = integer();
    if (neg) v = -v;
    if (!v.fits_slong_p() || v < -(1 << 20) || v > (1 << 20))
      throw ParseError(std::string(what) + " out of range", start);
    return v.get_si();
  }
};

}  // namespace

PolyZ parse_laurent(std::string_view text, int d) {
  if (d < 1 || d > kMaxDim)
    throw ParseError("dimension must be between 1 and " + std::to_string(kMaxDim), 0);
  Lexer lx{text};
  std::vector<PolyZ::Term> terms;

  bool first = true;
  while (true) {
    lx.skip_ws();
    if (lx.pos >= lx.s.size()) {
      if (first) throw ParseError("empty polynomial", lx.pos);
      break;
    }
    int sign = 1;
    char c = lx.peek();
    if (c == '+' || c == '-') {
      lx.take();
      sign = c == '-' ? -1 : 1;
    } else if (!first) {
      throw ParseError("expected '+' or '-'", lx.pos);
    }

    // one term: product of factors, each a variable power or an integer
    mpz_class coeff = sign;
    ExpVec e;
    bool saw_factor = false;
    while (true) {
      lx.skip_ws();
      std::size_t fstart = lx.pos;
      char f = lx.peek();
      if (f == 't') {
        lx.take();
        std::size_t istart = lx.pos;
        mpz_class idx = lx.integer();
        if (idx < 1 || idx > d)
          throw ParseError("variable index out of range for dimension " +
                               std::to_string(d),
                           istart);
        int vi = static_cast<int>(idx.get_si()) - 1;
        long exp = 1;
        if (lx.eat('^')) exp = lx.signed_small_int("exponent");
        int64_t ne = static_cast<int64_t>(e[vi]) + exp;
        if (ne < INT32_MIN || ne > INT32_MAX)
          throw ParseError("exponent out of range", fstart);
        e[vi] = static_cast<int32_t>(ne);
      } else if (std::isdigit(static_cast<unsigned char>(f))) {
        coeff *= lx.integer();
      } else {
        throw ParseError("expected variable or integer", fstart);
      }
      saw_factor = true;
      if (!lx.eat('*')) break;
    }
    if (!saw_factor) throw ParseError("empty term", lx.pos);
    terms.emplace_back(e, coeff);
    first = false;
  }
  return PolyZ::from_terms(d, std::move(terms));
}

}  // namespace unitroot
