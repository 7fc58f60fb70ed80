#include "unitroot/builtins.hpp"

#include <charconv>

namespace unitroot {

namespace {

PolyZ cyclic(int d) {
  // d-1 variables; support: the unit vectors and -(1,...,1)
  if (d < 2 || d - 1 > kMaxDim)
    throw UnsupportedError("cyclic-d requires 2 <= d <= " +
                           std::to_string(kMaxDim + 1));
  std::vector<PolyZ::Term> ts;
  ExpVec last;
  for (int i = 0; i + 1 < d; ++i) {
    ExpVec e;
    e[i] = 1;
    ts.emplace_back(e, mpz_class(1));
    last[i] = -1;
  }
  ts.emplace_back(last, mpz_class(1));
  return PolyZ::from_terms(d - 1, std::move(ts));
}

}  // namespace

PolyZ builtin_polynomial(std::string_view name) {
  if (name == "cubic") return cyclic(3);
  if (name == "quintic-like")
    return parse_laurent("t1 + t2 + t1^-2*t2^-2", 2);
  if (name.starts_with("cyclic-")) {
    int d = 0;
    auto rest = name.substr(7);
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), d);
    if (ec == std::errc{} && ptr == rest.data() + rest.size()) return cyclic(d);
  }
  throw UnsupportedError("unknown builtin polynomial: " + std::string(name));
}

bool is_builtin_name(std::string_view name) {
  try {
    builtin_polynomial(name);
    return true;
  } catch (const UnsupportedError&) {
    return false;
  }
}

}  // namespace unitroot
