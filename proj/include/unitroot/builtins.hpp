#pragma once

#include <string>
#include <string_view>

#include "unitroot/laurent.hpp"

namespace unitroot {

// Named polynomials usable wherever a polynomial input is accepted:
//   cubic          t1 + t2 + 1/(t1 t2)
//   quintic-like   t1 + t2 + (t1 t2)^-2
//   cyclic-<d>     t1 + ... + t_{d-1} + 1/(t1 ... t_{d-1}),  d >= 2
PolyZ builtin_polynomial(std::string_view name);

bool is_builtin_name(std::string_view name);

}  // namespace unitroot
