#pragma once

#include <gmpxx.h>

#include <vector>

#include "unitroot/errors.hpp"

namespace unitroot {

// Dense univariate power series over exact rationals, truncated at `degree`.
struct PowerSeries1D {
  int degree = -1;              // highest represented power of tau
  std::vector<mpq_class> c;     // c[i] is the coefficient of tau^i

  PowerSeries1D() = default;
  explicit PowerSeries1D(int deg) : degree(deg), c(static_cast<std::size_t>(deg) + 1) {
    if (deg < -1) throw UnsupportedError("negative series degree");
  }

  mpq_class at(int i) const {
    if (i < 0 || i > degree) return mpq_class(0);
    return c[static_cast<std::size_t>(i)];
  }

  bool is_zero() const {
    for (const auto& q : c)
      if (sgn(q) != 0) return false;
    return true;
  }

  bool operator==(const PowerSeries1D&) const = default;
};

// g(c * tau)
PowerSeries1D scale_variable(const PowerSeries1D& g, const mpq_class& factor);

}  // namespace unitroot
