#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "unitroot/exponent.hpp"
#include "unitroot/rings.hpp"

namespace unitroot {

// v_p(n!) by Legendre's formula
int64_t factorial_valuation(uint64_t n, uint64_t p);

// Unit part of n!, i.e. n!/p^{v_p(n!)}, as a canonical residue mod p^M.
// An optional cache keyed by n amortizes repeated queries at one modulus.
uint64_t factorial_unit(uint64_t n, const ZmodRing& ring,
                        std::map<uint64_t, uint64_t>* cache = nullptr);

// Square matrix of canonical residues mod p^M with row/column labels
// (interior lattice points in graded-lex order).
class PadicMatrix {
 public:
  PadicMatrix(ZmodRing ring, std::vector<ExpVec> labels, int label_dim)
      : ring_(ring),
        n_(labels.size()),
        labels_(std::move(labels)),
        label_dim_(label_dim),
        a_(n_ * n_, 0) {}

  static PadicMatrix identity(ZmodRing ring, std::vector<ExpVec> labels,
                              int label_dim) {
    PadicMatrix m(ring, std::move(labels), label_dim);
    for (std::size_t i = 0; i < m.n_; ++i) m.at(i, i) = m.ring_.one();
    return m;
  }

  const ZmodRing& ring() const { return ring_; }
  uint64_t p() const { return ring_.p(); }
  int precision() const { return ring_.precision(); }
  std::size_t size() const { return n_; }
  const std::vector<ExpVec>& labels() const { return labels_; }
  int label_dim() const { return label_dim_; }

  uint64_t& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  uint64_t at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  bool operator==(const PadicMatrix&) const = default;

 private:
  ZmodRing ring_;
  std::size_t n_;
  std::vector<ExpVec> labels_;
  int label_dim_;
  std::vector<uint64_t> a_;
};

PadicMatrix mat_mul(const PadicMatrix& a, const PadicMatrix& b);

// Gauss-Jordan over Z/p^M, pivoting on units.  Succeeds iff det(A) is a unit
// mod p; otherwise throws NotInvertibleError naming p.
PadicMatrix matrix_inverse_mod(const PadicMatrix& a);

// determinant as a residue mod p^M
uint64_t mat_det(const PadicMatrix& a);

// reduce all entries to a smaller precision M2 <= M
PadicMatrix reduce_precision(const PadicMatrix& a, int M2);

// largest e <= min(M, cap) with a == b mod p^e
int agreement_level(const PadicMatrix& a, const PadicMatrix& b);

}  // namespace unitroot
