#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace pds {

// Element sum_t c_t w^t of Z[w], w = exp(2*pi*i/p), stored by its p
// coefficients modulo w^p = 1. The representation is not unique: adding the
// same constant to every coefficient leaves the value unchanged because
// 1 + w + ... + w^(p-1) = 0.
class CyclotomicElement {
 public:
  explicit CyclotomicElement(int p);
  CyclotomicElement(int p, std::vector<std::int64_t> coeffs);

  // w^t
  static CyclotomicElement power(int p, long long t);

  int order() const noexcept { return p_; }
  std::span<const std::int64_t> coeffs() const noexcept { return coeffs_; }

  // this += multiplicity * w^t
  void add_power(long long t, std::int64_t multiplicity = 1);

  CyclotomicElement& operator+=(const CyclotomicElement& other);
  CyclotomicElement& operator*=(const CyclotomicElement& other);
  friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) {
    return a += b;
  }
  friend CyclotomicElement operator*(CyclotomicElement a, const CyclotomicElement& b) {
    return a *= b;
  }

  // Exact zero test. For prime p the minimal polynomial of w is
  // 1 + x + ... + x^(p-1), so the element vanishes iff all coefficients are
  // equal. Throws UnsupportedParametersError for composite p.
  bool is_zero() const;

  // Subtracts the minimum coefficient so the smallest entry is 0; a canonical
  // form for prime p.
  CyclotomicElement reduced() const;

  std::complex<double> to_complex() const;

  // Coefficient-wise comparison (not value equality; compare reduced()).
  friend bool operator==(const CyclotomicElement&, const CyclotomicElement&) = default;

 private:
  int p_;
  std::vector<std::int64_t> coeffs_;
};

}  // namespace pds
