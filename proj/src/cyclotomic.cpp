#include "pds/cyclotomic.hpp"

#include "pds/errors.hpp"
#include "pds/torus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace pds {

CyclotomicElement::CyclotomicElement(int p) : p_(p), coeffs_(static_cast<std::size_t>(p), 0) {
  if (p < 2) throw InvalidInputError("cyclotomic order must be >= 2");
}

CyclotomicElement::CyclotomicElement(int p, std::vector<std::int64_t> coeffs)
    : p_(p), coeffs_(std::move(coeffs)) {
  if (p < 2 || coeffs_.size() != static_cast<std::size_t>(p)) {
    throw InvalidInputError("cyclotomic element needs exactly p coefficients");
  }
}

CyclotomicElement CyclotomicElement::power(int p, long long t) {
  CyclotomicElement e(p);
  e.add_power(t);
  return e;
}

void CyclotomicElement::add_power(long long t, std::int64_t multiplicity) {
  coeffs_[static_cast<std::size_t>(mod(t, p_))] += multiplicity;
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& other) {
  if (other.p_ != p_) throw InvalidInputError("cyclotomic orders differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CyclotomicElement& CyclotomicElement::operator*=(const CyclotomicElement& other) {
  if (other.p_ != p_) throw InvalidInputError("cyclotomic orders differ");
  std::vector<std::int64_t> product(coeffs_.size(), 0);
  for (int i = 0; i < p_; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; j < p_; ++j) product[(i + j) % p_] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(product);
  return *this;
}

bool CyclotomicElement::is_zero() const {
  if (!is_prime(p_)) {
    throw UnsupportedParametersError("cyclotomic zero test needs prime order, got " +
                                     std::to_string(p_));
  }
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [&](std::int64_t c) { return c == coeffs_.front(); });
}

CyclotomicElement CyclotomicElement::reduced() const {
  CyclotomicElement r = *this;
  const auto lo = *std::min_element(r.coeffs_.begin(), r.coeffs_.end());
  for (auto& c : r.coeffs_) c -= lo;
  return r;
}

std::complex<double> CyclotomicElement::to_complex() const {
  std::complex<double> z{0.0, 0.0};
  for (int t = 0; t < p_; ++t) {
    const double angle = 2.0 * std::numbers::pi * t / p_;
    z += static_cast<double>(coeffs_[t]) * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return z;
}

}  // namespace pds
