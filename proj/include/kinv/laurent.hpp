#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace kinv {

using BigInt = boost::multiprecision::cpp_int;

/// Integer Laurent polynomial sum_k coeffs[k] * v^(min_exponent + k).
///
/// Always trimmed: the first and last coefficients are nonzero, and the zero
/// polynomial has no coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(BigInt constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(std::vector<BigInt> coeffs, int min_exponent);

  /// c * v^e
  static LaurentPoly monomial(BigInt c, int e);

  bool is_zero() const { return coeffs_.empty(); }
  int min_exponent() const { return min_exp_; }
  int max_exponent() const { return min_exp_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  /// Coefficient of v^e (zero outside the support).
  BigInt coeff(int e) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Multiplies by v^k.
  LaurentPoly shifted(int k) const;

  /// Exact quotient; throws ComputeError when `divisor` does not divide.
  LaurentPoly divide_exact(const LaurentPoly& divisor) const;

  BigInt evaluate(long v) const;  // v must be +-1 when negative exponents occur

  /// Substitutes v -> v^-1.
  LaurentPoly inverted() const;

  /// v^e -> v^(e / k); throws ComputeError if some exponent is not a multiple of k.
  LaurentPoly compress_exponents(int k) const;

  /// Multiplies by +-v^k so the lowest exponent is 0 and its coefficient positive.
  LaurentPoly normalized() const;

  /// Palindromic coefficient array.
  bool is_symmetric() const;

  /// "c0 + c1*v + c2*v^2" with explicit signs, unit coefficients elided
  /// ("1 - t + t^2"), negative powers as v^-k, zero as "0".
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
  int min_exp_ = 0;
};

bool is_symmetric(const LaurentPoly& p);

}  // namespace kinv
