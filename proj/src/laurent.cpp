#include "kinv/laurent.hpp"

#include <algorithm>
#include <cstdlib>

#include "kinv/error.hpp"

namespace kinv {

LaurentPoly::LaurentPoly(BigInt constant) : coeffs_{std::move(constant)} { trim(); }

LaurentPoly::LaurentPoly(std::vector<BigInt> coeffs, int min_exponent)
    : coeffs_(std::move(coeffs)), min_exp_(min_exponent) {
  trim();
}

LaurentPoly LaurentPoly::monomial(BigInt c, int e) { return LaurentPoly({std::move(c)}, e); }

void LaurentPoly::trim() {
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](const BigInt& c) { return c != 0; });
  coeffs_.erase(last.base(), coeffs_.end());
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; });
  min_exp_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) min_exp_ = 0;
}

BigInt LaurentPoly::coeff(int e) const {
  if (is_zero() || e < min_exp_ || e > max_exponent()) return 0;
  return coeffs_[e - min_exp_];
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(min_exp_, o.min_exp_);
  int hi = std::max(max_exponent(), o.max_exponent());
  std::vector<BigInt> c(hi - lo + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[min_exp_ - lo + k] += coeffs_[k];
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) c[o.min_exp_ - lo + k] += o.coeffs_[k];
  coeffs_ = std::move(c);
  min_exp_ = lo;
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator-(LaurentPoly a) {
  for (BigInt& c : a.coeffs_) c = -c;
  return a;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return LaurentPoly(std::move(c), a.min_exp_ + b.min_exp_);
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.min_exp_ += k;
  return r;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw ComputeError("division by the zero polynomial");
  if (is_zero()) return {};
  // Long division from the top degree down, as ordinary polynomials.
  std::vector<BigInt> rem = coeffs_;
  const std::vector<BigInt>& d = divisor.coeffs_;
  if (rem.size() < d.size()) throw ComputeError("polynomial division is not exact");
  std::vector<BigInt> q(rem.size() - d.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    const BigInt& top = rem[k + d.size() - 1];
    if (top == 0) continue;
    if (top % d.back() != 0) throw ComputeError("polynomial division is not exact");
    BigInt f = top / d.back();
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= f * d[j];
    q[k] = std::move(f);
  }
  for (const BigInt& r : rem)
    if (r != 0) throw ComputeError("polynomial division is not exact");
  return LaurentPoly(std::move(q), min_exp_ - divisor.min_exp_);
}

BigInt LaurentPoly::evaluate(long v) const {
  if (is_zero()) return 0;
  if (min_exp_ < 0 && v != 1 && v != -1)
    throw ComputeError("cannot evaluate negative powers at " + std::to_string(v) +
                       " over the integers");
  // For v = +-1, v^e == v^|e|.
  BigInt p = boost::multiprecision::pow(BigInt(v), static_cast<unsigned>(std::abs(min_exp_)));
  BigInt sum = 0;
  for (const BigInt& c : coeffs_) {
    sum += c * p;
    p *= v;
  }
  return sum;
}

LaurentPoly LaurentPoly::inverted() const {
  if (is_zero()) return {};
  std::vector<BigInt> c(coeffs_.rbegin(), coeffs_.rend());
  return LaurentPoly(std::move(c), -max_exponent());
}

LaurentPoly LaurentPoly::compress_exponents(int k) const {
  if (is_zero()) return {};
  LaurentPoly r;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    int e = min_exp_ + static_cast<int>(i);
    if (e % k != 0)
      throw ComputeError("exponent " + std::to_string(e) + " is not a multiple of " + std::to_string(k));
    r += monomial(coeffs_[i], e / k);
  }
  return r;
}

LaurentPoly LaurentPoly::normalized() const {
  if (is_zero()) return {};
  LaurentPoly r = shifted(-min_exp_);
  if (r.coeffs_.front() < 0) r = -r;
  return r;
}

bool LaurentPoly::is_symmetric() const {
  return std::equal(coeffs_.begin(), coeffs_.begin() + coeffs_.size() / 2, coeffs_.rbegin());
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    int e = min_exp_ + static_cast<int>(i);
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    std::string mono = e == 0 ? "" : (e == 1 ? var : var + "^" + std::to_string(e));
    if (mono.empty())
      s += mag.str();
    else if (mag == 1)
      s += mono;
    else
      s += mag.str() + "*" + mono;
  }
  return s;
}

bool is_symmetric(const LaurentPoly& p) { return p.is_symmetric(); }

}  // namespace kinv
