#pragma once

#include <optional>
#include <string>
#include <vector>

namespace arrangeo {

// Univariate polynomial in t with exact 64-bit integer coefficients. Stored
// dense, constant term first; the leading coefficient is nonzero unless the
// polynomial is zero (empty coefficient vector).
class IntPolynomial {
 public:
  IntPolynomial() = default;  // zero polynomial
  explicit IntPolynomial(std::vector<long long> coeffs);

  static IntPolynomial constant(long long v);
  static IntPolynomial variable();  // t
  // Product of (t - r) over the given roots.
  static IntPolynomial from_roots(const std::vector<long long>& roots);

  const std::vector<long long>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  long long coefficient(std::size_t k) const {
    return k < c_.size() ? c_[k] : 0;
  }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  long long eval(long long t) const;  // throws std::overflow_error on overflow

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  bool operator==(const IntPolynomial&) const = default;

  std::string to_string(const std::string& var = "t") const;

 private:
  std::vector<long long> c_;
};

// Multiset of exponents, kept sorted ascending.
using ExponentMultiset = std::vector<long long>;

// If p is monic and splits over the nonnegative integers, its roots with
// multiplicity (sorted ascending); otherwise nullopt.
std::optional<ExponentMultiset> integer_root_split(const IntPolynomial& p);

// Factored rendering "t (t - 1) (t - 3)^2" of a split polynomial.
std::string factored_string(const ExponentMultiset& roots,
                            const std::string& var = "t");

}  // namespace arrangeo
