#include "arrangeo/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace arrangeo {

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("polynomial: coefficient overflow");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("polynomial: coefficient overflow");
  return r;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<long long> coeffs)
    : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::constant(long long v) {
  return IntPolynomial(std::vector<long long>{v});
}

IntPolynomial IntPolynomial::variable() {
  return IntPolynomial(std::vector<long long>{0, 1});
}

IntPolynomial IntPolynomial::from_roots(const std::vector<long long>& roots) {
  IntPolynomial p = constant(1);
  for (long long r : roots)
    p = p * IntPolynomial(std::vector<long long>{-r, 1});
  return p;
}

long long IntPolynomial::eval(long long t) const {
  long long acc = 0;
  for (std::size_t k = c_.size(); k-- > 0;)
    acc = checked_add(checked_mul(acc, t), c_[k]);
  return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<long long> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t k = 0; k < r.size(); ++k)
    r[k] = checked_add(coefficient(k), o.coefficient(k));
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<long long> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t k = 0; k < r.size(); ++k)
    r[k] = checked_add(coefficient(k), -o.coefficient(k));
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return IntPolynomial();
  std::vector<long long> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t a = 0; a < c_.size(); ++a)
    for (std::size_t b = 0; b < o.c_.size(); ++b)
      r[a + b] = checked_add(r[a + b], checked_mul(c_[a], o.c_[b]));
  return IntPolynomial(std::move(r));
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const long long coef = c_[k];
    if (coef == 0) continue;
    if (out.empty())
      out += coef < 0 ? "-" : "";
    else
      out += coef < 0 ? " - " : " + ";
    const long long mag = std::llabs(coef);
    if (mag != 1 || k == 0) out += std::to_string(mag);
    if (k > 0) {
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

namespace {

// True iff `cand` (>= 1) is a root of the polynomial with coefficients `c`.
// Horner in 128-bit; for cand >= 2, once |acc| exceeds the largest
// coefficient magnitude every further step strictly grows |acc|, so the
// value can never return to zero and the scan stops early. This keeps the
// accumulator bounded even for candidates far beyond any root.
bool is_integer_root(const std::vector<long long>& c, long long cand) {
  __int128 bound = 0;
  for (long long v : c) {
    const __int128 mag = v < 0 ? -static_cast<__int128>(v) : v;
    bound = std::max(bound, mag);
  }
  __int128 acc = 0;
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * cand + c[k];
    const __int128 mag = acc < 0 ? -acc : acc;
    if (k > 0 && cand >= 2 && mag > bound) return false;
  }
  return acc == 0;
}

}  // namespace

std::optional<ExponentMultiset> integer_root_split(const IntPolynomial& p) {
  if (!p.is_monic()) return std::nullopt;
  std::vector<long long> work = p.coefficients();
  ExponentMultiset roots;

  // Divide the monic polynomial in `work` by (t - r) in place; valid only
  // when r is a root.
  auto deflate = [&work](long long r) {
    std::vector<long long> q(work.size() - 1, 0);
    long long carry = work.back();
    for (std::size_t k = work.size() - 1; k-- > 0;) {
      q[k] = carry;
      carry = checked_add(work[k], checked_mul(carry, r));
    }
    work = std::move(q);
  };

  while (work.size() > 1) {
    if (work[0] == 0) {
      roots.push_back(0);
      work.erase(work.begin());
      continue;
    }
    const long long target = std::llabs(work[0]);
    bool found = false;
    // A positive integer root of a monic integer polynomial divides the
    // constant term, so only divisors need testing.
    for (long long r = 1; r <= target / r && !found; ++r) {
      if (target % r != 0) continue;
      for (long long cand : {r, target / r}) {
        if (is_integer_root(work, cand)) {
          deflate(cand);
          roots.push_back(cand);
          found = true;
          break;
        }
      }
    }
    if (!found) return std::nullopt;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::string factored_string(const ExponentMultiset& roots,
                            const std::string& var) {
  if (roots.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < roots.size();) {
    std::size_t run = k;
    while (run < roots.size() && roots[run] == roots[k]) ++run;
    if (!out.empty()) out += " ";
    std::string base = roots[k] == 0
                           ? var
                           : "(" + var + " - " + std::to_string(roots[k]) + ")";
    out += base;
    if (run - k > 1) out += "^" + std::to_string(run - k);
    k = run;
  }
  return out;
}

}  // namespace arrangeo
