#ifndef HALLCOMB_POLYRING_HPP
#define HALLCOMB_POLYRING_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace hallcomb {

using Int = mpz_class;

// Polynomial in s with integer coefficients, where s^2 = t.  Everything in
// the library is ultimately a value of this ring or of its fraction field:
// fugacities, structure constants, and the sl4 vertex weights (the latter
// are the only place odd powers of s appear).
//
// Canonical form: coeffs_[d] is the coefficient of s^d and the last entry is
// nonzero; the zero polynomial is the empty sequence.
class TPoly {
 public:
  TPoly() = default;
  TPoly(long c);                             // constant
  TPoly(const Int& c);                       // constant
  explicit TPoly(std::vector<Int> coeffs);   // s-coefficients, normalized

  static TPoly s_power(int d);               // s^d, d >= 0
  static TPoly t_power(int d);               // t^d = s^(2d), d >= 0
  static TPoly from_t_coeffs(const std::vector<Int>& tc);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for 0
  Int coeff(int d) const;                    // 0 outside the support
  const std::vector<Int>& coeffs() const { return coeffs_; }
  const Int& leading() const;                // requires nonzero

  // True when only even powers of s occur, i.e. the value lies in Z[t].
  bool even_support() const;
  std::vector<Int> t_coeffs() const;         // requires even_support

  TPoly operator-() const;
  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  TPoly& operator*=(const TPoly& o) { return *this = *this * o; }
  friend bool operator==(const TPoly& a, const TPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const TPoly& a, const TPoly& b) { return !(a == b); }
  bool operator<(const TPoly& o) const { return coeffs_ < o.coeffs_; }

  // Exact division in Z[s]; returns false when b does not divide a.
  static bool try_divide(const TPoly& a, const TPoly& b, TPoly& quotient);
  // Throws std::domain_error on non-divisibility.
  static TPoly exact_divide(const TPoly& a, const TPoly& b);

  Int content() const;                       // gcd of coefficients, >= 0
  static TPoly gcd(const TPoly& a, const TPoly& b);  // positive leading coeff

  // Evaluation at t = 0 (equivalently s = 0): the constant coefficient.
  Int at_zero() const { return coeff(0); }

  // "3 + 2*t - t^2" for even support, "t^(1/2)" style terms otherwise.
  std::string to_string() const;

 private:
  void normalize();
  std::vector<Int> coeffs_;
};

// alpha(i) = prod_{r=1..i} (1 - t^r); alpha(0) = 1.
const TPoly& alpha(int i);
// alpha(hi) / alpha(lo) = prod_{r=lo+1..hi} (1 - t^r); requires lo <= hi.
TPoly alpha_ratio(int hi, int lo);

// Element of the fraction field of Z[s].  Canonical form: gcd(num, den) is a
// unit and den has positive leading coefficient, so equality is plain
// member-wise comparison.  Operations take a fast path while denominators
// stay at 1, which they do along every polynomial-valued computation.
class RatFun {
 public:
  RatFun() : num_(), den_(1) {}
  RatFun(long c) : num_(c), den_(1) {}
  RatFun(TPoly num) : num_(std::move(num)), den_(1) {}
  RatFun(TPoly num, TPoly den);

  const TPoly& num() const { return num_; }
  const TPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun invert() const;                     // throws std::domain_error on 0
  friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.invert(); }

  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  bool is_polynomial() const;
  TPoly to_poly() const;                     // throws when den does not divide num

  std::string to_string() const;

 private:
  void normalize();
  TPoly num_, den_;
};

}  // namespace hallcomb

#endif
