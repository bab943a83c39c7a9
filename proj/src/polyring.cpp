#include "hallcomb/polyring.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace hallcomb {

TPoly::TPoly(long c) {
  if (c != 0) coeffs_.assign(1, Int(c));
}

TPoly::TPoly(const Int& c) {
  if (c != 0) coeffs_.assign(1, c);
}

TPoly::TPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void TPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

TPoly TPoly::s_power(int d) {
  std::vector<Int> c(d + 1, 0);
  c[d] = 1;
  return TPoly(std::move(c));
}

TPoly TPoly::t_power(int d) { return s_power(2 * d); }

TPoly TPoly::from_t_coeffs(const std::vector<Int>& tc) {
  std::vector<Int> c(tc.size() * 2, 0);
  for (size_t i = 0; i < tc.size(); ++i) c[2 * i] = tc[i];
  return TPoly(std::move(c));
}

bool TPoly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

Int TPoly::coeff(int d) const {
  if (d < 0 || d >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[d];
}

const Int& TPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading() of zero polynomial");
  return coeffs_.back();
}

bool TPoly::even_support() const {
  for (size_t d = 1; d < coeffs_.size(); d += 2)
    if (coeffs_[d] != 0) return false;
  return true;
}

std::vector<Int> TPoly::t_coeffs() const {
  if (!even_support()) throw std::domain_error("odd powers of s present");
  std::vector<Int> tc((coeffs_.size() + 1) / 2, 0);
  for (size_t d = 0; d < coeffs_.size(); d += 2) tc[d / 2] = coeffs_[d];
  return tc;
}

TPoly TPoly::operator-() const {
  TPoly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TPoly& TPoly::operator+=(const TPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  if (a.is_zero() || b.is_zero()) return TPoly();
  std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return TPoly(std::move(c));
}

bool TPoly::try_divide(const TPoly& a, const TPoly& b, TPoly& quotient) {
  if (b.is_zero()) return false;
  if (a.is_zero()) {
    quotient = TPoly();
    return true;
  }
  int da = a.degree(), db = b.degree();
  if (da < db) return false;
  std::vector<Int> rem = a.coeffs_;
  std::vector<Int> q(da - db + 1, 0);
  const Int& lb = b.coeffs_.back();
  for (int d = da; d >= db; --d) {
    Int& top = rem[d];
    if (top == 0) continue;
    if (top % lb != 0) return false;
    Int f = top / lb;
    q[d - db] = f;
    for (int i = 0; i <= db; ++i) rem[d - db + i] -= f * b.coeffs_[i];
  }
  for (const auto& c : rem)
    if (c != 0) return false;
  quotient = TPoly(std::move(q));
  return true;
}

TPoly TPoly::exact_divide(const TPoly& a, const TPoly& b) {
  TPoly q;
  if (!try_divide(a, b, q))
    throw std::domain_error("exact_divide: " + b.to_string() + " does not divide " +
                            a.to_string());
  return q;
}

Int TPoly::content() const {
  Int g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

namespace {

TPoly divide_by_int(const TPoly& a, const Int& d) {
  std::vector<Int> c = a.coeffs();
  for (auto& x : c) x /= d;
  return TPoly(std::move(c));
}

// Pseudo-remainder: repeatedly r <- lc(b)*r - top*x^k*b, which stays in Z[s].
// The accumulated lc(b) powers are irrelevant up to content, which the gcd
// loop strips anyway.
TPoly pseudo_rem(const TPoly& a, const TPoly& b) {
  const Int& lb = b.leading();
  int db = b.degree();
  std::vector<Int> r = a.coeffs();
  int dr = a.degree();
  while (dr >= db) {
    Int top = r[dr];
    if (top != 0) {
      for (auto& c : r) c *= lb;
      for (int i = 0; i <= db; ++i) r[dr - db + i] -= top * b.coeffs()[i];
    }
    --dr;
  }
  r.resize(dr < 0 ? 0 : dr + 1);
  return TPoly(std::move(r));
}

}  // namespace

TPoly TPoly::gcd(const TPoly& a, const TPoly& b) {
  if (a.is_zero() && b.is_zero()) return TPoly();
  if (a.is_zero() || b.is_zero()) {
    const TPoly& nz = a.is_zero() ? b : a;
    TPoly r = nz;
    if (r.leading() < 0) r = -r;
    return r;
  }
  Int ca = a.content(), cb = b.content();
  Int cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  TPoly pa = divide_by_int(a, ca), pb = divide_by_int(b, cb);
  if (pa.degree() < pb.degree()) std::swap(pa, pb);
  while (!pb.is_zero()) {
    TPoly r = pseudo_rem(pa, pb);
    if (!r.is_zero()) r = divide_by_int(r, r.content());
    pa = pb;
    pb = r;
  }
  TPoly g = pa * TPoly(cg);
  if (g.leading() < 0) g = -g;
  return g;
}

std::string TPoly::to_string() const {
  if (is_zero()) return "0";
  bool even = even_support();
  std::ostringstream out;
  bool first = true;
  for (size_t d = 0; d < coeffs_.size(); ++d) {
    const Int& c = coeffs_[d];
    if (c == 0) continue;
    Int ac = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    std::string var;
    if (d == 0) {
      var = "";
    } else if (even) {
      size_t e = d / 2;
      var = (e == 1) ? "t" : "t^" + std::to_string(e);
    } else if (d % 2 == 0) {
      var = (d == 2) ? "t" : "t^" + std::to_string(d / 2);
    } else {
      var = "t^(" + std::to_string(d) + "/2)";
    }
    if (var.empty()) {
      out << ac;
    } else if (ac == 1) {
      out << var;
    } else {
      out << ac << "*" << var;
    }
  }
  return out.str();
}

const TPoly& alpha(int i) {
  if (i < 0) throw std::domain_error("alpha of negative index");
  static std::vector<TPoly> cache{TPoly(1)};
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  while (static_cast<int>(cache.size()) <= i) {
    int r = static_cast<int>(cache.size());
    cache.push_back(cache.back() * (TPoly(1) - TPoly::t_power(r)));
  }
  return cache[i];
}

TPoly alpha_ratio(int hi, int lo) {
  if (lo > hi || lo < 0) throw std::domain_error("alpha_ratio: bad range");
  TPoly r(1);
  for (int m = lo + 1; m <= hi; ++m) r *= TPoly(1) - TPoly::t_power(m);
  return r;
}

RatFun::RatFun(TPoly num, TPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFun with zero denominator");
  normalize();
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = TPoly(1);
    return;
  }
  if (den_.is_one()) return;
  TPoly g = TPoly::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = TPoly::exact_divide(num_, g);
    den_ = TPoly::exact_divide(den_, g);
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatFun RatFun::operator-() const {
  RatFun r(*this);
  r.num_ = -r.num_;
  return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.den_.is_one() && b.den_.is_one()) return RatFun(a.num_ + b.num_);
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
  if (a.den_.is_one() && b.den_.is_one()) return RatFun(a.num_ - b.num_);
  return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.den_.is_one() && b.den_.is_one()) return RatFun(a.num_ * b.num_);
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun RatFun::invert() const {
  if (is_zero()) throw std::domain_error("invert(0)");
  return RatFun(den_, num_);
}

bool RatFun::is_polynomial() const {
  TPoly q;
  return TPoly::try_divide(num_, den_, q);
}

TPoly RatFun::to_poly() const {
  TPoly q;
  if (!TPoly::try_divide(num_, den_, q))
    throw std::domain_error("to_poly: value is not polynomial: " + to_string());
  return q;
}

std::string RatFun::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

}  // namespace hallcomb
