#include "hallcomb/fugacity.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace hallcomb {

namespace {

void require_balanced(const VertexLabels& v) {
  if (!v.nonnegative()) throw std::invalid_argument("vertex labels must be nonnegative");
  if (!v.balanced()) throw std::invalid_argument("vertex labels violate the balance condition");
}

TPoly compute_fugacity(const VertexLabels& v) {
  int top = std::min(v.i, v.ip);
  // Common denominator alpha_i alpha_{i'} alpha_top.
  TPoly num;
  for (int r = 0; r <= top; ++r) {
    TPoly term = TPoly::t_power(v.jp * r + r * (r + 1) / 2);
    term *= alpha(v.i + v.j - r);
    term *= alpha_ratio(v.i, v.i - r);
    term *= alpha_ratio(top, r);
    term *= alpha_ratio(v.ip, v.ip - r);
    if (r % 2) term = -term;
    num += term;
  }
  return TPoly::exact_divide(num, alpha(v.i) * alpha(v.ip) * alpha(top));
}

// (t^e; t)_m as a rational function; e may be negative.
RatFun t_pochhammer(int e, int m) {
  RatFun r(1);
  for (int l = 0; l < m; ++l) {
    int g = e + l;
    if (g >= 0) {
      r *= RatFun(TPoly(1) - TPoly::t_power(g));
    } else {
      r *= RatFun(TPoly::t_power(-g) - TPoly(1), TPoly::t_power(-g));
    }
  }
  return r;
}

}  // namespace

TPoly vertex_fugacity(const VertexLabels& v) {
  require_balanced(v);
  static std::map<std::array<int, 6>, TPoly> cache;
  static std::mutex mtx;
  std::array<int, 6> key = v.as_array();
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  TPoly f = compute_fugacity(v);
  std::lock_guard<std::mutex> lock(mtx);
  return cache.emplace(key, std::move(f)).first->second;
}

RatFun u_upper(const VertexLabels& v) {
  return RatFun(vertex_fugacity(v), alpha(v.ipp) * alpha(v.j) * alpha(v.jpp));
}

TPoly u_lower(const VertexLabels& v) {
  return alpha(v.i) * alpha(v.ip) * alpha(v.jp) * vertex_fugacity(v);
}

RatFun u_lower_series(int j, int i, int jp, int ip, int ipp) {
  if (j < 0 || i < 0 || jp < 0 || ip < 0 || ipp < 0)
    throw std::invalid_argument("u_lower_series: negative argument");
  RatFun sum;
  int top = std::min(i, ip);
  for (int m = 0; m <= top; ++m) {
    RatFun term = t_pochhammer(-i, m) * t_pochhammer(-ip, m);
    term = term * (t_pochhammer(1, m) * t_pochhammer(-(i + j), m)).invert();
    term *= RatFun(TPoly::t_power((ipp + 1) * m));
    sum += term;
  }
  return RatFun(alpha(i + j) * alpha(jp)) * sum;
}

RatFun u_via_3phi1(const VertexLabels& v) {
  require_balanced(v);
  int c = v.j - v.ip;
  auto phi31 = [](int u1, int u2, int u3, int bexp, int zexp) {
    RatFun sum;
    int top = std::min({u1, u2, u3});
    for (int m = 0; m <= top; ++m) {
      RatFun term = t_pochhammer(-u1, m) * t_pochhammer(-u2, m) * t_pochhammer(-u3, m);
      term = term * (t_pochhammer(1, m) * t_pochhammer(bexp, m)).invert();
      // [(-1)^m t^{m(m-1)/2}]^{-1} z^m with z = t^zexp
      term *= RatFun(TPoly::t_power(zexp * m), TPoly::t_power(m * (m - 1) / 2));
      if (m % 2) term = -term;
      sum += term;
    }
    return sum;
  };
  if (c >= 0) {
    RatFun phi = phi31(v.i, v.ip, v.ipp, c + 1, v.i + v.ip + v.ipp + c);
    return phi * RatFun(alpha(v.i) * alpha(v.ip) * alpha(v.ipp) * alpha(c)).invert();
  }
  RatFun phi = phi31(v.j, v.jp, v.jpp, -c + 1, v.j + v.jp + v.jpp - c);
  return phi * RatFun(alpha(v.j) * alpha(v.jp) * alpha(v.jpp) * alpha(-c)).invert();
}

std::vector<VertexLabels> d6_orbit(const VertexLabels& v) {
  auto reflect = [](const VertexLabels& a) {
    return VertexLabels{a.jpp, a.ip, a.jp, a.i, a.j, a.ipp};
  };
  auto heine = [](const VertexLabels& a) {
    return VertexLabels{a.ip, a.jpp, a.ipp, a.j, a.i, a.jp};
  };
  auto cyc = [](const VertexLabels& a) {
    return VertexLabels{a.jp, a.ip, a.jpp, a.ipp, a.j, a.i};
  };
  std::set<std::array<int, 6>> seen;
  std::vector<VertexLabels> orbit, frontier{v};
  seen.insert(v.as_array());
  while (!frontier.empty()) {
    VertexLabels cur = frontier.back();
    frontier.pop_back();
    orbit.push_back(cur);
    for (const VertexLabels& img : {reflect(cur), heine(cur), cyc(cur)})
      if (seen.insert(img.as_array()).second) frontier.push_back(img);
  }
  return orbit;
}

}  // namespace hallcomb
