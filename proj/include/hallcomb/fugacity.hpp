#ifndef HALLCOMB_FUGACITY_HPP
#define HALLCOMB_FUGACITY_HPP

#include <array>
#include <vector>

#include "hallcomb/polyring.hpp"

namespace hallcomb {

// The six multiplicities around a honeycomb vertex, in the cyclic order
// (j, i, j', i', j'', i''): j/i sit on the NE edge pair, j'/i' on NW,
// j''/i'' on S.
struct VertexLabels {
  int j = 0, i = 0, jp = 0, ip = 0, jpp = 0, ipp = 0;

  // i' - j = i'' - j' = i - j''
  bool balanced() const { return ip - j == ipp - jp && ipp - jp == i - jpp; }
  bool nonnegative() const { return j >= 0 && i >= 0 && jp >= 0 && ip >= 0 && jpp >= 0 && ipp >= 0; }
  std::array<int, 6> as_array() const { return {j, i, jp, ip, jpp, ipp}; }

  friend bool operator==(const VertexLabels& a, const VertexLabels& b) {
    return a.as_array() == b.as_array();
  }
};

// sum_{r=0}^{min(i,i')} (-1)^r t^{j'r + r(r+1)/2} alpha_{i+j-r} /
// (alpha_{i-r} alpha_r alpha_{i'-r}), assembled over a common denominator
// and divided exactly; always a polynomial.  Memoized; throws
// std::invalid_argument when the balance condition fails.
TPoly vertex_fugacity(const VertexLabels& v);

// u^ = vertex_fugacity / (alpha_{i''} alpha_j alpha_{j''}).
RatFun u_upper(const VertexLabels& v);

// u_ = alpha_i alpha_{i'} alpha_{j'} * vertex_fugacity; always a polynomial.
TPoly u_lower(const VertexLabels& v);

// u_ through its terminating-series form
//   alpha_{i+j} alpha_{j'} 2phi1(t^{-i}, t^{-i'}; t^{-(i+j)}; t, t^{i''+1}),
// which needs no balance condition (j'' never enters).  This is the form
// the recurrence
//   u_{i''+1} = t^i (1-t^{j'}) u_{j'-1} + (1-t^i) u_{j+1, i-1}
// lives on, where subscripts denote substituted arguments.
RatFun u_lower_series(int j, int i, int jp, int ip, int ipp);

// u^ evaluated through the 3phi1 representation, split on the sign of
// c = j - i'; must agree with u_upper everywhere.
RatFun u_via_3phi1(const VertexLabels& v);

// Images of v under the dihedral group generated by
//   (j,i,j',i',j'',i'') -> (j'',i',j',i,j,i'')    (reflection)
//   (j,i,j',i',j'',i'') -> (i',j'',i'',j,i,j')    (Heine reflection)
//   (j,i,j',i',j'',i'') -> (j',i',j'',i'',j,i)    (cyclic shift)
// Deduplicated; at most 12 entries.
std::vector<VertexLabels> d6_orbit(const VertexLabels& v);

// One golden fugacity value: labels in the order (i, j, i', j', i'', j''),
// expected value as t-coefficients.
struct FugTableEntry {
  std::array<int, 6> labels;  // i, j, i', j', i'', j''
  std::vector<long> t_coeffs;
};

// Table of known small-label fugacities used as golden data.
const std::vector<FugTableEntry>& fugacity_golden_table();

}  // namespace hallcomb

#endif
