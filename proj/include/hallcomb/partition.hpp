#ifndef HALLCOMB_PARTITION_HPP
#define HALLCOMB_PARTITION_HPP

#include <string>
#include <vector>

#include "hallcomb/polyring.hpp"

namespace hallcomb {

class Partition;

// Length-n multiplicity vector: m[r] counts the parts equal to r.  Always
// sums to k.
struct MultVector {
  std::vector<int> m;
  int k = 0;
  int n = 0;

  friend bool operator==(const MultVector& a, const MultVector& b) {
    return a.k == b.k && a.n == b.n && a.m == b.m;
  }
};

// Partition in P_{k,n}: at most k parts, each at most n-1, stored
// zero-padded to exactly k entries.
class Partition {
 public:
  // Pads with zeros to k entries; throws std::invalid_argument when the
  // parts are not weakly decreasing, exceed n-1, or number more than k.
  Partition(std::vector<int> parts, int k, int n);
  static Partition empty(int k, int n) { return Partition({}, k, n); }
  static Partition single_row(int r, int k, int n) { return Partition({r}, k, n); }

  int k() const { return k_; }
  int n() const { return n_; }
  const std::vector<int>& parts() const { return parts_; }
  int part(size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int size() const;                                 // number of boxes
  bool is_empty() const { return parts_.empty() || parts_[0] == 0; }

  MultVector to_multiplicities() const;
  static Partition from_multiplicities(const MultVector& mv);

  // Complement in the k x (n-1) rectangle rotated 180 degrees; reverses the
  // multiplicity vector.
  Partition star() const;

  // h = prod_r alpha(m_r).
  TPoly h_factor() const;

  // Canonical order: descending lexicographic on multiplicity vectors (the
  // empty partition, m = (k,0,...,0), comes first).  This is the order used
  // by enumerate_Pkn and by every map keyed on partitions.
  bool operator<(const Partition& o) const;
  friend bool operator==(const Partition& a, const Partition& b) {
    return a.k_ == b.k_ && a.n_ == b.n_ && a.parts_ == b.parts_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

  // "(3,2,1,1)" with trailing zeros trimmed; "()" for the empty partition.
  std::string to_string() const;
  // Comma-separated parts, e.g. "3,2,1,1"; "" and "0" denote empty.
  static Partition parse(const std::string& text, int k, int n);

 private:
  std::vector<int> parts_;  // weakly decreasing, length k
  int k_, n_;
};

// All of P_{k,n} in canonical order; exactly C(k+n-1, n-1) entries.
std::vector<Partition> enumerate_Pkn(int k, int n);

// All nu in P_{k,n} such that nu/lam is a horizontal strip with r boxes
// (at most one box added per column).  Candidates leaving P_{k,n} are
// silently dropped.  Returned in canonical order.
std::vector<Partition> horizontal_strips(const Partition& lam, int r);

bool is_horizontal_strip(const Partition& lam, const Partition& nu);

// One maximal run of strip boxes in consecutive columns: `column` is the
// rightmost column of the run, `boxes` its size.
struct StripBlock {
  int column;
  int boxes;
  friend bool operator==(const StripBlock& a, const StripBlock& b) {
    return a.column == b.column && a.boxes == b.boxes;
  }
};

// Blocks of nu/lam ordered top to bottom (decreasing column); throws
// std::invalid_argument when nu/lam is not a horizontal strip.
std::vector<StripBlock> strip_blocks(const Partition& lam, const Partition& nu);

// (1/(1-t)) * prod over block-end columns i of (1 - t^{m_i(nu)}), assembled
// by exact division.  Requires a nonempty horizontal strip.
TPoly pieri_coefficient(const Partition& lam, const Partition& nu);

}  // namespace hallcomb

#endif
