#include "hallcomb/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace hallcomb {

Partition::Partition(std::vector<int> parts, int k, int n) : parts_(std::move(parts)), k_(k), n_(n) {
  if (k < 1 || n < 1) throw std::invalid_argument("partition context needs k, n >= 1");
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  if (static_cast<int>(parts_.size()) > k)
    throw std::invalid_argument("partition has more than k parts");
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0 || parts_[i] > n - 1)
      throw std::invalid_argument("partition part outside [0, n-1]");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts not weakly decreasing");
  }
  parts_.resize(k, 0);
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

MultVector Partition::to_multiplicities() const {
  MultVector mv;
  mv.k = k_;
  mv.n = n_;
  mv.m.assign(n_, 0);
  for (int p : parts_) ++mv.m[p];
  return mv;
}

Partition Partition::from_multiplicities(const MultVector& mv) {
  std::vector<int> parts;
  parts.reserve(mv.k);
  for (int r = mv.n - 1; r >= 0; --r)
    for (int c = 0; c < mv.m[r]; ++c) parts.push_back(r);
  if (static_cast<int>(parts.size()) != mv.k)
    throw std::invalid_argument("multiplicity vector does not sum to k");
  return Partition(std::move(parts), mv.k, mv.n);
}

Partition Partition::star() const {
  MultVector mv = to_multiplicities();
  std::reverse(mv.m.begin(), mv.m.end());
  return from_multiplicities(mv);
}

TPoly Partition::h_factor() const {
  MultVector mv = to_multiplicities();
  TPoly h(1);
  for (int r = 0; r < n_; ++r) h *= alpha(mv.m[r]);
  return h;
}

bool Partition::operator<(const Partition& o) const {
  MultVector a = to_multiplicities(), b = o.to_multiplicities();
  if (a.n != b.n || a.k != b.k) return std::tie(a.k, a.n) < std::tie(b.k, b.n);
  return a.m > b.m;  // descending lex on multiplicities
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << "(";
  bool first = true;
  for (int p : parts_) {
    if (p == 0) break;
    if (!first) out << ",";
    out << p;
    first = false;
  }
  out << ")";
  return out.str();
}

Partition Partition::parse(const std::string& text, int k, int n) {
  std::vector<int> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) {
    if (cur.empty()) continue;
    size_t pos = 0;
    int v = std::stoi(cur, &pos);
    if (pos != cur.size()) throw std::invalid_argument("bad partition entry: " + cur);
    parts.push_back(v);
  }
  return Partition(std::move(parts), k, n);
}

std::vector<Partition> enumerate_Pkn(int k, int n) {
  std::vector<Partition> out;
  MultVector mv;
  mv.k = k;
  mv.n = n;
  mv.m.assign(n, 0);
  // Compositions of k into n parts, descending lex.
  std::vector<int>& m = mv.m;
  auto emit = [&]() { out.push_back(Partition::from_multiplicities(mv)); };
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n - 1) {
      m[pos] = left;
      emit();
      m[pos] = 0;
      return;
    }
    for (int v = left; v >= 0; --v) {
      m[pos] = v;
      rec(pos + 1, left - v);
    }
    m[pos] = 0;
  };
  rec(0, k);
  return out;
}

bool is_horizontal_strip(const Partition& lam, const Partition& nu) {
  if (lam.k() != nu.k() || lam.n() != nu.n()) return false;
  int k = lam.k();
  for (int i = 0; i < k; ++i) {
    if (nu.part(i) < lam.part(i)) return false;
    if (i + 1 < k && lam.part(i) < nu.part(i + 1)) return false;
  }
  return true;
}

std::vector<Partition> horizontal_strips(const Partition& lam, int r) {
  if (r < 1) throw std::invalid_argument("horizontal_strips: r must be positive");
  int k = lam.k(), n = lam.n();
  std::vector<Partition> out;
  // Choose row increments d_i with nu_i = lam_i + d_i, nu_i <= min(n-1, lam_{i-1}).
  std::vector<int> nu(k, 0);
  std::function<void(int, int)> rec = [&](int row, int left) {
    if (row == k) {
      if (left == 0) out.push_back(Partition(nu, k, n));
      return;
    }
    int cap = (row == 0) ? n - 1 : std::min(n - 1, lam.part(row - 1));
    int hi = std::min(cap - lam.part(row), left);
    for (int d = 0; d <= hi; ++d) {
      nu[row] = lam.part(row) + d;
      rec(row + 1, left - d);
    }
    nu[row] = 0;
  };
  rec(0, r);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<StripBlock> strip_blocks(const Partition& lam, const Partition& nu) {
  if (!is_horizontal_strip(lam, nu))
    throw std::invalid_argument("strip_blocks: " + nu.to_string() + "/" + lam.to_string() +
                                " is not a horizontal strip");
  // Strip columns, scanned top row to bottom; each column appears at most once.
  std::vector<std::pair<int, int>> cols;  // (column, row)
  for (int i = 0; i < lam.k(); ++i)
    for (int c = nu.part(i); c > lam.part(i); --c) cols.push_back({c, i});
  std::vector<StripBlock> blocks;
  size_t p = 0;
  while (p < cols.size()) {
    StripBlock b{cols[p].first, 1};
    while (p + 1 < cols.size() && cols[p + 1].first == cols[p].first - 1) {
      ++p;
      ++b.boxes;
    }
    blocks.push_back(b);
    ++p;
  }
  return blocks;
}

TPoly pieri_coefficient(const Partition& lam, const Partition& nu) {
  std::vector<StripBlock> blocks = strip_blocks(lam, nu);
  if (blocks.empty()) throw std::invalid_argument("pieri_coefficient: empty strip");
  MultVector mnu = nu.to_multiplicities();
  TPoly prod(1);
  for (const StripBlock& b : blocks) prod *= TPoly(1) - TPoly::t_power(mnu.m[b.column]);
  return TPoly::exact_divide(prod, TPoly(1) - TPoly::t_power(1));
}

}  // namespace hallcomb
