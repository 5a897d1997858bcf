#pragma once

#include <algorithm>
#include <vector>

#include "ssi/rational.hpp"

namespace ssi {

/// Sub-interval (c / 2^k, (c + 1) / 2^k) of (0, 1), or the exact root c / 2^k.
struct DyadicCell {
  Integer c;
  unsigned k = 0;
  bool exact = false;

  Rational lo() const;
  Rational hi() const;
};

/// Descartes bisection on (0, 1). `Ring` supplies
///   int sign(const T&), T add(const T&, const T&), T shl(const T&, unsigned).
/// The input must have no multiple roots in (0, 1). Cells come back sorted.
template <class T, class Ring>
std::vector<DyadicCell> descartes_unit(std::vector<T> q, Ring& ring, unsigned max_depth = 4096) {
  auto drop_trailing = [&](std::vector<T>& p) {
    while (!p.empty() && ring.sign(p.back()) == 0) p.pop_back();
  };
  auto taylor1 = [&](std::vector<T>& p) {
    std::size_t n = p.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = n - 1; j-- > i;) p[j] = ring.add(p[j], p[j + 1]);
    }
  };
  // Upper bound on roots in (0, 1): sign variations of (x+1)^n q(1/(x+1)).
  auto var01 = [&](const std::vector<T>& p) {
    std::vector<T> r(p.rbegin(), p.rend());
    taylor1(r);
    int prev = 0;
    int count = 0;
    for (const auto& x : r) {
      int s = ring.sign(x);
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
    return count;
  };

  struct Node {
    std::vector<T> q;
    Integer c;
    unsigned k;
  };
  std::vector<DyadicCell> out;
  drop_trailing(q);
  // Strip roots at zero: they are not in the open interval.
  while (!q.empty() && ring.sign(q.front()) == 0) q.erase(q.begin());
  std::vector<Node> stack;
  stack.push_back({std::move(q), Integer(0), 0});
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    if (node.q.size() <= 1) continue;
    int v = var01(node.q);
    if (v == 0) continue;
    if (v == 1) {
      out.push_back({node.c, node.k, false});
      continue;
    }
    if (node.k >= max_depth) throw CertificationError("root isolation depth cap reached (multiple root?)");
    std::size_t n = node.q.size() - 1;
    std::vector<T> left(node.q.size());
    for (std::size_t i = 0; i <= n; ++i) left[i] = ring.shl(node.q[i], static_cast<unsigned>(n - i));
    std::vector<T> right = left;
    taylor1(right);
    Integer c2 = node.c * 2;
    if (ring.sign(right.front()) == 0) {
      out.push_back({c2 + 1, node.k + 1, true});
      while (!right.empty() && ring.sign(right.front()) == 0) right.erase(right.begin());
    }
    stack.push_back({std::move(right), c2 + 1, node.k + 1});
    stack.push_back({std::move(left), c2, node.k + 1});
  }
  std::sort(out.begin(), out.end(), [](const DyadicCell& a, const DyadicCell& b) {
    Rational la = a.lo(), lb = b.lo();
    if (la != lb) return la < lb;
    return a.exact && !b.exact;
  });
  return out;
}

}  // namespace ssi
