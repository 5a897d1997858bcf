#include "oracles.hpp"

#include <utility>

namespace oracle {

Rational sylvester_resultant(const UPoly& a, const UPoly& b) {
  int m = a.degree();
  int n = b.degree();
  if (m < 0 || n < 0) return 0;
  if (m == 0 && n == 0) return 1;
  std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Rational>> mat(size, std::vector<Rational>(size));
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i <= m; ++i) mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = a[static_cast<std::size_t>(m - i)];
  }
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i <= n; ++i) mat[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + i)] = b[static_cast<std::size_t>(n - i)];
  }
  Rational det = 1;
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t piv = col;
    while (piv < size && mat[piv][col] == 0) ++piv;
    if (piv == size) return 0;
    if (piv != col) {
      std::swap(mat[piv], mat[col]);
      det = -det;
    }
    det *= mat[col][col];
    for (std::size_t r = col + 1; r < size; ++r) {
      if (mat[r][col] == 0) continue;
      Rational f = mat[r][col] / mat[col][col];
      for (std::size_t c = col; c < size; ++c) mat[r][c] -= f * mat[col][c];
    }
  }
  return det;
}

namespace {

int variations_at(const std::vector<UPoly>& seq, const Rational& x) {
  int prev = 0;
  int count = 0;
  for (const auto& p : seq) {
    int s = ssi::sign(p(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

int sturm_count(const UPoly& p, const Rational& lo, const Rational& hi) {
  std::vector<UPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    UPoly r = -(seq[seq.size() - 2] % seq.back());
    if (r.is_zero()) break;
    seq.push_back(r);
  }
  return variations_at(seq, lo) - variations_at(seq, hi);
}

}  // namespace oracle
