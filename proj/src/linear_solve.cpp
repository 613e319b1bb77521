#include <numeric>
#include <stdexcept>
#include <utility>

#include "zolo/numerics.hpp"

namespace zolo {

std::vector<MPValue> solve_dense(std::vector<MPValue> a, std::vector<MPValue> b) {
  const std::size_t n = b.size();
  if (a.size() != n * n) throw std::invalid_argument("solve_dense: matrix/vector size mismatch");
  std::vector<std::size_t> col(n);
  std::iota(col.begin(), col.end(), 0);
  auto at = [&](std::size_t r, std::size_t c) -> MPValue& { return a[r * n + c]; };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = k, pc = k;
    MPValue best = abs(at(k, k));
    for (std::size_t r = k; r < n; ++r) {
      for (std::size_t c = k; c < n; ++c) {
        MPValue v = abs(at(r, c));
        if (v > best) {
          best = std::move(v);
          pr = r;
          pc = c;
        }
      }
    }
    if (best.is_zero()) throw std::runtime_error("solve_dense: singular system");
    if (pr != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(pr, c));
      std::swap(b[k], b[pr]);
    }
    if (pc != k) {
      for (std::size_t r = 0; r < n; ++r) std::swap(at(r, k), at(r, pc));
      std::swap(col[k], col[pc]);
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      if (at(r, k).is_zero()) continue;
      const MPValue factor = at(r, k) / at(k, k);
      for (std::size_t c = k + 1; c < n; ++c) at(r, c) -= factor * at(k, c);
      b[r] -= factor * b[k];
    }
  }

  std::vector<MPValue> y(n);
  for (std::size_t k = n; k-- > 0;) {
    MPValue s = b[k];
    for (std::size_t c = k + 1; c < n; ++c) s -= at(k, c) * y[c];
    y[k] = s / at(k, k);
  }
  std::vector<MPValue> x(n);
  for (std::size_t k = 0; k < n; ++k) x[col[k]] = std::move(y[k]);
  return x;
}

}  // namespace zolo
