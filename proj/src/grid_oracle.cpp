#include "zolo/grid_oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zolo/cheb_poly.hpp"
#include "zolo/remez.hpp"

namespace zolo {

namespace {

// Gauss-Jordan with partial pivoting; the augmented column is stored last.
std::vector<MPValue> gauss_jordan(std::vector<std::vector<MPValue>> m) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (abs(m[r][col]) > abs(m[piv][col])) piv = r;
    }
    if (m[piv][col].is_zero()) throw std::runtime_error("grid_oracle: singular reference system");
    std::swap(m[piv], m[col]);
    const MPValue inv = 1.0 / m[col][col];
    for (auto& v : m[col]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const MPValue f = m[r][col];
      for (std::size_t c = col; c <= n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::vector<MPValue> x;
  x.reserve(n);
  for (auto& row : m) x.push_back(std::move(row[n]));
  return x;
}

int sgn(const MPValue& v) { return v.sign() >= 0 ? 1 : -1; }

// N + 2 alternating local maxima of |r| over the grid, weakest ends dropped.
std::vector<std::size_t> dense_reseed(const std::vector<MPValue>& r, std::size_t target) {
  std::vector<std::size_t> picks;
  std::size_t best = 0;
  for (std::size_t i = 1; i <= r.size(); ++i) {
    if (i == r.size() || sgn(r[i]) != sgn(r[best])) {
      picks.push_back(best);
      best = i;
    } else if (abs(r[i]) > abs(r[best])) {
      best = i;
    }
  }
  while (picks.size() > target) {
    if (abs(r[picks.front()]) < abs(r[picks.back()])) picks.erase(picks.begin()); else picks.pop_back();
  }
  return picks;
}

}  // namespace

GridOracleResult grid_oracle(const ProblemSpec& spec, std::size_t grid_size, kernels::Exec exec) {
  validate(spec);
  const Bits bits = working_precision(spec);
  const ReducedProblem prob(spec, bits);
  const std::size_t deg = static_cast<std::size_t>(prob.degree());
  const std::size_t target = deg + 2;
  if (grid_size < target) {
    throw std::invalid_argument("grid_oracle: grid of " + std::to_string(grid_size) + " nodes cannot hold " +
                                std::to_string(target) + " reference points");
  }

  const std::vector<MPValue> nodes = chebyshev_lobatto(grid_size, prob.lo(), prob.hi());
  std::vector<MPValue> s, w, g;
  s.reserve(grid_size);
  w.reserve(grid_size);
  g.reserve(grid_size);
  const MPValue width = prob.hi() - prob.lo();
  for (const auto& t : nodes) {
    s.push_back((ldexp(t, 1) - prob.lo() - prob.hi()) / width);
    w.push_back(prob.weight(t));
    g.push_back(prob.target(t));
  }

  std::vector<std::size_t> ref(target);
  for (std::size_t j = 0; j < target; ++j) {
    ref[j] = static_cast<std::size_t>((j * (grid_size - 1) + (target - 1) / 2) / (target - 1));
  }

  const MPValue slack = ldexp(MPValue(1L, bits), -static_cast<long>(bits / 2));
  const int cap = 200 * static_cast<int>(target) + 200;
  GridOracleResult out;
  out.grid_size = grid_size;
  MPValue best_h(bits);
  int since_reseed = 0;

  for (int ex = 0;; ++ex) {
    std::vector<std::vector<MPValue>> sys(target, std::vector<MPValue>(target + 1, MPValue(bits)));
    for (std::size_t i = 0; i < target; ++i) {
      const std::size_t node = ref[i];
      MPValue pw(1L, bits);
      for (std::size_t j = 0; j <= deg; ++j) {
        sys[i][j] = w[node] * pw;
        pw = pw * s[node];
      }
      sys[i][target - 1] = MPValue(i % 2 == 0 ? 1L : -1L, bits);
      sys[i][target] = g[node];
    }
    std::vector<MPValue> sol = gauss_jordan(std::move(sys));
    const MPValue h = abs(sol.back());
    sol.pop_back();

    const std::vector<MPValue> r = kernels::power_residuals(sol, s, w, g, exec);
    std::size_t worst = 0;
    for (std::size_t i = 1; i < r.size(); ++i) {
      if (abs(r[i]) > abs(r[worst])) worst = i;
    }
    if (abs(r[worst]) <= h * (1.0 + slack)) {
      out.error = h;
      out.exchanges = ex;
      return out;
    }

    // Single-point exchange keeps h nondecreasing; a drop or the cap means stalling.
    const bool stalled = h < best_h * (1.0 - slack) || since_reseed >= cap;
    if (h > best_h) best_h = h;
    if (stalled) {
      if (out.reseeded) {
        throw ConvergenceError("grid_oracle: discrete exchange stalled after re-seed", {});
      }
      out.reseeded = true;
      since_reseed = 0;
      best_h = MPValue(bits);
      std::vector<std::size_t> fresh = dense_reseed(r, target);
      if (fresh.size() == target) {
        ref = std::move(fresh);
        continue;
      }
    }
    ++since_reseed;

    const int sw = sgn(r[worst]);
    if (worst < ref.front()) {
      if (sgn(r[ref.front()]) == sw) {
        ref.front() = worst;
      } else {
        ref.insert(ref.begin(), worst);
        ref.pop_back();
      }
    } else if (worst > ref.back()) {
      if (sgn(r[ref.back()]) == sw) {
        ref.back() = worst;
      } else {
        ref.push_back(worst);
        ref.erase(ref.begin());
      }
    } else {
      const auto hi_it = std::upper_bound(ref.begin(), ref.end(), worst);
      const std::size_t j = static_cast<std::size_t>(hi_it - ref.begin()) - 1;
      if (sgn(r[ref[j]]) == sw) ref[j] = worst; else ref[j + 1] = worst;
    }
  }
}

}  // namespace zolo
