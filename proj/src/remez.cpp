#include "zolo/remez.hpp"

#include <algorithm>
#include <cstddef>
#include <exception>
#include <utility>

#include "zolo/numerics.hpp"

namespace zolo {

namespace {

struct Levelled {
  ChebPoly q;
  MPValue h;
};

// Solve sum_j c_j T_j(s_i) w(t_i) + (-1)^i h = g(t_i) on the reference.
Levelled level_reference(const ReducedProblem& prob, const std::vector<MPValue>& ref) {
  const std::size_t n = ref.size();
  const std::size_t deg = n - 2;
  const Bits bits = prob.bits();
  ChebPoly shape(prob.lo(), prob.hi(), {});
  std::vector<MPValue> a(n * n, MPValue(bits));
  std::vector<MPValue> b(n, MPValue(bits));
  for (std::size_t i = 0; i < n; ++i) {
    const MPValue s = shape.to_reference(ref[i]);
    const MPValue w = prob.weight(ref[i]);
    MPValue t_prev(1L, bits);
    MPValue t_cur = s;
    a[i * n + 0] = w;
    if (deg >= 1) a[i * n + 1] = w * s;
    for (std::size_t j = 2; j <= deg; ++j) {
      MPValue t_next = ldexp(s * t_cur, 1) - t_prev;
      a[i * n + j] = w * t_next;
      t_prev = std::move(t_cur);
      t_cur = std::move(t_next);
    }
    a[i * n + n - 1] = MPValue(i % 2 == 0 ? 1L : -1L, bits);
    b[i] = prob.target(ref[i]);
  }
  std::vector<MPValue> x = solve_dense(std::move(a), std::move(b));
  MPValue h = x.back();
  x.pop_back();
  return {ChebPoly(prob.lo(), prob.hi(), std::move(x)), std::move(h)};
}

struct Extremal {
  MPValue t;
  MPValue r;
  int sign;
};

struct ExtremaScan {
  std::vector<Extremal> points;
  MPValue probe_max;
};

int sign_of(const MPValue& v, int fallback) {
  const int s = v.sign();
  return s == 0 ? fallback : (s > 0 ? 1 : -1);
}

// Drop surplus extrema while keeping the signs alternating.
void trim_to(std::vector<Extremal>& ext, std::size_t target) {
  while (ext.size() > target) {
    if (ext.size() == target + 1) {
      if (abs(ext.front().r) < abs(ext.back().r)) ext.erase(ext.begin()); else ext.pop_back();
      continue;
    }
    std::size_t weakest = 0;
    for (std::size_t i = 1; i < ext.size(); ++i) {
      if (abs(ext[i].r) < abs(ext[weakest].r)) weakest = i;
    }
    if (weakest == 0 || weakest + 1 == ext.size()) {
      ext.erase(ext.begin() + static_cast<std::ptrdiff_t>(weakest));
      continue;
    }
    // Interior: removing it and its smaller neighbour keeps alternation.
    const std::size_t partner = abs(ext[weakest - 1].r) < abs(ext[weakest + 1].r) ? weakest - 1 : weakest + 1;
    const std::size_t first = std::min(weakest, partner);
    ext.erase(ext.begin() + static_cast<std::ptrdiff_t>(first), ext.begin() + static_cast<std::ptrdiff_t>(first) + 2);
  }
}

ExtremaScan locate_extrema(const ReducedProblem& prob, const ChebPoly& q, const std::vector<MPValue>& ref,
                           const MPValue& tol_t, kernels::Exec exec) {
  const std::size_t target = static_cast<std::size_t>(prob.degree()) + 2;
  std::vector<MPValue> probes = chebyshev_lobatto(8 * target, prob.lo(), prob.hi());
  probes.insert(probes.end(), ref.begin(), ref.end());
  std::sort(probes.begin(), probes.end(), [](const MPValue& x, const MPValue& y) { return x < y; });
  probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
  const std::vector<MPValue> r = kernels::residual_scan(prob, q, probes, exec);

  ExtremaScan scan;
  scan.probe_max = MPValue(prob.bits());
  for (const auto& v : r) scan.probe_max = max(scan.probe_max, abs(v));

  // One candidate per maximal run of equal sign.
  struct Seed {
    std::size_t idx;
    int sign;
  };
  std::vector<Seed> seeds;
  int prev_sign = sign_of(r[0], 1);
  std::size_t best = 0;
  for (std::size_t i = 1; i <= r.size(); ++i) {
    const int s = i < r.size() ? sign_of(r[i], prev_sign) : -prev_sign;
    if (s != prev_sign) {
      seeds.push_back({best, prev_sign});
      prev_sign = s;
      best = i;
    } else if (abs(r[i]) > abs(r[best])) {
      best = i;
    }
  }

  auto residual = [&](const MPValue& t) { return prob.residual(t, q(t)); };
  const std::size_t last = probes.size() - 1;
  std::vector<Extremal> ext(seeds.size());
  const auto count = static_cast<std::ptrdiff_t>(seeds.size());

  auto refine = [&](std::ptrdiff_t si) {
    const Seed& seed = seeds[static_cast<std::size_t>(si)];
    const double sg = seed.sign;
    auto score = [&](const MPValue& t) { return residual(t) * sg; };
    const std::size_t i = seed.idx;
    Bracket br;
    if (i == 0 || i == last) {
      // Endpoint candidate: accept unless the half-way point beats it.
      const std::size_t nb = i == 0 ? 1 : last - 1;
      MPValue mid = ldexp(probes[i] + probes[nb], -1);
      if (!(score(mid) > r[i] * sg)) {
        ext[static_cast<std::size_t>(si)] = {probes[i], r[i], seed.sign};
        return;
      }
      br = i == 0 ? Bracket{probes[0], std::move(mid), probes[1]} : Bracket{probes[last - 1], std::move(mid), probes[last]};
    } else {
      br = {probes[i - 1], probes[i], probes[i + 1]};
    }
    auto f = [&](const MPValue& t) { return score(t); };
    ExtremumResult er = find_extremum(f, br, tol_t, Extremum::Maximum);
    MPValue t = std::move(er.t);
    if (!er.converged && er.alt_value > er.value) t = std::move(er.alt_t);
    MPValue rv = residual(t);
    ext[static_cast<std::size_t>(si)] = {std::move(t), std::move(rv), seed.sign};
  };

  if (exec == kernels::Exec::Parallel) {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t si = 0; si < count; ++si) {
      try {
        refine(si);
      } catch (...) {
#pragma omp critical(zolo_refine_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else {
    for (std::ptrdiff_t si = 0; si < count; ++si) refine(si);
  }

  trim_to(ext, target);
  if (ext.size() < target) {
    throw ConvergenceError("residual alternates at " + std::to_string(ext.size()) + " points, need " +
                               std::to_string(target),
                           ref);
  }
  scan.points = std::move(ext);
  return scan;
}

MPValue levelness_of(const std::vector<Extremal>& ext) {
  MPValue hi = abs(ext.front().r);
  MPValue lo = hi;
  for (const auto& e : ext) {
    MPValue v = abs(e.r);
    if (v > hi) hi = v;
    if (v < lo) lo = v;
  }
  return (hi - lo) / hi;
}

}  // namespace

EquiSolution remez_solve(const ProblemSpec& spec, kernels::Exec exec) {
  validate(spec);
  const Bits bits = working_precision(spec);
  const ReducedProblem prob(spec, bits);
  const std::size_t target = static_cast<std::size_t>(prob.degree()) + 2;
  const MPValue tol_t = ldexp(MPValue(1L, bits), -static_cast<long>(bits / 2));
  const MPValue floor = ldexp(MPValue(1L, bits), 16 - static_cast<long>(bits));

  std::vector<MPValue> ref = chebyshev_lobatto(target, prob.lo(), prob.hi());
  std::vector<MPValue> history;
  for (int it = 1; it <= spec.max_iterations; ++it) {
    Levelled lv = level_reference(prob, ref);
    MPValue h_abs = abs(lv.h);
    if (h_abs < floor) {
      throw PrecisionError("levelled error " + h_abs.to_string(6) + " is within the rounding floor at " +
                           std::to_string(bits) + " bits; increase the mantissa width");
    }
    history.push_back(h_abs);
    ExtremaScan scan = locate_extrema(prob, lv.q, ref, tol_t, exec);
    MPValue lev = levelness_of(scan.points);
    MPValue peak(bits);
    for (const auto& e : scan.points) peak = max(peak, abs(e.r));
    const bool level = lev <= spec.level_tol;
    const bool no_excess = peak <= h_abs * (1.0 + spec.level_tol) && scan.probe_max <= h_abs * (1.0 + spec.level_tol);
    if (level && no_excess) {
      EquiSolution sol;
      sol.kind = spec.kind;
      sol.L = peak;
      sol.q = std::move(lv.q);
      sol.iterations = it;
      sol.levelness = std::move(lev);
      sol.level_history = std::move(history);
      sol.probe_max = std::move(scan.probe_max);
      sol.bits = bits;
      for (auto& e : scan.points) {
        MPValue x = sqrt(e.t);
        sol.alternation.push_back({std::move(e.t), std::move(x), std::move(e.r), e.sign});
      }
      return sol;
    }
    ref.clear();
    for (auto& e : scan.points) ref.push_back(std::move(e.t));
  }
  throw ConvergenceError("Remez exchange did not converge in " + std::to_string(spec.max_iterations) +
                             " iterations",
                         ref);
}

MPValue RationalExpansion::operator()(const MPValue& x) const {
  MPValue acc(x.bits());
  for (const auto& [e, c] : laurent) acc += c * pow(x, static_cast<long>(e));
  return acc;
}

RationalExpansion expand_rational(const EquiSolution& sol, const ProblemSpec& spec) {
  if (sol.kind != ProblemKind::WeightedSgn || spec.kind != ProblemKind::WeightedSgn) {
    throw std::invalid_argument("expand_rational: only the weighted sgn problem has a Laurent form");
  }
  // f(x) = Q(x^2) / x^(2k-1) = sum_j b_j x^(2j - 2k + 1)
  const std::vector<MPValue> power = sol.q.to_power_basis();
  RationalExpansion out;
  for (std::size_t j = 0; j < power.size(); ++j) {
    out.laurent.emplace(static_cast<int>(2 * j) - 2 * spec.k + 1, power[j]);
  }
  return out;
}

XAlternation alternation_in_x(const EquiSolution& sol) {
  XAlternation out;
  for (const auto& p : sol.alternation) out.x.push_back(p.x);
  if (out.x.empty()) return out;
  const MPValue slack = ldexp(MPValue(1L, sol.bits), 8 - static_cast<long>(sol.bits / 2));
  const MPValue a = sqrt(sol.q.lo());
  out.starts_at_a = abs(out.x.front() - a) <= slack;
  out.ends_at_one = abs(out.x.back() - 1.0) <= slack;
  return out;
}

}  // namespace zolo
