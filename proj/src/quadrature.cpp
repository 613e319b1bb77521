#include <algorithm>
#include <vector>

#include "zolo/numerics.hpp"

namespace zolo {

namespace {

struct Panel {
  MPValue lo, mid, hi;
  MPValue f_lo, f_mid, f_hi;
  MPValue whole;  // Simpson estimate on [lo, hi]
  MPValue tol;
  int depth;
};

MPValue simpson(const MPValue& lo, const MPValue& hi, const MPValue& f_lo, const MPValue& f_mid,
                const MPValue& f_hi) {
  return (hi - lo) / 6.0 * (f_lo + f_mid * 4.0 + f_hi);
}

}  // namespace

QuadResult integrate(const ScalarFn& f, const MPValue& lo, const MPValue& hi, const Quadrature& quad) {
  const Bits bits = std::max({lo.bits(), hi.bits(), quad.abs_tol.bits()});
  QuadResult res{MPValue(bits), MPValue(bits), true, 0};
  if (lo == hi) return res;

  const MPValue mid = ldexp(lo + hi, -1);
  const MPValue f_lo = f(lo), f_mid = f(mid), f_hi = f(hi);
  std::vector<Panel> stack;
  stack.push_back({lo, mid, hi, f_lo, f_mid, f_hi, simpson(lo, hi, f_lo, f_mid, f_hi), quad.abs_tol, 0});

  while (!stack.empty()) {
    Panel p = std::move(stack.back());
    stack.pop_back();
    const MPValue left_mid = ldexp(p.lo + p.mid, -1);
    const MPValue right_mid = ldexp(p.mid + p.hi, -1);
    const MPValue f_lm = f(left_mid);
    const MPValue f_rm = f(right_mid);
    MPValue left = simpson(p.lo, p.mid, p.f_lo, f_lm, p.f_mid);
    MPValue right = simpson(p.mid, p.hi, p.f_mid, f_rm, p.f_hi);
    const MPValue diff = left + right - p.whole;
    const MPValue err = abs(diff) / 15.0;
    ++res.subdivisions;

    // Depth floor guards against a coincidentally small first difference.
    const bool accept = (err <= p.tol && p.depth >= 2) || res.subdivisions >= quad.max_subdivisions;
    if (accept) {
      if (err > p.tol) res.ok = false;
      res.value += left + right + diff / 15.0;
      res.error_estimate += err;
      continue;
    }
    const MPValue half_tol = ldexp(p.tol, -1);
    stack.push_back({p.mid, right_mid, p.hi, p.f_mid, f_rm, p.f_hi, std::move(right), half_tol, p.depth + 1});
    stack.push_back({p.lo, left_mid, p.mid, p.f_lo, f_lm, p.f_mid, std::move(left), half_tol, p.depth + 1});
  }
  return res;
}

}  // namespace zolo
