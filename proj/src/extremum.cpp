#include <stdexcept>
#include <utility>

#include "zolo/numerics.hpp"

namespace zolo {

ExtremumResult find_extremum(const ScalarFn& f, const Bracket& bracket, const MPValue& tol,
                             Extremum kind, int max_iterations) {
  if (!(bracket.left < bracket.mid && bracket.mid < bracket.right)) {
    throw std::invalid_argument("find_extremum: bracket must satisfy left < mid < right");
  }
  const double orient = kind == Extremum::Maximum ? 1.0 : -1.0;
  auto score = [&](const MPValue& t) { return f(t) * orient; };

  MPValue a = bracket.left;
  MPValue c = bracket.right;
  MPValue b = bracket.mid;
  MPValue fb = score(b);
  if (!(fb >= score(a) && fb >= score(c))) {
    throw std::invalid_argument("find_extremum: middle point does not bracket an extremum");
  }

  const Bits bits = b.bits();
  // 2 - golden ratio
  const MPValue shrink = (3.0 - sqrt(MPValue(5L, bits))) / 2.0;

  ExtremumResult res;
  int it = 0;
  // Probe inside the larger of the two sub-intervals.
  while (c - a > tol && it < max_iterations) {
    ++it;
    MPValue x = (b - a < c - b) ? b + shrink * (c - b) : b - shrink * (b - a);
    MPValue fx = score(x);
    if (fx > fb) {
      if (x > b) a = std::move(b); else c = std::move(b);
      b = std::move(x);
      fb = std::move(fx);
    } else {
      if (x > b) c = std::move(x); else a = std::move(x);
    }
  }
  res.iterations = it;
  res.t = b;
  res.value = fb * orient;
  if (c - a > tol) {
    res.converged = false;
    // Report the outer candidate with the better score alongside.
    MPValue fa = score(a);
    MPValue fc = score(c);
    if (fa > fc) {
      res.alt_t = a;
      res.alt_value = fa * orient;
    } else {
      res.alt_t = c;
      res.alt_value = fc * orient;
    }
  }
  return res;
}

}  // namespace zolo
