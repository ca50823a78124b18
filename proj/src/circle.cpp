#include "prelam/circle.hpp"

namespace prelam {

bool cyclic_between(const CirclePoint& a, const CirclePoint& b, const CirclePoint& c) {
  if (a == b || b == c || a == c) return false;
  if (a < c) return a < b && b < c;
  // Arc wraps through 0.
  return b > a || b < c;
}

CirclePoint arc_midpoint(const CirclePoint& a, const CirclePoint& b) {
  if (a == b) throw Error("midpoint of degenerate arc");
  Rational two = Rational::of(2);
  if (a < b) return CirclePoint((a.t + b.t) / two);
  return CirclePoint(((a.t + b.t + Rational::of(1)) / two).mod1());
}

}  // namespace prelam
