#pragma once

#include "prelam/rational.hpp"

namespace prelam {

/// A point of the circle S^1, stored as its normalized angle: an exact
/// rational in [0,1).  All order predicates are exact; no floating point
/// enters any decision.
struct CirclePoint {
  Rational t;

  CirclePoint() = default;
  explicit CirclePoint(Rational r) : t(r) {
    if (t.num() < 0 || t >= Rational::of(1)) throw Error("circle point out of [0,1): " + t.str());
  }
  static CirclePoint of(std::int64_t p, std::int64_t q) { return CirclePoint(Rational(p, q)); }
  static CirclePoint parse(const std::string& s) { return CirclePoint(Rational::parse(s)); }

  bool operator==(const CirclePoint& o) const { return t == o.t; }
  bool operator!=(const CirclePoint& o) const { return t != o.t; }
  bool operator<(const CirclePoint& o) const { return t < o.t; }
  bool operator>(const CirclePoint& o) const { return t > o.t; }
  bool operator<=(const CirclePoint& o) const { return t <= o.t; }

  std::string str() const { return t.str(); }
};

/// True iff b lies strictly inside the open arc traversed counterclockwise
/// from a to c.  Any coincidence among the arguments yields false.
bool cyclic_between(const CirclePoint& a, const CirclePoint& b, const CirclePoint& c);

/// The open counterclockwise arc from `from` to `to`.
struct Arc {
  CirclePoint from, to;

  Arc(CirclePoint f, CirclePoint t) : from(f), to(t) {
    if (from == to) throw Error("degenerate arc at " + from.str());
  }

  bool contains(const CirclePoint& p) const { return cyclic_between(from, p, to); }

  bool operator==(const Arc& o) const { return from == o.from && to == o.to; }
};

/// Midpoint of the counterclockwise arc from a to b (a != b).
CirclePoint arc_midpoint(const CirclePoint& a, const CirclePoint& b);

}  // namespace prelam
