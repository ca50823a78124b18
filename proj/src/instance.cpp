#include "prelam/instance.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace prelam {

Chord::Chord(CirclePoint x, CirclePoint y, Sign s, ChordStatus st, bool accxy, bool accyx)
    : sign(s), status(st) {
  if (x == y) throw Error("degenerate chord at " + x.str());
  if (x < y) {
    a = x;
    b = y;
    acc_ab = accxy;
    acc_ba = accyx;
  } else {
    a = y;
    b = x;
    acc_ab = accyx;
    acc_ba = accxy;
  }
}

std::string Chord::str() const {
  std::string s;
  s += sign_char(sign);
  s += "{" + a.str() + "," + b.str() + "}";
  if (is_phantom()) s += "p";
  return s;
}

bool crosses(const CirclePoint& xa, const CirclePoint& xb, const CirclePoint& ya,
             const CirclePoint& yb) {
  if (xa == ya || xa == yb || xb == ya || xb == yb) return false;
  bool a_in = cyclic_between(ya, xa, yb);
  bool b_in = cyclic_between(ya, xb, yb);
  return a_in != b_in;
}

bool crosses(const Chord& x, const Chord& y) { return crosses(x.a, x.b, y.a, y.b); }

LamInstance LamInstance::canonicalized() const {
  LamInstance out = *this;
  auto key = [](const Chord& c) {
    return std::tuple(c.a.t.num(), c.a.t.den(), c.b.t.num(), c.b.t.den(),
                      c.status == ChordStatus::leaf ? 0 : 1, c.acc_ab, c.acc_ba);
  };
  auto cmp = [&](const Chord& x, const Chord& y) { return key(x) < key(y); };
  std::sort(out.plus.begin(), out.plus.end(), cmp);
  std::sort(out.minus.begin(), out.minus.end(), cmp);
  return out;
}

bool LamInstance::same_chords(const LamInstance& o) const {
  LamInstance x = canonicalized();
  LamInstance y = o.canonicalized();
  auto eq = [](const std::vector<Chord>& u, const std::vector<Chord>& v) {
    if (u.size() != v.size()) return false;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (!(u[i].a == v[i].a && u[i].b == v[i].b && u[i].status == v[i].status &&
            u[i].acc_ab == v[i].acc_ab && u[i].acc_ba == v[i].acc_ba)) {
        return false;
      }
    }
    return true;
  };
  return eq(x.plus, y.plus) && eq(x.minus, y.minus);
}

namespace {

// Laminar sweep over one family: reports whether any two chords cross.
// Chords of one sign must be pairwise non-crossing, i.e., their endpoint
// intervals nested or disjoint (shared endpoints allowed).
bool family_has_crossing(const std::vector<Chord>& chords) {
  const int n = static_cast<int>(chords.size());
  if (n < 2) return false;

  struct Ev {
    Rational pos;
    bool close;
    int chord;
  };
  std::vector<Ev> events;
  events.reserve(2 * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    events.push_back({chords[i].a.t, false, i});
    events.push_back({chords[i].b.t, true, i});
  }
  std::sort(events.begin(), events.end(), [&](const Ev& x, const Ev& y) {
    if (x.pos != y.pos) return x.pos < y.pos;
    if (x.close != y.close) return x.close;  // closes before opens
    if (!x.close) {
      // Opens at the same point: outermost (largest close) first.
      return chords[y.chord].b < chords[x.chord].b;
    }
    return false;
  });

  std::vector<int> stack;
  std::size_t i = 0;
  while (i < events.size()) {
    std::size_t j = i;
    while (j < events.size() && events[j].pos == events[i].pos) ++j;
    // Closes at this position must sit on top of the stack.
    std::vector<char> closing_here;
    closing_here.assign(static_cast<std::size_t>(n), 0);
    int pending = 0;
    for (std::size_t k = i; k < j; ++k) {
      if (events[k].close) {
        closing_here[static_cast<std::size_t>(events[k].chord)] = 1;
        ++pending;
      }
    }
    while (pending > 0) {
      if (stack.empty()) return true;  // close without matching open: cannot happen
      int top = stack.back();
      if (!closing_here[static_cast<std::size_t>(top)]) return true;  // interleaved
      stack.pop_back();
      closing_here[static_cast<std::size_t>(top)] = 0;
      --pending;
    }
    // Opens, outermost first (already ordered by the sort of `order` then stable pos sort).
    for (std::size_t k = i; k < j; ++k) {
      if (!events[k].close) stack.push_back(events[k].chord);
    }
    i = j;
  }
  return false;
}

void list_crossing_pairs(const std::vector<Chord>& chords, Sign sign, ValidationReport& report) {
  const std::size_t cap = 64;
  for (std::size_t i = 0; i < chords.size(); ++i) {
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      if (crosses(chords[i], chords[j])) {
        report.violations.push_back(
            {"same-sign-crossing",
             chords[i].str() + " crosses " + chords[j].str(),
             {{sign, static_cast<int>(i)}, {sign, static_cast<int>(j)}}});
        if (report.violations.size() >= cap) return;
      }
    }
  }
}

}  // namespace

ValidationReport validate(const LamInstance& instance) {
  ValidationReport report;

  for (Sign sign : {Sign::plus, Sign::minus}) {
    const auto& fam = instance.family(sign);
    if (family_has_crossing(fam)) list_crossing_pairs(fam, sign, report);

    // Duplicates within the sign.
    std::map<std::pair<std::string, std::string>, int> seen;
    for (std::size_t i = 0; i < fam.size(); ++i) {
      auto key = std::make_pair(fam[i].a.str(), fam[i].b.str());
      auto it = seen.find(key);
      if (it != seen.end()) {
        report.violations.push_back({"duplicate-chord",
                                     "duplicate chord " + fam[i].str(),
                                     {{sign, it->second}, {sign, static_cast<int>(i)}}});
      } else {
        seen[key] = static_cast<int>(i);
      }
    }

    for (std::size_t i = 0; i < fam.size(); ++i) {
      if (fam[i].is_phantom() && !fam[i].acc_ab && !fam[i].acc_ba) {
        report.violations.push_back({"phantom-without-acc",
                                     "phantom " + fam[i].str() + " has no accumulation flag",
                                     {{sign, static_cast<int>(i)}}});
      }
    }
  }

  // Transversality: no endpoint pair appears in both families.
  std::map<std::pair<std::string, std::string>, int> plus_pairs;
  for (std::size_t i = 0; i < instance.plus.size(); ++i) {
    plus_pairs[{instance.plus[i].a.str(), instance.plus[i].b.str()}] = static_cast<int>(i);
  }
  for (std::size_t j = 0; j < instance.minus.size(); ++j) {
    auto it = plus_pairs.find({instance.minus[j].a.str(), instance.minus[j].b.str()});
    if (it != plus_pairs.end()) {
      report.violations.push_back(
          {"transversality",
           "chord " + instance.minus[j].str() + " appears in both families",
           {{Sign::plus, it->second}, {Sign::minus, static_cast<int>(j)}}});
    }
  }

  return report;
}

void require_valid(const LamInstance& instance) {
  auto report = validate(instance);
  if (!report.ok()) {
    throw Error("invalid instance: " + report.violations.front().code + ": " +
                report.violations.front().message);
  }
}

}  // namespace prelam
