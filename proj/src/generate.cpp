#include "prelam/generate.hpp"

#include <algorithm>
#include <set>

#include "prelam/conditions.hpp"
#include "prelam/plane.hpp"

namespace prelam {

LamInstance generate_grid(int m, int n) {
  if (m < 1 || n < 1) throw Error("grid: m and n must be >= 1");
  LamInstance out;
  Rational quarter(1, 4);
  for (int i = 1; i <= m; ++i) {
    Rational step(i, 4LL * (m + 1));
    CirclePoint a(step);
    CirclePoint b(Rational(3, 4) - step);
    out.plus.push_back(Chord(a, b, Sign::plus, ChordStatus::leaf, true, true));
  }
  for (int j = 1; j <= n; ++j) {
    Rational step(j, 4LL * (n + 1));
    CirclePoint c(quarter + step);
    CirclePoint d(Rational(1, 1) - step);
    out.minus.push_back(Chord(c, d, Sign::minus, ChordStatus::leaf, true, true));
  }
  return out;
}

LamInstance generate_prong(int k) {
  if (k < 3) throw Error("prong: k must be >= 3 (a 2-prong is a regular point)");
  LamInstance out;
  for (int i = 0; i < k; ++i) {
    CirclePoint x(Rational(i, k));
    CirclePoint y(Rational((i + 1) % k, k));
    // Accumulated on the short outer arc (x -> y), not toward the polygon.
    out.plus.push_back(Chord(x, y, Sign::plus, ChordStatus::leaf, true, false));
  }
  for (int i = 0; i < k; ++i) {
    CirclePoint x(Rational(2 * i + 1, 2LL * k));
    CirclePoint y(Rational((2 * i + 3) % (2 * k), 2LL * k));
    out.minus.push_back(Chord(x, y, Sign::minus, ChordStatus::leaf, true, false));
  }
  return out;
}

LamInstance generate_path(int n) {
  if (n < 2) throw Error("path: n must be >= 2");
  LamInstance out;
  const std::int64_t den = 6LL * n;
  for (int i = 0; i < n; ++i) {
    CirclePoint x(Rational(6LL * i, den));
    CirclePoint y(Rational(6LL * i + 3, den));
    ChordStatus status = (i == 0 || i == n - 1) ? ChordStatus::leaf : ChordStatus::phantom;
    out.plus.push_back(Chord(x, y, Sign::plus, status, true, false));
  }
  for (int i = 0; i + 1 < n; ++i) {
    CirclePoint x(Rational(6LL * i + 2, den));
    CirclePoint y(Rational(6LL * i + 7, den));
    out.minus.push_back(Chord(x, y, Sign::minus, ChordStatus::leaf, true, true));
  }
  return out;
}

namespace {

// Monotone squash of the line into a quarter circle: x -> x / (4 (1 + |x|)).
Rational squash(const Rational& x) {
  Rational ax = x.num() < 0 ? -x : x;
  return x / ((Rational::of(1) + ax) * Rational::of(4));
}

CirclePoint lower_boundary(const Rational& x) { return CirclePoint(Rational(1, 4) + squash(x)); }
CirclePoint upper_boundary(const Rational& x) { return CirclePoint(Rational(3, 4) - squash(x)); }

struct Band {
  Rational lo, hi;
};

// Strip-style truncation: horizontals outside the given bands (boundaries
// become phantoms), all verticals, sampled at step 1/2 within the window.
LamInstance strip_like(int width, const std::vector<Band>& bands) {
  if (width < 1) throw Error("strip: width must be >= 1");
  LamInstance out;
  Rational half(1, 2);

  auto horizontal = [&](const Rational& c, ChordStatus status, bool acc_above, bool acc_below) {
    CirclePoint a = lower_boundary(c + Rational::of(1));
    CirclePoint b = upper_boundary(c - Rational::of(1));
    // Higher horizontals lie on the (a,b) side.
    out.plus.push_back(Chord(a, b, Sign::plus, status, acc_above, acc_below));
  };

  std::set<std::string> emitted;
  for (std::int64_t s = -2 * width; s <= 2 * width; ++s) {
    Rational c = Rational(s, 2);
    bool inside = false;
    for (const auto& band : bands) {
      if (band.lo < c && c < band.hi) inside = true;
    }
    if (inside) continue;
    bool boundary = false;
    for (const auto& band : bands) {
      if (c == band.lo || c == band.hi) boundary = true;
    }
    if (boundary) continue;  // emitted below with phantom status
    if (emitted.insert(c.str()).second) horizontal(c, ChordStatus::leaf, true, true);
  }
  for (const auto& band : bands) {
    if (emitted.insert(band.lo.str()).second) {
      horizontal(band.lo, ChordStatus::phantom, false, true);  // accumulated from below
    }
    if (emitted.insert(band.hi.str()).second) {
      horizontal(band.hi, ChordStatus::phantom, true, false);  // accumulated from above
    }
  }

  for (std::int64_t s = -2 * width; s <= 2 * width; ++s) {
    Rational v = Rational(s, 2);
    out.minus.push_back(Chord(lower_boundary(v), upper_boundary(v), Sign::minus,
                              ChordStatus::leaf, true, true));
  }
  return out.canonicalized();
}

}  // namespace

LamInstance generate_strip(int width) {
  std::vector<Band> bands;
  for (std::int64_t n = -(width + 1) / 4 - 1; n <= (width + 1) / 4 + 1; ++n) {
    Rational center(4 * n, 1);
    Band band{center - Rational(1, 2), center + Rational(1, 2)};
    if (band.hi < Rational(-width, 1) || band.lo > Rational(width, 1)) continue;
    bands.push_back(band);
  }
  return strip_like(width, bands);
}

LamInstance generate_lattice(const Rational& mu, const Rational& nu, int radius) {
  if (radius < 1) throw Error("lattice: radius must be >= 1");
  // y-values of lattice points i (1, mu) + j (1, nu) inside the window.
  std::set<std::string> seen;
  std::vector<Rational> ys;
  for (int i = -4 * radius; i <= 4 * radius; ++i) {
    for (int j = -4 * radius; j <= 4 * radius; ++j) {
      Rational y = Rational(i, 1) * mu + Rational(j, 1) * nu;
      if (y < Rational(-radius, 1) || y > Rational(radius, 1)) continue;
      if (seen.insert(y.str()).second) ys.push_back(y);
    }
  }
  std::sort(ys.begin(), ys.end());

  // Bands of halfwidth 1/4 around lattice heights, merged when they touch.
  std::vector<Band> bands;
  Rational h(1, 4);
  for (const auto& y : ys) {
    Band band{y - h, y + h};
    if (!bands.empty() && band.lo <= bands.back().hi) {
      if (bands.back().hi < band.hi) bands.back().hi = band.hi;
    } else {
      bands.push_back(band);
    }
  }
  return strip_like(radius, bands);
}

LamInstance random_warp(std::mt19937_64& rng, const LamInstance& instance) {
  std::vector<CirclePoint> domain;
  for (Sign sign : {Sign::plus, Sign::minus}) {
    for (const auto& c : instance.family(sign)) {
      domain.push_back(c.a);
      domain.push_back(c.b);
    }
  }
  std::sort(domain.begin(), domain.end());
  domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
  const std::size_t m = domain.size();
  if (m == 0) return instance;

  const std::int64_t den = 1 << 20;
  std::set<std::int64_t> chosen;
  std::uniform_int_distribution<std::int64_t> dist(0, den - 1);
  while (chosen.size() < m) chosen.insert(dist(rng));
  std::vector<std::int64_t> targets(chosen.begin(), chosen.end());
  std::size_t shift = std::uniform_int_distribution<std::size_t>(0, m - 1)(rng);

  MapTable table;
  for (std::size_t i = 0; i < m; ++i) {
    table.entries.push_back(
        {domain[i], CirclePoint(Rational(targets[(i + shift) % m], den))});
  }
  return transport(instance, table);
}

LamInstance random_completable(std::mt19937_64& rng, int max_per_sign) {
  if (max_per_sign < 4) max_per_sign = 4;
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };

  LamInstance base;
  for (int attempt = 0; attempt < 32; ++attempt) {
    switch (pick(0, 5)) {
      case 0: {
        int m = pick(1, std::min(6, max_per_sign));
        int n = pick(1, std::min(6, max_per_sign));
        base = generate_grid(m, n);
        break;
      }
      case 1: {
        base = generate_prong(pick(3, std::min(8, max_per_sign)));
        break;
      }
      case 2: {
        // Prong with some sides declared as closure chords: exercises the
        // phantom-promotion path of the completion.
        base = generate_prong(pick(3, std::min(8, max_per_sign)));
        for (auto& c : base.plus) {
          if (pick(0, 2) == 0) c.status = ChordStatus::phantom;
        }
        break;
      }
      case 3: {
        base = generate_path(pick(2, std::min(6, max_per_sign)));
        break;
      }
      case 4: {
        base = generate_strip(pick(1, 2));
        break;
      }
      default: {
        base = generate_lattice(Rational(pick(3, 9), 2), Rational(pick(5, 13), 3), 1);
        break;
      }
    }
    if (static_cast<int>(base.plus.size()) > max_per_sign ||
        static_cast<int>(base.minus.size()) > max_per_sign) {
      continue;
    }
    LamInstance warped = random_warp(rng, base);
    if (validate(warped).ok() && check_completable(warped).overall) return warped;
  }
  // Fall back to a shape that is always completable at this size.
  return random_warp(rng, generate_grid(2, 2));
}

LamInstance generate_random(std::uint64_t seed, int max_per_sign) {
  std::mt19937_64 rng(seed);
  return random_completable(rng, max_per_sign);
}

}  // namespace prelam
