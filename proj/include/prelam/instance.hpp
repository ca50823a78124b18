#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "prelam/circle.hpp"

namespace prelam {

enum class Sign { plus, minus };

inline Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

enum class ChordStatus { leaf, phantom };

/// A chord of the disc, stored as an unordered pair of distinct circle
/// points with a < b.  The two sides of a chord are named by their ideal
/// arcs: side_ab faces the open arc (a,b) counterclockwise, side_ba faces
/// (b,a).  The per-side accumulation flags declare that, in the idealized
/// infinite prelamination, omitted same-sign leaves accumulate the chord
/// from that side.
struct Chord {
  CirclePoint a, b;
  Sign sign = Sign::plus;
  ChordStatus status = ChordStatus::leaf;
  bool acc_ab = false;
  bool acc_ba = false;

  Chord() = default;
  Chord(CirclePoint x, CirclePoint y, Sign s, ChordStatus st = ChordStatus::leaf,
        bool accxy = false, bool accyx = false);

  bool is_leaf() const { return status == ChordStatus::leaf; }
  bool is_phantom() const { return status == ChordStatus::phantom; }

  /// Accumulation flag of the side whose ideal arc is (from, to); `from`
  /// and `to` must be the chord endpoints in one of the two orders.
  bool acc_side(bool ab) const { return ab ? acc_ab : acc_ba; }

  bool same_endpoints(const Chord& o) const { return a == o.a && b == o.b; }
  bool has_endpoint(const CirclePoint& p) const { return a == p || b == p; }

  std::string str() const;
};

/// True iff the chords cross: each endpoint pair separates the other on the
/// circle.  Chords sharing an endpoint never cross.
bool crosses(const Chord& x, const Chord& y);
bool crosses(const CirclePoint& xa, const CirclePoint& xb, const CirclePoint& ya,
             const CirclePoint& yb);

/// Interpretation of the accumulation flags.  strict ignores them all
/// (small-case literal analysis); frontier honors them, modeling truncated
/// accumulating families.
enum class Mode { strict, frontier };

/// A finite annotated prelamination pair.
struct LamInstance {
  std::vector<Chord> plus;
  std::vector<Chord> minus;
  Mode mode = Mode::frontier;

  const std::vector<Chord>& family(Sign s) const { return s == Sign::plus ? plus : minus; }
  std::vector<Chord>& family(Sign s) { return s == Sign::plus ? plus : minus; }

  /// Effective accumulation flag under the instance mode.
  bool acc(const Chord& c, bool ab_side) const {
    return mode == Mode::frontier && c.acc_side(ab_side);
  }

  std::size_t chord_count() const { return plus.size() + minus.size(); }

  /// Chords of each family sorted by endpoints; used for canonical
  /// comparisons and deterministic output.
  LamInstance canonicalized() const;

  bool same_chords(const LamInstance& o) const;
};

/// Reference to a chord of an instance.
struct ChordRef {
  Sign sign;
  int index;
  bool operator==(const ChordRef& o) const { return sign == o.sign && index == o.index; }
  bool operator<(const ChordRef& o) const {
    if (sign != o.sign) return sign == Sign::plus;
    return index < o.index;
  }
};

struct Violation {
  std::string code;
  std::string message;
  std::vector<ChordRef> chords;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the prelamination-pair invariants: no same-sign crossings, no
/// duplicated chords (within a sign or across signs), and every phantom
/// carries at least one accumulation flag.
ValidationReport validate(const LamInstance& instance);

void require_valid(const LamInstance& instance);

}  // namespace prelam
