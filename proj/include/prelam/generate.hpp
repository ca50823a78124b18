#pragma once

#include <cstdint>
#include <random>

#include "prelam/instance.hpp"

namespace prelam {

/// m nested plus chords all crossed by n nested minus chords: mn crossings,
/// every accumulation flag set (truncation of a dense grid).
LamInstance generate_grid(int m, int n);

/// Coupled ideal k-gons, k >= 3: one singular class of size 2k.
LamInstance generate_prong(int k);

/// A chain of n disjoint plus chords (ends leaves, middle chords phantom)
/// linked by n-1 minus leaves.
LamInstance generate_path(int n);

/// Horizontal/vertical foliations of the diagonal strip, truncated to
/// |coordinate| <= width, with the horizontal bands around y = 4n removed;
/// band boundaries become phantoms accumulated from outside the band.
LamInstance generate_strip(int width);

/// Strip-style truncation whose removed bands sit at the y-values of the
/// lattice spanned by (1,mu) and (1,nu), within the given radius.
LamInstance generate_lattice(const Rational& mu, const Rational& nu, int radius);

/// Seeded random completable instance with at most max_per_sign chords per
/// sign: a random structured family composed with a random rotation and a
/// random order-preserving endpoint warp.
LamInstance generate_random(std::uint64_t seed, int max_per_sign);

/// The same, driven by an externally owned engine (for corpus loops).
LamInstance random_completable(std::mt19937_64& rng, int max_per_sign);

/// Random order-preserving endpoint relabeling of an instance (combinatorics
/// preserved exactly).
LamInstance random_warp(std::mt19937_64& rng, const LamInstance& instance);

}  // namespace prelam
