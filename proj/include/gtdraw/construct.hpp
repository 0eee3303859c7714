#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gtdraw/drawing.hpp"
#include "gtdraw/sweep.hpp"

namespace gtdraw {

// Harborth's twisted drawing of K_n on the cylinder: vertex i at angle
// i/(n+1), edges drawn as straight chart segments from their larger endpoint
// across the ray to the smaller one. Radii are i + 4^-i; the perturbation
// keeps mirror-symmetric crossings apart, which pure integer radii fail to do
// from n = 6 on. Crossing set: exactly the nested pairs {i,j} x {k,l} with
// i < k < l < j. Validity and the gt property are asserted on every call.
// Pre: n >= 3.
Drawing twisted(int n);

// Canonical encoding of a crossing set: the lexicographically least sorted
// pair list over vertex relabelings. Two drawings on n vertices are weakly
// isomorphic exactly when their keys are equal.
struct CanonicalKey {
  std::string bytes;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

// For n <= 8 the minimum is taken over all n! relabelings. Beyond that the
// vertices are first split by an iterated structural signature and the scan
// runs over the relabelings that respect the stabilized partition; the result
// is still a class invariant, just not always the global lexicographic
// minimum.
CanonicalKey canonical_key(const CrossingSet& cs, int n);

// 16 hex digits of FNV-1a over the key bytes; used to name per-class files.
std::string short_hash(const CanonicalKey& k);

// Same crossing pairs up to a vertex relabeling (key equality).
// Pre: a.n == b.n.
bool weakly_isomorphic(const Drawing& a, const Drawing& b);

struct EnumClass {
  CanonicalKey key;
  SweepWord witness;          // least emitted word of the class
  long long words_found = 0;  // sweep words that mapped to this class
  int empty_triangles = 0;
};

struct EnumResult {
  std::vector<EnumClass> classes;  // sorted by key
  int n = 0;
  bool exhaustive = false;
};

// One search node = one event placed during word completion.
inline constexpr long long kEnumBudgetDefault = 400'000'000;
inline constexpr long long kSampleBudgetDefault = 20'000'000;

// All generalized-twisted drawings of K_n up to weak isomorphism, by
// depth-first completion of sweep words vertex by vertex. Exhaustive for
// n <= 6 under the default budget; n = 7 is best effort. When the budget runs
// out a partial result is returned with exhaustive = false. Every class
// witness is re-verified (realization, validity, gt, and the lemma suite for
// n >= 4) before being returned. Pre: 3 <= n <= 7.
EnumResult enumerate_gt(int n, long long budget = kEnumBudgetDefault, int jobs = 1);

// Seeded randomized depth-first completion of a sweep word: random insertion
// ranks, block orders, and event interleavings, with backtracking. The result
// is deterministic in (n, seed). Throws SearchExhaustedError when the node
// budget runs out. Pre: n >= 3.
SweepWord random_gt_word(int n, std::uint64_t seed, long long budget = kSampleBudgetDefault);

// realize(random_gt_word(n, seed)), with validity and the gt property
// asserted on every call.
Drawing random_gt(int n, std::uint64_t seed);

namespace detail {

// Single-threaded reference enumeration that replays inherited crossings in
// their recorded order and prunes no interleavings. Slower than enumerate_gt
// by design; exists so tests can cross-check the class lists.
EnumResult enumerate_gt_plain(int n, long long budget = kEnumBudgetDefault);

// enumerate_gt with a visitor that sees every emitted word in emission
// order; the per-class words_found totals count exactly these words.
// Single-threaded so the order is reproducible. Pre: 3 <= n <= 6.
EnumResult enumerate_gt_observed(int n, const std::function<void(const SweepWord&)>& fn);

}  // namespace detail

}  // namespace gtdraw
