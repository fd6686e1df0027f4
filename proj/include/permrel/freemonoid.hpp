#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace permrel {

/// Words over an abstract alphabet; one char per letter.
using FreeWord = std::string;

/// Shortest u with w = u^k, via the smallest period dividing |w|
/// (failure-function method). Throws on the empty word.
FreeWord primitive_root(const FreeWord& w);

/// uv == vu, which for free-monoid words is equivalent to sharing a
/// primitive root. Both routes are computed and cross-checked.
bool commute(const FreeWord& u, const FreeWord& v);

struct ReversibilityReport {
  bool reversible_up_to_depth = false;
  // First pair s, t (ordered by length then lexicographically) with no
  // a, b in the generated submonoid satisfying as = bt within the bound.
  std::optional<std::pair<FreeWord, FreeWord>> counterexample;
};

/// Bounded right-reversibility test for the submonoid B generated by gens:
/// for every pair of distinct elements s, t with factorization length
/// <= depth, decides whether some a, b in B satisfy as = bt with
/// |as| <= depth * max generator length. Refutation within the bound is
/// definitive for it; absence of a counterexample at this depth is only
/// evidence, so the verdict name carries the depth.
ReversibilityReport right_reversible_bounded(const std::vector<FreeWord>& gens, int depth);

/// The common primitive root of all generators when one exists; then the
/// generated submonoid lies inside the powers of that root.
std::optional<FreeWord> cyclic_envelope(const std::vector<FreeWord>& gens);

}  // namespace permrel
