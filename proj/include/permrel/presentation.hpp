#pragma once

#include <vector>

#include "permrel/perm.hpp"

namespace permrel {

/// The data (n, l, H): n generators x_1..x_n, relation length l, and a
/// subgroup H of Sym_n acting on letter indices. Immutable once built.
struct Presentation {
  int n = 0;
  int l = 2;
  PermGroup H;

  int rank() const { return static_cast<int>(H.reps.size()); }  // orbit count r
  int rep_of(int letter) const { return H.rep_of[letter - 1]; }
  const std::vector<int>& reps() const { return H.reps; }

  /// The non-identity permutations used for one rewrite step: the given
  /// generators of H and their inverses, deduplicated. The congruence they
  /// generate equals the one over all of H, since applying sigma then tau
  /// to the same window realizes their product.
  std::vector<Perm> move_perms() const;

  std::uint64_t index_bound() const;  // |H|^(l-1)
};

Presentation make_presentation(int n, int l, const std::vector<Perm>& gens, int max_degree = 8);

}  // namespace permrel
