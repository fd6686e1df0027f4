#include "permrel/presentation.hpp"

#include <algorithm>
#include <set>

#include "permrel/errors.hpp"

namespace permrel {

std::vector<Perm> Presentation::move_perms() const {
  std::set<Perm> moves;
  for (const Perm& g : H.generators) {
    if (g.is_identity()) continue;
    moves.insert(g);
    moves.insert(g.inverse());
  }
  return {moves.begin(), moves.end()};
}

std::uint64_t Presentation::index_bound() const {
  // Saturates well below overflow; caps derived from it stay meaningful.
  constexpr std::uint64_t ceiling = 1'000'000'000'000ull;
  std::uint64_t b = 1;
  for (int i = 1; i < l; ++i) {
    b *= H.order();
    if (b > ceiling) return ceiling;
  }
  return b;
}

Presentation make_presentation(int n, int l, const std::vector<Perm>& gens, int max_degree) {
  if (l < 2) throw ParseError("relation length l must be at least 2");
  Presentation p;
  p.n = n;
  p.l = l;
  p.H = close(n, gens, max_degree);
  return p;
}

}  // namespace permrel
