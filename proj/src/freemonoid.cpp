#include "permrel/freemonoid.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "permrel/errors.hpp"

namespace permrel {

FreeWord primitive_root(const FreeWord& w) {
  if (w.empty()) throw ParseError("the empty word has no primitive root");
  const std::size_t n = w.size();
  std::vector<std::size_t> fail(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = fail[i - 1];
    while (k > 0 && w[i] != w[k]) k = fail[k - 1];
    if (w[i] == w[k]) ++k;
    fail[i] = k;
  }
  const std::size_t period = n - fail[n - 1];
  return n % period == 0 ? w.substr(0, period) : w;
}

bool commute(const FreeWord& u, const FreeWord& v) {
  if (u.empty() || v.empty()) throw ParseError("commute needs nonempty words");
  const bool direct = u + v == v + u;
  const bool via_roots = primitive_root(u) == primitive_root(v);
  if (direct != via_roots)
    throw std::logic_error("commutation and primitive roots disagree");
  return direct;
}

namespace {

// Progress through a block decomposition: state 0 sits at a block boundary,
// the others are (generator, offset) positions strictly inside one.
class BlockAutomaton {
 public:
  explicit BlockAutomaton(const std::vector<FreeWord>& gens) : gens_(gens) {
    base_.reserve(gens.size());
    int next = 1;
    for (const FreeWord& g : gens) {
      base_.push_back(next);
      next += static_cast<int>(g.size()) - 1;
    }
    count_ = next;
    for (const FreeWord& g : gens)
      for (char c : g)
        if (std::find(alphabet_.begin(), alphabet_.end(), c) == alphabet_.end())
          alphabet_.push_back(c);
  }

  int state_count() const { return count_; }
  const std::vector<char>& alphabet() const { return alphabet_; }

  void next(int state, char c, std::vector<int>& out) const {
    if (state == 0) {
      for (std::size_t gi = 0; gi < gens_.size(); ++gi)
        if (gens_[gi][0] == c)
          out.push_back(gens_[gi].size() == 1 ? 0 : base_[gi]);
    } else {
      const std::size_t gi = gen_of(state);
      const std::size_t off = static_cast<std::size_t>(state - base_[gi]) + 1;
      if (gens_[gi][off] == c)
        out.push_back(off + 1 == gens_[gi].size() ? 0 : state + 1);
    }
  }

 private:
  std::size_t gen_of(int state) const {
    std::size_t gi = gens_.size() - 1;
    while (base_[gi] > state) --gi;
    return gi;
  }
  const std::vector<FreeWord>& gens_;
  std::vector<int> base_;
  std::vector<char> alphabet_;
  int count_ = 0;
};

// Can some b-side state consume the whole stem and land on a boundary?
bool stem_consumable(const BlockAutomaton& aut, int start, const FreeWord& stem) {
  std::vector<char> seen(stem.size() * static_cast<std::size_t>(aut.state_count()) +
                             static_cast<std::size_t>(aut.state_count()),
                         0);
  std::vector<std::pair<std::size_t, int>> stack{{0, start}};
  std::vector<int> succ;
  while (!stack.empty()) {
    auto [j, s] = stack.back();
    stack.pop_back();
    auto& mark = seen[j * static_cast<std::size_t>(aut.state_count()) + static_cast<std::size_t>(s)];
    if (mark) continue;
    mark = 1;
    if (j == stem.size()) {
      if (s == 0) return true;
      continue;
    }
    succ.clear();
    aut.next(s, stem[j], succ);
    for (int t : succ) stack.emplace_back(j + 1, t);
  }
  return false;
}

}  // namespace

ReversibilityReport right_reversible_bounded(const std::vector<FreeWord>& gens, int depth) {
  if (gens.empty()) throw ParseError("need at least one generator");
  std::size_t max_len = 0;
  for (const FreeWord& g : gens) {
    if (g.empty()) throw ParseError("generators must be nonempty");
    max_len = std::max(max_len, g.size());
  }
  const std::size_t cap = static_cast<std::size_t>(depth) * max_len;

  // Pair candidates: products of at most `depth` generators.
  std::set<FreeWord> pool{FreeWord()};
  std::vector<FreeWord> frontier{FreeWord()};
  for (int d = 0; d < depth; ++d) {
    std::vector<FreeWord> next;
    for (const FreeWord& w : frontier)
      for (const FreeWord& g : gens) {
        FreeWord e = w + g;
        if (e.size() <= cap && pool.insert(e).second) next.push_back(std::move(e));
      }
    frontier = std::move(next);
  }
  std::vector<FreeWord> candidates(pool.begin(), pool.end());
  std::sort(candidates.begin(), candidates.end(), [](const FreeWord& a, const FreeWord& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });

  const BlockAutomaton aut(gens);
  const int states = aut.state_count();

  // as = bt forces the shorter of s, t to be a suffix of the longer, say
  // t = stem * s; then a = b * stem, so the pair is resolvable iff some
  // b in B with |bt| <= cap has b * stem in B again. Search the product of
  // two decomposition automata: both sides track b, then the second one
  // walks on through the stem.
  auto resolvable = [&](const FreeWord& s, const FreeWord& t) {
    const FreeWord& shorter = s.size() <= t.size() ? s : t;
    const FreeWord& longer = s.size() <= t.size() ? t : s;
    if (longer.compare(longer.size() - shorter.size(), shorter.size(), shorter) != 0) return false;
    const FreeWord stem = longer.substr(0, longer.size() - shorter.size());
    const std::size_t zmax = cap - longer.size();

    std::vector<char> seen(static_cast<std::size_t>(states) * static_cast<std::size_t>(states), 0);
    std::vector<std::pair<int, int>> layer{{0, 0}};
    seen[0] = 1;
    std::vector<int> sa, sb;
    for (std::size_t step = 0; step <= zmax; ++step) {
      for (const auto& [a, b] : layer)
        if (a == 0 && stem_consumable(aut, b, stem)) return true;
      if (step == zmax) break;
      std::vector<std::pair<int, int>> next;
      for (const auto& [a, b] : layer)
        for (char c : aut.alphabet()) {
          sa.clear();
          sb.clear();
          aut.next(a, c, sa);
          aut.next(b, c, sb);
          for (int na : sa)
            for (int nb : sb) {
              auto& mark = seen[static_cast<std::size_t>(na) * static_cast<std::size_t>(states) +
                                static_cast<std::size_t>(nb)];
              if (!mark) {
                mark = 1;
                next.emplace_back(na, nb);
              }
            }
        }
      layer = std::move(next);
      if (layer.empty()) break;
    }
    return false;
  };

  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = i + 1; j < candidates.size(); ++j)
      if (!resolvable(candidates[i], candidates[j]))
        return ReversibilityReport{false, std::make_pair(candidates[i], candidates[j])};
  return ReversibilityReport{true, std::nullopt};
}

std::optional<FreeWord> cyclic_envelope(const std::vector<FreeWord>& gens) {
  if (gens.empty()) throw ParseError("need at least one generator");
  FreeWord root = primitive_root(gens.front());
  for (const FreeWord& g : gens)
    if (primitive_root(g) != root) return std::nullopt;
  return root;
}

}  // namespace permrel
