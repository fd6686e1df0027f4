#pragma once

// Test-side oracles, deliberately built on different machinery than the
// library: label-propagation partitions over full-group moves, exhaustive
// subgroup enumeration, brute-force searches over small coset actions, and
// a bounded rewrite-graph connectivity checker for signed words.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "permrel/group.hpp"
#include "permrel/monoid.hpp"
#include "permrel/perm.hpp"
#include "permrel/presentation.hpp"
#include "permrel/word.hpp"

namespace testsupport {

using namespace permrel;

inline std::vector<Perm> all_perms(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Perm> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

/// Every subgroup of Sym_n for n <= 4 (each is generated by at most two
/// elements there), deduplicated by element set.
inline std::vector<PermGroup> all_subgroups(int n) {
  const std::vector<Perm> sym = all_perms(n);
  std::set<std::vector<Perm>> element_sets;
  std::vector<PermGroup> out;
  auto add = [&](const std::vector<Perm>& gens) {
    PermGroup h = close(n, gens);
    if (element_sets.insert(h.elements).second) out.push_back(std::move(h));
  };
  add({});
  for (const Perm& a : sym) {
    add({a});
    for (const Perm& b : sym) add({a, b});
  }
  return out;
}

/// Min-label propagation over single moves by every non-identity element of
/// the full group H (not just generators): canonical[code] = least code in
/// the congruence class of that length-m word.
inline std::vector<std::int64_t> oracle_canonicals(const Presentation& p, int m) {
  std::int64_t total = 1;
  for (int i = 0; i < m; ++i) total *= p.n;
  std::vector<std::int64_t> label(static_cast<std::size_t>(total));
  for (std::int64_t c = 0; c < total; ++c) label[static_cast<std::size_t>(c)] = c;

  std::vector<std::int64_t> pow(static_cast<std::size_t>(m) + 1, 1);
  for (int i = 1; i <= m; ++i) pow[static_cast<std::size_t>(i)] = pow[static_cast<std::size_t>(i - 1)] * p.n;

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::int64_t c = 0; c < total; ++c) {
      PosWord w = decode_word(c, m, p.n);
      for (int pos = 0; pos + p.l <= m; ++pos) {
        for (const Perm& s : p.H.elements) {
          if (s.is_identity()) continue;
          PosWord v = w;
          for (int j = 0; j < p.l; ++j) v[static_cast<std::size_t>(pos + j)] = s.apply(w[static_cast<std::size_t>(pos + j)]);
          const std::int64_t d = encode_word(v, p.n);
          const std::int64_t lo = std::min(label[static_cast<std::size_t>(c)], label[static_cast<std::size_t>(d)]);
          if (label[static_cast<std::size_t>(c)] != lo || label[static_cast<std::size_t>(d)] != lo) {
            label[static_cast<std::size_t>(c)] = lo;
            label[static_cast<std::size_t>(d)] = lo;
            changed = true;
          }
        }
      }
    }
  }
  // Resolve chains: labels point at smaller codes until fixed.
  for (std::int64_t c = 0; c < total; ++c) {
    std::int64_t r = c;
    while (label[static_cast<std::size_t>(r)] != r) r = label[static_cast<std::size_t>(r)];
    label[static_cast<std::size_t>(c)] = r;
  }
  return label;
}

inline std::uint64_t oracle_class_count(const Presentation& p, int m) {
  const auto canon = oracle_canonicals(p, m);
  std::uint64_t count = 0;
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(canon.size()); ++c)
    if (canon[static_cast<std::size_t>(c)] == c) ++count;
  return count;
}

/// Is there a transitive action of the generators on {1..k} in which every
/// relator (over all of H) acts trivially and every representative letter
/// fixes the point 1? Searched by brute force over all (k!)^n assignments;
/// the largest such k equals the subgroup index realized by the coset table.
inline bool action_exists(const Presentation& p, int k) {
  const std::vector<Perm> cand = all_perms(k);
  std::vector<std::size_t> pick(static_cast<std::size_t>(p.n), 0);
  std::vector<char> is_rep(static_cast<std::size_t>(p.n) + 1, 0);
  for (int r : p.reps()) is_rep[static_cast<std::size_t>(r)] = 1;

  while (true) {
    bool ok = true;
    for (int i = 1; i <= p.n && ok; ++i)
      if (is_rep[static_cast<std::size_t>(i)] && cand[pick[static_cast<std::size_t>(i - 1)]].apply(1) != 1) ok = false;
    if (ok) {
      // relators trivial: trace x_tuple then inverse of sigma image
      for (const Perm& s : p.H.elements) {
        if (!ok) break;
        if (s.is_identity()) continue;
        std::vector<int> tuple(static_cast<std::size_t>(p.l), 1);
        while (ok) {
          for (int start = 1; start <= k && ok; ++start) {
            int c = start;
            for (int t : tuple) c = cand[pick[static_cast<std::size_t>(t - 1)]].apply(c);
            int d = start;
            for (int t : tuple) d = cand[pick[static_cast<std::size_t>(s.apply(t) - 1)]].apply(d);
            if (c != d) ok = false;
          }
          int pos = p.l - 1;
          while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == p.n) {
            tuple[static_cast<std::size_t>(pos)] = 1;
            --pos;
          }
          if (pos < 0) break;
          ++tuple[static_cast<std::size_t>(pos)];
        }
      }
      if (ok) {  // transitivity under the generated action
        std::vector<char> seen(static_cast<std::size_t>(k) + 1, 0);
        std::deque<int> queue{1};
        seen[1] = 1;
        int reached = 0;
        while (!queue.empty()) {
          int c = queue.front();
          queue.pop_front();
          ++reached;
          for (int i = 0; i < p.n; ++i) {
            const Perm& g = cand[pick[static_cast<std::size_t>(i)]];
            for (int next : {g.apply(c), g.inverse().apply(c)})
              if (!seen[static_cast<std::size_t>(next)]) {
                seen[static_cast<std::size_t>(next)] = 1;
                queue.push_back(next);
              }
          }
        }
        if (reached == k) return true;
      }
    }
    std::size_t pos = 0;
    while (pos < pick.size() && pick[pos] + 1 == cand.size()) pick[pos++] = 0;
    if (pos == pick.size()) return false;
    ++pick[pos];
  }
}

inline int oracle_index(const Presentation& p, int bound) {
  int best = 1;
  for (int k = 1; k <= bound; ++k)
    if (action_exists(p, k)) best = k;
  return best;
}

/// Bounded rewrite graph on signed words: free insertions/deletions of
/// inverse pairs plus window moves on same-sign runs. Every edge must join
/// words with equal invariants (soundness); every invariant collision among
/// words of length <= word_len must lie in one component (completeness).
struct ConnectivityReport {
  std::uint64_t words = 0;
  std::uint64_t collision_groups = 0;  // invariant classes with >= 2 words
  std::uint64_t unsound_edges = 0;
  std::uint64_t unexplained_groups = 0;
};

inline ConnectivityReport signed_word_connectivity(const Presentation& p, const CosetTable& ct,
                                                   int word_len, int universe_len) {
  std::vector<std::vector<int>> words;        // letters
  std::unordered_map<std::string, int> index; // packed -> id
  auto pack = [](const std::vector<int>& w) {
    std::string s;
    s.reserve(w.size());
    for (int a : w) s.push_back(static_cast<char>((std::abs(a) << 1) | (a < 0 ? 1 : 0)));
    return s;
  };
  std::vector<std::vector<int>> layer{{}};
  words.push_back({});
  index.emplace("", 0);
  for (int len = 1; len <= universe_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : layer)
      for (int i = 1; i <= p.n; ++i)
        for (int sgn : {1, -1}) {
          std::vector<int> e = w;
          e.push_back(sgn * i);
          index.emplace(pack(e), static_cast<int>(words.size()));
          words.push_back(e);
          next.push_back(std::move(e));
        }
    layer = std::move(next);
  }

  std::vector<std::string> inv_key(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    const GInvariant iv = invariant(SignedWord{words[i], false}, p, ct);
    std::string key = std::to_string(iv.coset) + "|";
    for (int a : iv.pi_word.letters) key += std::to_string(a) + ",";
    inv_key[i] = std::move(key);
  }

  std::vector<int> parent(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  ConnectivityReport rep;
  rep.words = words.size();
  auto join = [&](int a, const std::vector<int>& target) {
    auto it = index.find(pack(target));
    if (it == index.end()) return;
    const int b = it->second;
    if (inv_key[static_cast<std::size_t>(a)] != inv_key[static_cast<std::size_t>(b)]) ++rep.unsound_edges;
    const int ra = find(a), rb = find(b);
    if (ra != rb) parent[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
  };

  const std::vector<Perm> moves = p.move_perms();
  for (std::size_t id = 0; id < words.size(); ++id) {
    const std::vector<int>& w = words[id];
    const int len = static_cast<int>(w.size());
    for (int i = 0; i + 1 < len; ++i) {  // deletions
      if (w[static_cast<std::size_t>(i)] != -w[static_cast<std::size_t>(i + 1)]) continue;
      std::vector<int> e;
      for (int j = 0; j < len; ++j)
        if (j != i && j != i + 1) e.push_back(w[static_cast<std::size_t>(j)]);
      join(static_cast<int>(id), e);
    }
    if (len + 2 <= universe_len) {  // insertions
      for (int pos = 0; pos <= len; ++pos)
        for (int i = 1; i <= p.n; ++i)
          for (int sgn : {1, -1}) {
            std::vector<int> e;
            e.reserve(static_cast<std::size_t>(len) + 2);
            e.insert(e.end(), w.begin(), w.begin() + pos);
            e.push_back(sgn * i);
            e.push_back(-sgn * i);
            e.insert(e.end(), w.begin() + pos, w.end());
            join(static_cast<int>(id), e);
          }
    }
    for (int pos = 0; pos + p.l <= len; ++pos) {  // window moves on same-sign runs
      bool all_pos = true, all_neg = true;
      for (int j = 0; j < p.l; ++j) {
        (w[static_cast<std::size_t>(pos + j)] > 0 ? all_neg : all_pos) = false;
      }
      if (!all_pos && !all_neg) continue;
      for (const Perm& s : moves) {
        std::vector<int> e = w;
        for (int j = 0; j < p.l; ++j) {
          const int a = w[static_cast<std::size_t>(pos + j)];
          e[static_cast<std::size_t>(pos + j)] = a > 0 ? s.apply(a) : -s.apply(-a);
        }
        join(static_cast<int>(id), e);
      }
    }
  }

  // Group the short words by invariant; each group must be one component.
  std::map<std::string, std::vector<int>> groups;
  for (std::size_t i = 0; i < words.size(); ++i)
    if (static_cast<int>(words[i].size()) <= word_len)
      groups[inv_key[i]].push_back(static_cast<int>(i));
  for (const auto& [key, ids] : groups) {
    if (ids.size() < 2) continue;
    ++rep.collision_groups;
    const int root = find(ids.front());
    for (int id : ids)
      if (find(id) != root) {
        ++rep.unexplained_groups;
        break;
      }
  }
  return rep;
}

}  // namespace testsupport
