#include "permrel/monoid.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <unordered_set>

#include "permrel/errors.hpp"

namespace permrel {

namespace {

std::string pack(const PosWord& w) {
  std::string s(w.size(), '\0');
  for (std::size_t i = 0; i < w.size(); ++i) s[i] = static_cast<char>(w[i]);
  return s;
}

PosWord unpack(const std::string& s) {
  PosWord w(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) w[i] = static_cast<int>(s[i]);
  return w;
}

// Applies every (window, move) rewrite to the packed word and feeds the
// results that differ from it to sink.
template <typename Sink>
void for_each_neighbor(const std::string& w, int l, const std::vector<Perm>& moves, Sink&& sink) {
  if (static_cast<int>(w.size()) < l) return;
  std::string out = w;
  for (std::size_t pos = 0; pos + static_cast<std::size_t>(l) <= w.size(); ++pos) {
    for (const Perm& s : moves) {
      for (int j = 0; j < l; ++j) out[pos + static_cast<std::size_t>(j)] = static_cast<char>(s.apply(w[pos + static_cast<std::size_t>(j)]));
      if (out != w) sink(out);
      for (int j = 0; j < l; ++j) out[pos + static_cast<std::size_t>(j)] = w[pos + static_cast<std::size_t>(j)];
    }
  }
}

std::int64_t checked_pow(int n, int m, std::int64_t cap) {
  std::int64_t v = 1;
  for (int i = 0; i < m; ++i) {
    v *= n;
    if (v > cap)
      throw CapExceeded("word count " + std::to_string(n) + "^" + std::to_string(m) +
                        " exceeds cap " + std::to_string(cap));
  }
  return v;
}

struct UnionFind {
  std::vector<std::int32_t> parent;
  explicit UnionFind(std::int64_t size) : parent(static_cast<std::size_t>(size)) {
    for (std::int64_t i = 0; i < size; ++i) parent[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(i);
  }
  std::int32_t find(std::int32_t x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b)
      parent[static_cast<std::size_t>(b)] = a;  // keep the least code on top
    else
      parent[static_cast<std::size_t>(a)] = b;
  }
};

}  // namespace

std::vector<PosWord> neighbors(const PosWord& w, const Presentation& p) {
  std::set<std::string> seen;
  for_each_neighbor(pack(w), p.l, p.move_perms(), [&](const std::string& v) { seen.insert(v); });
  std::vector<PosWord> out;
  out.reserve(seen.size());
  for (const std::string& s : seen) out.push_back(unpack(s));
  return out;
}

SClass class_of(const PosWord& w, const Presentation& p, std::size_t class_cap) {
  const std::vector<Perm> moves = p.move_perms();
  std::string start = pack(w);
  std::unordered_set<std::string> visited{start};
  std::deque<std::string> queue{start};
  std::string best = start;
  while (!queue.empty()) {
    std::string cur = std::move(queue.front());
    queue.pop_front();
    for_each_neighbor(cur, p.l, moves, [&](const std::string& nb) {
      if (visited.insert(nb).second) {
        if (visited.size() > class_cap)
          throw CapExceeded("congruence class larger than cap " + std::to_string(class_cap));
        if (nb < best) best = nb;
        queue.push_back(nb);
      }
    });
  }
  return SClass{unpack(best), visited.size()};
}

bool equal_s(const PosWord& u, const PosWord& v, const Presentation& p, std::size_t class_cap) {
  if (u.size() != v.size()) return false;
  if (u == v) return true;
  const std::vector<Perm> moves = p.move_perms();
  const std::string target = pack(v);
  std::string start = pack(u);
  std::unordered_set<std::string> visited{start};
  std::deque<std::string> queue{start};
  bool found = false;
  while (!queue.empty() && !found) {
    std::string cur = std::move(queue.front());
    queue.pop_front();
    for_each_neighbor(cur, p.l, moves, [&](const std::string& nb) {
      if (found) return;
      if (nb == target) {
        found = true;
        return;
      }
      if (visited.insert(nb).second) {
        if (visited.size() > class_cap)
          throw CapExceeded("congruence class larger than cap " + std::to_string(class_cap));
        queue.push_back(nb);
      }
    });
  }
  return found;
}

std::int64_t encode_word(const PosWord& w, int n) {
  std::int64_t code = 0;
  for (int x : w) code = code * n + (x - 1);
  return code;
}

PosWord decode_word(std::int64_t code, int length, int n) {
  PosWord w(static_cast<std::size_t>(length));
  for (int i = length - 1; i >= 0; --i) {
    w[static_cast<std::size_t>(i)] = static_cast<int>(code % n) + 1;
    code /= n;
  }
  return w;
}

LengthPartition::LengthPartition(const Presentation& p, int length, std::int64_t word_cap)
    : n_(p.n), m_(length) {
  const std::int64_t total = checked_pow(n_, m_, word_cap);
  UnionFind uf(total);

  const std::vector<Perm> moves = p.move_perms();
  if (m_ >= p.l && !moves.empty()) {
    std::vector<std::int64_t> pow(static_cast<std::size_t>(m_));
    std::int64_t v = 1;
    for (int i = m_ - 1; i >= 0; --i) {
      pow[static_cast<std::size_t>(i)] = v;  // weight of position i
      v *= n_;
    }
    std::vector<int> digit(static_cast<std::size_t>(m_));
    for (std::int64_t code = 0; code < total; ++code) {
      std::int64_t rest = code;
      for (int i = m_ - 1; i >= 0; --i) {
        digit[static_cast<std::size_t>(i)] = static_cast<int>(rest % n_);
        rest /= n_;
      }
      for (int pos = 0; pos + p.l <= m_; ++pos) {
        for (const Perm& s : moves) {
          std::int64_t moved = code;
          for (int j = 0; j < p.l; ++j) {
            const int d = digit[static_cast<std::size_t>(pos + j)];
            moved += static_cast<std::int64_t>(s.apply(d + 1) - 1 - d) * pow[static_cast<std::size_t>(pos + j)];
          }
          if (moved != code) uf.unite(static_cast<std::int32_t>(code), static_cast<std::int32_t>(moved));
        }
      }
    }
  }

  parent_.resize(static_cast<std::size_t>(total));
  canon_.assign(static_cast<std::size_t>(total), -1);
  for (std::int64_t code = 0; code < total; ++code) {
    const std::int32_t root = uf.find(static_cast<std::int32_t>(code));
    parent_[static_cast<std::size_t>(code)] = root;
    if (canon_[static_cast<std::size_t>(root)] < 0) {
      canon_[static_cast<std::size_t>(root)] = static_cast<std::int32_t>(code);
      ++classes_;
    }
  }
}

std::vector<std::int64_t> LengthPartition::class_canonicals() const {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(classes_));
  for (std::int64_t code = 0; code < word_count(); ++code)
    if (canonical_code(code) == code) out.push_back(code);
  return out;
}

std::vector<std::uint64_t> growth_s(const Presentation& p, int m_max, std::int64_t word_cap) {
  if (m_max < 0) throw ParseError("growth horizon must be nonnegative");
  std::vector<std::uint64_t> g;
  g.reserve(static_cast<std::size_t>(m_max) + 1);
  g.push_back(1);  // the empty word
  for (int m = 1; m <= m_max; ++m) g.push_back(LengthPartition(p, m, word_cap).class_count());
  return g;
}

std::optional<CancellationWitness> cancellativity_check(const Presentation& p, int length_bound,
                                                        std::int64_t word_cap) {
  if (length_bound < p.l)
    throw ParseError("length bound must be at least the relation length");

  std::vector<LengthPartition> part;  // part[m-1] covers words of length m
  part.reserve(static_cast<std::size_t>(length_bound));
  for (int m = 1; m <= length_bound; ++m) part.emplace_back(p, m, word_cap);
  auto canon = [&](int len, std::int64_t code) { return part[static_cast<std::size_t>(len - 1)].canonical_code(code); };

  std::vector<std::int64_t> npow(static_cast<std::size_t>(length_bound) + 1);
  npow[0] = 1;
  for (int i = 1; i <= length_bound; ++i) npow[static_cast<std::size_t>(i)] = npow[static_cast<std::size_t>(i - 1)] * p.n;

  for (int total = 2; total <= length_bound; ++total) {
    for (int la = 1; la <= total - 1; ++la) {
      const int lu = total - la;
      for (std::int64_t a = 0; a < npow[static_cast<std::size_t>(la)]; ++a) {
        for (std::int64_t u = 0; u < npow[static_cast<std::size_t>(lu)]; ++u) {
          const std::int64_t cu = canon(lu, u);
          for (std::int64_t v = u + 1; v < npow[static_cast<std::size_t>(lu)]; ++v) {
            if (cu == canon(lu, v)) continue;  // u = v in S: nothing to cancel
            if (canon(total, a * npow[static_cast<std::size_t>(lu)] + u) ==
                canon(total, a * npow[static_cast<std::size_t>(lu)] + v))
              return CancellationWitness{CancellationWitness::Side::left,
                                         decode_word(a, la, p.n), decode_word(u, lu, p.n),
                                         decode_word(v, lu, p.n)};
            if (canon(total, u * npow[static_cast<std::size_t>(la)] + a) ==
                canon(total, v * npow[static_cast<std::size_t>(la)] + a))
              return CancellationWitness{CancellationWitness::Side::right,
                                         decode_word(a, la, p.n), decode_word(u, lu, p.n),
                                         decode_word(v, lu, p.n)};
          }
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

// Shared machinery for the left and right decompositions; "left" covers
// classes by stripping the first letter, "right" the last one.
struct SidedDecomposition {
  std::vector<PosWord> basis;
  bool covers = false;
  bool stabilized = false;
};

SidedDecomposition decompose_side(const Presentation& p, int bound, std::int64_t word_cap,
                                  const std::vector<LengthPartition>& part, bool left) {
  std::vector<char> is_rep(static_cast<std::size_t>(p.n) + 1, 0);
  for (int k : p.reps()) is_rep[static_cast<std::size_t>(k)] = 1;

  SidedDecomposition out;
  out.basis.push_back({});  // the empty word starts every basis
  int last_added = 0;

  // covered[m] is indexed by canonical code; length 0 is the empty class.
  std::vector<std::vector<char>> covered(static_cast<std::size_t>(bound) + 1);
  covered[0] = {1};

  for (int m = 1; m <= bound; ++m) {
    const LengthPartition& pm = part[static_cast<std::size_t>(m - 1)];
    const std::int64_t total = pm.word_count();
    const std::int64_t strip = left ? total / p.n : p.n;
    covered[static_cast<std::size_t>(m)].assign(static_cast<std::size_t>(total), 0);
    std::vector<char> reachable(static_cast<std::size_t>(total), 0);
    for (std::int64_t code = 0; code < total; ++code) {
      const int letter = left ? static_cast<int>(code / strip) + 1 : static_cast<int>(code % p.n) + 1;
      if (!is_rep[static_cast<std::size_t>(letter)]) continue;
      const std::int64_t rest = left ? code % strip : code / strip;
      const std::int64_t rest_canon = m == 1 ? 0 : part[static_cast<std::size_t>(m - 2)].canonical_code(rest);
      if (covered[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(rest_canon)])
        reachable[static_cast<std::size_t>(pm.canonical_code(code))] = 1;
    }
    for (std::int64_t canon : pm.class_canonicals()) {
      if (!reachable[static_cast<std::size_t>(canon)]) {
        out.basis.push_back(decode_word(canon, m, p.n));
        last_added = m;
      }
      covered[static_cast<std::size_t>(m)][static_cast<std::size_t>(canon)] = 1;
    }
  }
  out.stabilized = bound - last_added >= p.l;

  // Independent sweep: walk the free monoid on the representatives against
  // every basis word and confirm all classes get hit.
  std::vector<std::vector<char>> hit(static_cast<std::size_t>(bound) + 1);
  hit[0].assign(1, 0);
  for (int m = 1; m <= bound; ++m)
    hit[static_cast<std::size_t>(m)].assign(static_cast<std::size_t>(part[static_cast<std::size_t>(m - 1)].word_count()), 0);
  const std::vector<int>& reps = p.reps();
  for (const PosWord& t : out.basis) {
    std::vector<PosWord> layer{t};
    while (!layer.empty()) {
      std::vector<PosWord> next;
      for (const PosWord& w : layer) {
        const int m = static_cast<int>(w.size());
        if (m > bound) continue;
        std::int64_t canon = m == 0 ? 0 : part[static_cast<std::size_t>(m - 1)].canonical_code(encode_word(w, p.n));
        hit[static_cast<std::size_t>(m)][static_cast<std::size_t>(canon)] = 1;
        if (m == bound) continue;
        for (int k : reps) {
          PosWord grown;
          grown.reserve(w.size() + 1);
          if (left) {
            grown.push_back(k);
            grown.insert(grown.end(), w.begin(), w.end());
          } else {
            grown = w;
            grown.push_back(k);
          }
          next.push_back(std::move(grown));
        }
      }
      layer = std::move(next);
    }
  }
  (void)word_cap;
  out.covers = true;
  for (int m = 0; m <= bound; ++m) {
    if (m == 0) {
      if (!hit[0][0]) out.covers = false;
      continue;
    }
    for (std::int64_t canon : part[static_cast<std::size_t>(m - 1)].class_canonicals())
      if (!hit[static_cast<std::size_t>(m)][static_cast<std::size_t>(canon)]) out.covers = false;
  }
  return out;
}

}  // namespace

Decomposition decomposition_T(const Presentation& p, int length_bound, std::int64_t word_cap) {
  if (length_bound < p.l)
    throw ParseError("length bound must be at least the relation length");
  std::vector<LengthPartition> part;
  part.reserve(static_cast<std::size_t>(length_bound));
  for (int m = 1; m <= length_bound; ++m) part.emplace_back(p, m, word_cap);

  Decomposition d;
  SidedDecomposition l = decompose_side(p, length_bound, word_cap, part, true);
  SidedDecomposition r = decompose_side(p, length_bound, word_cap, part, false);
  d.left_basis = std::move(l.basis);
  d.right_basis = std::move(r.basis);
  d.left_covers = l.covers;
  d.right_covers = r.covers;
  d.left_stabilized = l.stabilized;
  d.right_stabilized = r.stabilized;
  d.verified_up_to = length_bound;
  return d;
}

}  // namespace permrel
