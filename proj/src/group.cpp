#include "permrel/group.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "permrel/errors.hpp"

namespace permrel {

namespace {

// Advances a length-len tuple over {1..n} lexicographically; false once done.
bool next_tuple(std::vector<int>& idx, int n) {
  int pos = static_cast<int>(idx.size()) - 1;
  while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n) {
    idx[static_cast<std::size_t>(pos)] = 1;
    --pos;
  }
  if (pos < 0) return false;
  ++idx[static_cast<std::size_t>(pos)];
  return true;
}

std::vector<int> relator_letters(const std::vector<int>& tuple, const Perm& s) {
  std::vector<int> letters;
  letters.reserve(tuple.size() * 2);
  for (int i : tuple) letters.push_back(i);
  for (auto it = tuple.rbegin(); it != tuple.rend(); ++it) letters.push_back(-s.apply(*it));
  return letters;
}

}  // namespace

CosetTable::CosetTable(int letters, int num_cosets, std::vector<std::int32_t> flat)
    : n_(letters), ncos_(num_cosets), flat_(std::move(flat)) {
  if (flat_.size() != static_cast<std::size_t>(ncos_) * 2 * static_cast<std::size_t>(n_))
    throw std::logic_error("coset table shape mismatch");
}

std::string CosetTable::tsv() const {
  std::ostringstream out;
  out << "coset";
  for (int i = 1; i <= n_; ++i) out << "\tx" << i << "\tx" << i << "^-1";
  out << '\n';
  for (int c = 1; c <= ncos_; ++c) {
    out << c;
    for (int i = 1; i <= n_; ++i) out << '\t' << target(c, i) << '\t' << target(c, -i);
    out << '\n';
  }
  return out.str();
}

std::vector<SignedWord> relators(const Presentation& p) {
  std::vector<SignedWord> out;
  std::set<std::vector<int>> seen;
  for (const Perm& s : p.H.generators) {
    if (s.is_identity()) continue;
    std::vector<int> tuple(static_cast<std::size_t>(p.l), 1);
    do {
      SignedWord rel = reduce(SignedWord{relator_letters(tuple, s), false});
      if (!rel.letters.empty() && seen.insert(rel.letters).second) out.push_back(std::move(rel));
    } while (next_tuple(tuple, p.n));
  }
  return out;
}

namespace {

constexpr std::int32_t kUndef = -1;

// HLT coset enumeration with immediate coincidence handling. Cosets are
// 0-based here; p_[c] <= c always, so union-find roots are the smallest
// equivalent coset and coset 0 (the subgroup itself) can never die.
class Enumerator {
 public:
  Enumerator(int n, std::size_t cap) : ncols_(2 * n), cap_(cap) { new_coset(); }

  static int col(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }
  static int inv_col(int c) { return c ^ 1; }

  std::size_t size() const { return tab_.size(); }
  bool live(std::int32_t c) const { return p_[static_cast<std::size_t>(c)] == c; }
  std::int32_t entry(std::int32_t c, int column) const { return tab_[static_cast<std::size_t>(c)][static_cast<std::size_t>(column)]; }

  void scan_and_fill(std::int32_t start, const std::vector<int>& w) {
    if (w.empty()) return;
    std::int32_t f = start;
    std::int32_t b = start;
    int i = 0;
    int j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && entry(f, col(w[static_cast<std::size_t>(i)])) != kUndef) {
        f = entry(f, col(w[static_cast<std::size_t>(i)]));
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && entry(b, col(-w[static_cast<std::size_t>(j)])) != kUndef) {
        b = entry(b, col(-w[static_cast<std::size_t>(j)]));
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (j == i) {  // deduction closes the scan
        set_pair(f, col(w[static_cast<std::size_t>(i)]), b);
        return;
      }
      set_pair(f, col(w[static_cast<std::size_t>(i)]), new_coset());
    }
  }

  // Live cosets renumbered in breadth-first order from coset 0, scanning
  // columns x1, x1^-1, x2, ... so the finished table is canonical.
  CosetTable standardize(int n) {
    const std::int32_t base = rep(0);
    std::vector<std::int32_t> number(tab_.size(), -1);
    std::vector<std::int32_t> order;
    number[static_cast<std::size_t>(base)] = 0;
    order.push_back(base);
    for (std::size_t k = 0; k < order.size(); ++k) {
      for (int c = 0; c < ncols_; ++c) {
        std::int32_t t = entry(order[k], c);
        if (t == kUndef) throw std::logic_error("incomplete coset table after enumeration");
        t = rep(t);
        if (number[static_cast<std::size_t>(t)] < 0) {
          number[static_cast<std::size_t>(t)] = static_cast<std::int32_t>(order.size());
          order.push_back(t);
        }
      }
    }
    for (std::size_t c = 0; c < tab_.size(); ++c)
      if (live(static_cast<std::int32_t>(c)) && number[c] < 0)
        throw std::logic_error("coset table not connected");
    std::vector<std::int32_t> flat(order.size() * static_cast<std::size_t>(ncols_));
    for (std::size_t k = 0; k < order.size(); ++k)
      for (int c = 0; c < ncols_; ++c)
        flat[k * static_cast<std::size_t>(ncols_) + static_cast<std::size_t>(c)] =
            number[static_cast<std::size_t>(rep(entry(order[k], c)))] + 1;
    return CosetTable(n, static_cast<int>(order.size()), std::move(flat));
  }

 private:
  std::int32_t new_coset() {
    if (tab_.size() >= cap_)
      throw CapExceeded("coset enumeration exceeded cap " + std::to_string(cap_));
    tab_.emplace_back(static_cast<std::size_t>(ncols_), kUndef);
    p_.push_back(static_cast<std::int32_t>(tab_.size() - 1));
    return static_cast<std::int32_t>(tab_.size() - 1);
  }

  void set_pair(std::int32_t a, int column, std::int32_t b) {
    tab_[static_cast<std::size_t>(a)][static_cast<std::size_t>(column)] = b;
    tab_[static_cast<std::size_t>(b)][static_cast<std::size_t>(inv_col(column))] = a;
  }

  std::int32_t rep(std::int32_t k) {
    std::int32_t root = k;
    while (p_[static_cast<std::size_t>(root)] != root) root = p_[static_cast<std::size_t>(root)];
    while (k != root) {
      std::int32_t next = p_[static_cast<std::size_t>(k)];
      p_[static_cast<std::size_t>(k)] = root;
      k = next;
    }
    return root;
  }

  void merge(std::int32_t a, std::int32_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    p_[static_cast<std::size_t>(b)] = a;
    q_.push_back(b);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    merge(a, b);
    while (!q_.empty()) {
      const std::int32_t gamma = q_.front();
      q_.pop_front();
      for (int c = 0; c < ncols_; ++c) {
        const std::int32_t delta = entry(gamma, c);
        if (delta == kUndef) continue;
        tab_[static_cast<std::size_t>(delta)][static_cast<std::size_t>(inv_col(c))] = kUndef;
        const std::int32_t mu = rep(gamma);
        const std::int32_t nu = rep(delta);
        if (entry(mu, c) != kUndef)
          merge(nu, entry(mu, c));
        else if (entry(nu, inv_col(c)) != kUndef)
          merge(mu, entry(nu, inv_col(c)));
        else
          set_pair(mu, c, nu);
      }
    }
  }

  int ncols_;
  std::size_t cap_;
  std::vector<std::vector<std::int32_t>> tab_;
  std::vector<std::int32_t> p_;
  std::deque<std::int32_t> q_;
};

}  // namespace

CosetTable todd_coxeter(const Presentation& p, std::size_t coset_cap) {
  if (coset_cap == 0) coset_cap = static_cast<std::size_t>(10 * p.index_bound() + 16);
  Enumerator e(p.n, coset_cap);
  for (int k : p.reps()) e.scan_and_fill(0, {k});
  const std::vector<SignedWord> rels = relators(p);
  for (std::int32_t a = 0; a < static_cast<std::int32_t>(e.size()); ++a) {
    if (!e.live(a)) continue;
    for (const SignedWord& r : rels) {
      e.scan_and_fill(a, r.letters);
      if (!e.live(a)) break;
    }
  }
  return e.standardize(p.n);
}

SignedWord pi(const SignedWord& w, const Presentation& p) {
  std::vector<int> letters;
  letters.reserve(w.letters.size());
  for (int a : w.letters) letters.push_back(a > 0 ? p.rep_of(a) : -p.rep_of(-a));
  return reduce(SignedWord{std::move(letters), false});
}

GInvariant invariant(const SignedWord& w, const Presentation& p, const CosetTable& ct) {
  return GInvariant{pi(w, p), ct.trace(1, w)};
}

bool equal_g(const SignedWord& u, const SignedWord& v, const Presentation& p,
             const CosetTable& ct) {
  const GInvariant d = invariant(concat(u, inverse(v)), p, ct);
  return d.pi_word.empty() && d.coset == 1;
}

std::vector<std::vector<PosWord>> tails_by_coset(const Presentation& p, const CosetTable& ct) {
  const std::vector<int>& orbit1 = p.H.orbits.front();
  double estimate = 1;
  for (int i = 1; i < p.l; ++i) estimate *= static_cast<double>(orbit1.size());
  if (estimate > 1e6)
    throw CapExceeded("tail enumeration |orbit(1)|^(l-1) too large");
  std::vector<std::vector<PosWord>> out(static_cast<std::size_t>(ct.num_cosets()));
  std::vector<std::size_t> idx(static_cast<std::size_t>(p.l - 1), 0);
  while (true) {
    PosWord t;
    t.reserve(idx.size());
    for (std::size_t i : idx) t.push_back(orbit1[i]);
    out[static_cast<std::size_t>(ct.trace(1, to_signed(t)) - 1)].push_back(std::move(t));
    int pos = static_cast<int>(idx.size()) - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] + 1 == orbit1.size()) {
      idx[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
  }
  for (const auto& tails : out)
    if (tails.empty())
      throw std::logic_error("some coset unreachable by tails; enumeration is broken");
  return out;
}

namespace {

// First element of H (in sorted element order) mapping `from` to `to`.
class FirstMapping {
 public:
  explicit FirstMapping(const PermGroup& h) : n_(h.n), slot_(static_cast<std::size_t>(h.n) * static_cast<std::size_t>(h.n), nullptr) {
    for (const Perm& g : h.elements)
      for (int from = 1; from <= n_; ++from) {
        const Perm*& s = slot_[index(from, g.apply(from))];
        if (s == nullptr) s = &g;
      }
  }
  const Perm* get(int from, int to) const { return slot_[index(from, to)]; }

 private:
  std::size_t index(int from, int to) const {
    return static_cast<std::size_t>(from - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(to - 1);
  }
  int n_;
  std::vector<const Perm*> slot_;
};

}  // namespace

NormalForm normal_form(const SignedWord& w, const Presentation& p, const CosetTable& ct) {
  const auto tails = tails_by_coset(p, ct);
  const FirstMapping pick(p.H);
  const int l = p.l;

  // Base: 1 = x_1^(1-l) * x_1^(l-1).
  std::vector<int> f(static_cast<std::size_t>(l - 1), -1);
  PosWord tail(static_cast<std::size_t>(l - 1), 1);

  for (const int a : reduce(w).letters) {
    const int point = a > 0 ? a : -a;
    const int j = p.rep_of(point);
    const Perm* sig_last = pick.get(j, point);  // maps the representative to |a|
    std::vector<const Perm*> sig(static_cast<std::size_t>(l - 1));
    for (int i = 0; i < l - 1; ++i) sig[static_cast<std::size_t>(i)] = pick.get(1, tail[static_cast<std::size_t>(i)]);

    // Absorb x_tail * x_a^s into x_1^(l-1) x_j^s x_1^(1-l) * (new tail).
    for (int i = 0; i < l - 1; ++i) f.push_back(1);
    f.push_back(a > 0 ? j : -j);
    for (int i = 0; i < l - 1; ++i) f.push_back(-1);

    PosWord next(static_cast<std::size_t>(l - 1));
    if (a > 0) {
      const Perm inv_first = sig[0]->inverse();
      for (int i = 1; i <= l - 2; ++i)
        next[static_cast<std::size_t>(i - 1)] = inv_first.apply(sig[static_cast<std::size_t>(i)]->apply(1));
      next[static_cast<std::size_t>(l - 2)] = inv_first.apply(sig_last->apply(1));
    } else {
      const Perm inv_last = sig[static_cast<std::size_t>(l - 2)]->inverse();
      next[0] = sig_last->apply(inv_last.apply(1));
      for (int i = 0; i <= l - 3; ++i)
        next[static_cast<std::size_t>(i + 1)] = sig_last->apply(inv_last.apply(sig[static_cast<std::size_t>(i)]->apply(1)));
    }
    tail = std::move(next);
  }

  // Any two tails reaching the same coset are equal in the group (their pi
  // images are both x_1^(l-1)), so swapping in the least one keeps f valid.
  const int coset = ct.trace(1, to_signed(tail));
  return NormalForm{reduce(SignedWord{std::move(f), false}),
                    tails[static_cast<std::size_t>(coset - 1)].front()};
}

std::vector<IdentityReport> verify_identities(const Presentation& p, const CosetTable& ct,
                                              int u_max, std::uint64_t seed,
                                              std::uint64_t sample_threshold) {
  std::vector<IdentityReport> out;
  const std::vector<Perm>& elems = p.H.elements;
  const std::uint64_t order = elems.size();
  std::mt19937_64 rng(seed);

  // sigma applied across a block of u letters followed by the inverted
  // block of u more: x_{j1}..x_{ju} x_{ku}^-1..x_{k1}^-1 keeps its value
  // when sigma hits every index (and mirrored for the all-inverse shape).
  for (const int sign : {+1, -1}) {
    IdentityReport rep;
    rep.identity = sign > 0 ? "block_image_pos" : "block_image_neg";
    auto check_one = [&](const std::vector<int>& js, const std::vector<int>& ks, const Perm& s) {
      std::vector<int> lhs, rhs;
      for (int x : js) {
        lhs.push_back(sign * x);
        rhs.push_back(sign * s.apply(x));
      }
      for (auto it = ks.rbegin(); it != ks.rend(); ++it) {
        lhs.push_back(-sign * *it);
        rhs.push_back(-sign * s.apply(*it));
      }
      ++rep.instances;
      SignedWord l{std::move(lhs), false}, r{std::move(rhs), false};
      if (!equal_g(l, r, p, ct)) rep.counterexamples.emplace_back(l, r);
    };
    for (int u = 1; u <= u_max; ++u) {
      std::uint64_t count = order;
      for (int i = 0; i < 2 * u; ++i) count *= static_cast<std::uint64_t>(p.n);
      if (count <= sample_threshold) {
        std::vector<int> js(static_cast<std::size_t>(u), 1);
        do {
          std::vector<int> ks(static_cast<std::size_t>(u), 1);
          do {
            for (const Perm& s : elems) check_one(js, ks, s);
          } while (next_tuple(ks, p.n));
        } while (next_tuple(js, p.n));
      } else {
        rep.exhaustive = false;
        std::uniform_int_distribution<int> letter(1, p.n);
        std::uniform_int_distribution<std::size_t> elem(0, elems.size() - 1);
        for (std::uint64_t t = 0; t < sample_threshold; ++t) {
          std::vector<int> js(static_cast<std::size_t>(u)), ks(static_cast<std::size_t>(u));
          for (int& x : js) x = letter(rng);
          for (int& x : ks) x = letter(rng);
          check_one(js, ks, elems[elem(rng)]);
        }
      }
    }
    out.push_back(std::move(rep));
  }

  // Pushing one letter through a tail of orbit-of-1 letters; the identities
  // the normal form steps on.
  for (const bool positive : {true, false}) {
    IdentityReport rep;
    rep.identity = positive ? "tail_push_pos" : "tail_push_neg";
    const int l = p.l;
    auto check_one = [&](const std::vector<const Perm*>& sig, int j) {
      std::vector<int> lhs, rhs;
      for (int i = 0; i < l - 1; ++i) lhs.push_back(sig[static_cast<std::size_t>(i)]->apply(1));
      const int last = sig[static_cast<std::size_t>(l - 1)]->apply(j);
      lhs.push_back(positive ? last : -last);
      for (int i = 0; i < l - 1; ++i) rhs.push_back(1);
      rhs.push_back(positive ? j : -j);
      for (int i = 0; i < l - 1; ++i) rhs.push_back(-1);
      if (positive) {
        const Perm inv_first = sig[0]->inverse();
        for (int i = 1; i <= l - 1; ++i) rhs.push_back(inv_first.apply(sig[static_cast<std::size_t>(i)]->apply(1)));
      } else {
        const Perm inv_prev = sig[static_cast<std::size_t>(l - 2)]->inverse();
        rhs.push_back(sig[static_cast<std::size_t>(l - 1)]->apply(inv_prev.apply(1)));
        for (int i = 0; i <= l - 3; ++i)
          rhs.push_back(sig[static_cast<std::size_t>(l - 1)]->apply(inv_prev.apply(sig[static_cast<std::size_t>(i)]->apply(1))));
      }
      ++rep.instances;
      SignedWord lw{std::move(lhs), false}, rw{std::move(rhs), false};
      if (!equal_g(lw, rw, p, ct)) rep.counterexamples.emplace_back(lw, rw);
    };
    std::uint64_t count = static_cast<std::uint64_t>(p.n);
    for (int i = 0; i < l; ++i) count *= order;
    if (count <= sample_threshold) {
      std::vector<std::size_t> pickv(static_cast<std::size_t>(l), 0);
      while (true) {
        std::vector<const Perm*> sig(static_cast<std::size_t>(l));
        for (int i = 0; i < l; ++i) sig[static_cast<std::size_t>(i)] = &elems[pickv[static_cast<std::size_t>(i)]];
        for (int j = 1; j <= p.n; ++j) check_one(sig, j);
        int pos = l - 1;
        while (pos >= 0 && pickv[static_cast<std::size_t>(pos)] + 1 == elems.size()) {
          pickv[static_cast<std::size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
        ++pickv[static_cast<std::size_t>(pos)];
      }
    } else {
      rep.exhaustive = false;
      std::uniform_int_distribution<int> letter(1, p.n);
      std::uniform_int_distribution<std::size_t> elem(0, elems.size() - 1);
      for (std::uint64_t t = 0; t < sample_threshold; ++t) {
        std::vector<const Perm*> sig(static_cast<std::size_t>(l));
        for (auto& s : sig) s = &elems[elem(rng)];
        check_one(sig, letter(rng));
      }
    }
    out.push_back(std::move(rep));
  }
  return out;
}

IndexReport index_report(const Presentation& p, const CosetTable& ct, std::size_t core_cap) {
  IndexReport r;
  r.index = static_cast<std::uint64_t>(ct.num_cosets());
  r.bound = p.index_bound();
  r.ker_pi_order = r.index;
  try {
    std::vector<Perm> actions;
    actions.reserve(static_cast<std::size_t>(p.n));
    for (int i = 1; i <= p.n; ++i) {
      std::vector<int> img(static_cast<std::size_t>(ct.num_cosets()));
      for (int c = 1; c <= ct.num_cosets(); ++c) img[static_cast<std::size_t>(c - 1)] = ct.target(c, i);
      actions.emplace_back(std::move(img));
    }
    const PermGroup image = close(ct.num_cosets(), actions, ct.num_cosets(), core_cap);
    r.core_index = image.order();
    r.radical_nilpotency_bound = image.order() * image.order();
  } catch (const CapExceeded&) {
    // leave the core fields empty; the index and bound still stand
  }
  return r;
}

std::vector<std::uint64_t> growth_g(const Presentation& p, const CosetTable& ct, int m_max,
                                    std::size_t state_cap) {
  // State key: two coset bytes, then the reduced pi word, one byte per
  // letter (representative << 1 | sign bit). Complete invariant, so states
  // are exactly group elements.
  auto make_key = [](int coset, const std::string& pi_bytes) {
    std::string k;
    k.reserve(pi_bytes.size() + 2);
    k.push_back(static_cast<char>(coset & 0xff));
    k.push_back(static_cast<char>((coset >> 8) & 0xff));
    k += pi_bytes;
    return k;
  };
  if (ct.num_cosets() > 0xffff)
    throw CapExceeded("growth state encoding holds at most 65535 cosets");
  std::unordered_set<std::string> seen;
  std::vector<std::string> frontier;
  frontier.push_back(make_key(1, ""));
  seen.insert(frontier.front());
  std::vector<std::uint64_t> b{1};
  for (int m = 1; m <= m_max; ++m) {
    std::vector<std::string> next;
    for (const std::string& state : frontier) {
      const int coset = static_cast<unsigned char>(state[0]) |
                        (static_cast<unsigned char>(state[1]) << 8);
      const std::string pi_bytes = state.substr(2);
      for (int i = 1; i <= p.n; ++i) {
        for (const int sgn : {1, -1}) {
          const int rep = p.rep_of(i);
          const unsigned char push = static_cast<unsigned char>((rep << 1) | (sgn < 0 ? 1 : 0));
          const unsigned char cancel = static_cast<unsigned char>((rep << 1) | (sgn < 0 ? 0 : 1));
          std::string np = pi_bytes;
          if (!np.empty() && static_cast<unsigned char>(np.back()) == cancel)
            np.pop_back();
          else
            np.push_back(static_cast<char>(push));
          std::string key = make_key(ct.target(coset, sgn * i), np);
          if (seen.insert(key).second) {
            if (seen.size() > state_cap)
              throw CapExceeded("group ball larger than cap " + std::to_string(state_cap));
            next.push_back(std::move(key));
          }
        }
      }
    }
    frontier = std::move(next);
    b.push_back(seen.size());
  }
  return b;
}

namespace {

std::string invariant_key(const GInvariant& iv) {
  std::string k;
  k.reserve(iv.pi_word.letters.size() + 2);
  k.push_back(static_cast<char>(iv.coset & 0xff));
  k.push_back(static_cast<char>((iv.coset >> 8) & 0xff));
  for (int a : iv.pi_word.letters)
    k.push_back(static_cast<char>((a > 0 ? a : -a) << 1 | (a < 0 ? 1 : 0)));
  return k;
}

}  // namespace

EmbeddingReport embedding_check(const Presentation& p, const CosetTable& ct, int length_bound,
                                std::int64_t word_cap) {
  EmbeddingReport out;
  out.checked_up_to = length_bound;
  for (int m = 1; m <= length_bound; ++m) {
    const LengthPartition part(p, m, word_cap);
    std::unordered_map<std::string, std::int64_t> class_of_invariant;
    std::unordered_map<std::int64_t, std::string> key_of_class;
    for (std::int64_t code = 0; code < part.word_count(); ++code) {
      const std::int64_t canon = part.canonical_code(code);
      const PosWord w = decode_word(code, m, p.n);
      const std::string key = invariant_key(invariant(to_signed(w), p, ct));
      auto it = key_of_class.find(canon);
      if (it == key_of_class.end()) {
        // codes ascend, so the first member seen is the class canonical
        key_of_class.emplace(canon, key);
        auto [jt, fresh] = class_of_invariant.emplace(key, canon);
        if (!fresh && !out.group_collapse) {
          out.group_collapse = {decode_word(jt->second, m, p.n), decode_word(canon, m, p.n)};
          out.consistent = false;
        }
      } else if (it->second != key && !out.soundness_violation) {
        out.soundness_violation = {decode_word(canon, m, p.n), w};
        out.consistent = false;
      }
    }
  }
  return out;
}

TableCheck validate_coset_table(const Presentation& p, const CosetTable& ct) {
  TableCheck out;
  const int cosets = ct.num_cosets();

  out.permutation_action = true;
  for (int i = 1; i <= p.n && out.permutation_action; ++i) {
    std::vector<char> hit(static_cast<std::size_t>(cosets) + 1, 0);
    for (int c = 1; c <= cosets; ++c) {
      const int t = ct.target(c, i);
      if (t < 1 || t > cosets || hit[static_cast<std::size_t>(t)] || ct.target(t, -i) != c) {
        out.permutation_action = false;
        break;
      }
      hit[static_cast<std::size_t>(t)] = 1;
    }
  }

  out.relators_trivial = true;
  for (const Perm& s : p.H.elements) {
    if (s.is_identity()) continue;
    std::vector<int> tuple(static_cast<std::size_t>(p.l), 1);
    do {
      const SignedWord rel{relator_letters(tuple, s), false};
      for (int c = 1; c <= cosets; ++c)
        if (ct.trace(c, rel) != c) out.relators_trivial = false;
    } while (next_tuple(tuple, p.n));
  }

  out.subgroup_fixes_base = true;
  for (int k : p.reps())
    if (ct.target(1, k) != 1) out.subgroup_fixes_base = false;

  std::vector<char> seen(static_cast<std::size_t>(cosets) + 1, 0);
  std::deque<int> queue{1};
  seen[1] = 1;
  int count = 0;
  while (!queue.empty()) {
    const int c = queue.front();
    queue.pop_front();
    ++count;
    for (int i = 1; i <= p.n; ++i)
      for (const int sgn : {1, -1}) {
        const int t = ct.target(c, sgn * i);
        if (!seen[static_cast<std::size_t>(t)]) {
          seen[static_cast<std::size_t>(t)] = 1;
          queue.push_back(t);
        }
      }
  }
  out.connected = count == cosets;
  return out;
}

}  // namespace permrel
