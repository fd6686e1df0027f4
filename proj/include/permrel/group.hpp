#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permrel/monoid.hpp"
#include "permrel/presentation.hpp"
#include "permrel/word.hpp"

namespace permrel {

inline constexpr std::size_t kDefaultStateCap = 5'000'000;
inline constexpr std::size_t kDefaultCoreCap = 500'000;

/// The action of the group generators on the right cosets of the free
/// subgroup generated by the orbit representatives. Coset 1 is the subgroup
/// itself. Immutable once built; tables are standardized (cosets numbered
/// in breadth-first order from coset 1), so equal presentations produce
/// byte-identical tables.
class CosetTable {
 public:
  CosetTable(int letters, int num_cosets, std::vector<std::int32_t> flat);

  int letters() const { return n_; }
  int num_cosets() const { return ncos_; }

  /// Image of a coset under one signed letter (+i for x_i, -i for x_i^{-1}).
  int target(int coset, int letter) const {
    const int column = letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
    return flat_[static_cast<std::size_t>(coset - 1) * (2 * static_cast<std::size_t>(n_)) +
                 static_cast<std::size_t>(column)];
  }

  int trace(int start, const SignedWord& w) const {
    int c = start;
    for (int a : w.letters) c = target(c, a);
    return c;
  }

  /// Tab-separated matrix, rows = cosets, columns = generators and inverses.
  std::string tsv() const;

 private:
  int n_ = 0;
  int ncos_ = 0;
  std::vector<std::int32_t> flat_;
};

/// One relator per (sigma, index tuple): the length-l product times the
/// inverse of its sigma-image, freely reduced. Identity images are dropped
/// and duplicates removed; order is deterministic.
std::vector<SignedWord> relators(const Presentation& p);

/// HLT-style coset enumeration over the subgroup generated by the orbit
/// representative letters. The index is finite (at most |H|^(l-1)), so the
/// enumeration terminates; the cap (default 10x that bound) only trips on
/// implementation bugs. coset_cap = 0 selects the default.
CosetTable todd_coxeter(const Presentation& p, std::size_t coset_cap = 0);

/// Replaces every letter by its orbit representative and freely reduces:
/// the homomorphism onto the free group on the representative letters.
SignedWord pi(const SignedWord& w, const Presentation& p);

/// The complete equality invariant of the group: the image under pi plus
/// the coset of the subgroup of representatives reached from coset 1.
///
/// Soundness is immediate (both components factor through the relations).
/// Completeness: pi restricted to the representative subgroup F is an
/// isomorphism onto the free group, so ker pi meets F trivially, and every
/// element factors as k*f with k in ker pi, f in F; equal invariants force
/// equal factors. The elements with empty pi image are exactly ker pi, and
/// there are as many of them as cosets.
struct GInvariant {
  SignedWord pi_word;  // freely reduced, representative letters only
  int coset = 1;

  friend bool operator==(const GInvariant& a, const GInvariant& b) {
    return a.coset == b.coset && a.pi_word == b.pi_word;
  }
};

GInvariant invariant(const SignedWord& w, const Presentation& p, const CosetTable& ct);

/// True iff u v^-1 has the trivial invariant (empty pi image, coset 1);
/// equivalently, component-wise equal invariants.
bool equal_g(const SignedWord& u, const SignedWord& v, const Presentation& p,
             const CosetTable& ct);

/// g = f * x_{tail}, f a reduced word over representative letters, tail a
/// product of l-1 letters from the orbit of 1. Among the valid tails the
/// lexicographically least one for the coset of g is chosen and f is freely
/// reduced, which makes the output a canonical form: words equal in the
/// group get identical results.
struct NormalForm {
  SignedWord f;
  PosWord tail;
};

NormalForm normal_form(const SignedWord& w, const Presentation& p, const CosetTable& ct);

/// All length-(l-1) words over the orbit of 1, grouped by the coset they
/// reach from coset 1. Every coset is reached by at least one tail.
std::vector<std::vector<PosWord>> tails_by_coset(const Presentation& p, const CosetTable& ct);

/// Checks the two derived identity families behind the normal form: applying
/// sigma across a positive block followed by an inverted block, and pushing a
/// letter through a tail of orbit-of-1 letters. Counterexamples would mean an
/// implementation bug, since both families are consequences of the relations.
struct IdentityReport {
  std::string identity;  // block_image_pos/neg, tail_push_pos/neg
  std::uint64_t instances = 0;
  bool exhaustive = true;
  std::vector<std::pair<SignedWord, SignedWord>> counterexamples;
};

std::vector<IdentityReport> verify_identities(const Presentation& p, const CosetTable& ct,
                                              int u_max, std::uint64_t seed = 1,
                                              std::uint64_t sample_threshold = 10'000);

struct IndexReport {
  std::uint64_t index = 0;         // [G:F] = number of cosets
  std::uint64_t bound = 0;         // |H|^(l-1)
  std::uint64_t ker_pi_order = 0;  // equals the index: k -> F k is a bijection
  // Order of the permutation group the generators induce on the cosets,
  // i.e. |G/M| for M the core of F (largest normal subgroup inside F).
  // Absent when the closure outgrows core_cap.
  std::optional<std::uint64_t> core_index;
  std::optional<std::uint64_t> radical_nilpotency_bound;  // |G/M|^2, report-only
};

IndexReport index_report(const Presentation& p, const CosetTable& ct,
                         std::size_t core_cap = kDefaultCoreCap);

/// b(m) = number of distinct group elements represented by signed words of
/// length <= m, by breadth-first search keyed on the invariant.
std::vector<std::uint64_t> growth_g(const Presentation& p, const CosetTable& ct, int m_max,
                                    std::size_t state_cap = kDefaultStateCap);

/// Compares monoid and group equality on all positive words of equal length
/// up to the bound. Monoid-equal words must collapse in the group (the
/// canonical map is a homomorphism); a pair equal in the group but distinct
/// in the monoid shows the monoid does not embed.
struct EmbeddingReport {
  bool consistent = true;
  std::optional<std::pair<PosWord, PosWord>> group_collapse;      // equal in G, distinct in S
  std::optional<std::pair<PosWord, PosWord>> soundness_violation; // equal in S, distinct in G (a bug)
  int checked_up_to = 0;
};

EmbeddingReport embedding_check(const Presentation& p, const CosetTable& ct, int length_bound,
                                std::int64_t word_cap = kDefaultWordCap);

/// Structural checks on a finished table: columns act as permutations,
/// every relator (over all of H, not just the generators) acts trivially
/// from every coset, representative letters fix coset 1, and the action is
/// transitive from coset 1.
struct TableCheck {
  bool permutation_action = false;
  bool relators_trivial = false;
  bool subgroup_fixes_base = false;
  bool connected = false;
  bool ok() const { return permutation_action && relators_trivial && subgroup_fixes_base && connected; }
};

TableCheck validate_coset_table(const Presentation& p, const CosetTable& ct);

}  // namespace permrel
