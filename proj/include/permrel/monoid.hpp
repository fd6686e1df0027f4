#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "permrel/presentation.hpp"
#include "permrel/word.hpp"

namespace permrel {

/// Default caps. Relations preserve length, so every congruence class sits
/// inside the n^m words of one length; these bounds keep instances desk-sized.
inline constexpr std::size_t kDefaultClassCap = 1'000'000;
inline constexpr std::int64_t kDefaultWordCap = 10'000'000;

/// One congruence class of the monoid: its lexicographically least member
/// (letter order 1 < 2 < ... < n) and its cardinality.
struct SClass {
  PosWord canonical;
  std::uint64_t size = 0;
};

/// Words one rewrite step away from w: pick a window of l consecutive
/// positions, apply one move permutation to the letters inside it. Words
/// shorter than l have no neighbors; w itself is never returned.
std::vector<PosWord> neighbors(const PosWord& w, const Presentation& p);

/// BFS closure of w under neighbors. The ground-truth equality oracle for
/// the monoid. Throws CapExceeded past class_cap members.
SClass class_of(const PosWord& w, const Presentation& p,
                std::size_t class_cap = kDefaultClassCap);

/// True iff u and v have equal length and the same class canonical.
bool equal_s(const PosWord& u, const PosWord& v, const Presentation& p,
             std::size_t class_cap = kDefaultClassCap);

/// Encodes a word as a base-n integer, first letter most significant, so
/// numeric order equals lexicographic order.
std::int64_t encode_word(const PosWord& w, int n);
PosWord decode_word(std::int64_t code, int length, int n);

/// The partition of all n^m words of one length into congruence classes,
/// built by union-find over the rewrite moves.
class LengthPartition {
 public:
  LengthPartition(const Presentation& p, int length,
                  std::int64_t word_cap = kDefaultWordCap);

  int length() const { return m_; }
  std::int64_t word_count() const { return static_cast<std::int64_t>(parent_.size()); }
  std::int64_t canonical_code(std::int64_t code) const {
    return canon_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(code)])];
  }
  std::uint64_t class_count() const { return classes_; }
  std::vector<std::int64_t> class_canonicals() const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::uint64_t classes_ = 0;
  std::vector<std::int32_t> parent_;  // flattened to roots after construction
  std::vector<std::int32_t> canon_;   // canon_[root] = least code in the class
};

/// g(m) = number of congruence classes among words of length m, for
/// m = 0..m_max.
std::vector<std::uint64_t> growth_s(const Presentation& p, int m_max,
                                    std::int64_t word_cap = kDefaultWordCap);

struct CancellationWitness {
  enum class Side { left, right };
  Side side;
  PosWord a, u, v;  // left: au = av with u != v; right: ua = va with u != v
};

/// Exhaustive cancellation test over all triples with |a| + |u| <= length_bound,
/// |u| = |v| >= 1. Scan order is fixed (total length, then |a|, then a, u, v
/// lexicographic; left before right), so the witness is reproducible.
/// Returns nullopt when the monoid is cancellative up to the bound.
std::optional<CancellationWitness> cancellativity_check(
    const Presentation& p, int length_bound,
    std::int64_t word_cap = kDefaultWordCap);

struct Decomposition {
  std::vector<PosWord> left_basis;   // T  with S = union of FM*t
  std::vector<PosWord> right_basis;  // T' with S = union of t*FM
  bool left_covers = false;          // every class of length <= bound reached
  bool right_covers = false;
  bool left_stabilized = false;  // no new member in the last l lengths
  bool right_stabilized = false;
  int verified_up_to = 0;
};

/// Greedy construction of the finite sets T, T' over the free submonoid on
/// the orbit representatives, plus an independent coverage sweep.
Decomposition decomposition_T(const Presentation& p, int length_bound,
                              std::int64_t word_cap = kDefaultWordCap);

}  // namespace permrel
