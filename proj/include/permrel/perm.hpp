#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace permrel {

/// A permutation of {1..n}. Points are 1-based everywhere in the API.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int n);                    // identity on {1..n}
  explicit Perm(std::vector<int> images);  // images[i-1] = image of i

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int p) const { return img_[p - 1]; }

  /// Composition "this first, then next": (a.then(b))(p) == b(a(p)).
  Perm then(const Perm& next) const;
  Perm inverse() const;

  bool is_identity() const;
  bool fixes_some_point() const;

  const std::vector<int>& images() const { return img_; }
  std::string cycle_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.img_ <=> b.img_;
  }

 private:
  std::vector<int> img_;
};

/// Parses cycle notation over {1..n}: "(1 2 3)(4 5)", "(1,2)", "()" or "".
/// Cycles need not be disjoint and compose left to right, so "(1 2)(2 3)"
/// sends 1 to 3.
Perm parse_perm(const std::string& text, int n);

/// A subgroup of Sym_n held as its full element list.
struct PermGroup {
  int n = 0;
  std::vector<Perm> generators;
  std::vector<Perm> elements;            // sorted; contains the identity
  std::vector<std::vector<int>> orbits;  // sorted blocks, ordered by minimum
  std::vector<int> reps;                 // minimum of each orbit; reps[0] == 1
  std::vector<int> rep_of;               // rep_of[p-1] = representative of p's orbit

  std::size_t order() const { return elements.size(); }
};

/// Closes gens under composition and inverse. The degree cap keeps the
/// enumeration honest: above it |H| could reach n! and this representation
/// stops being the right tool. max_elements guards closures at raised
/// degrees (coset actions reuse this for the core computation).
PermGroup close(int n, const std::vector<Perm>& gens, int max_degree = 8,
                std::size_t max_elements = 1'000'000);

struct Classification {
  bool semi_regular = false;  // no non-identity element fixes a point
  bool abelian = false;
  bool transitive = false;
  bool cancellative_predicted = false;  // semi_regular && abelian
};

Classification classify(const PermGroup& h);

}  // namespace permrel
