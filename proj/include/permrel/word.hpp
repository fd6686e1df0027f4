#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace permrel {

/// Positive monoid word x_{i_1}...x_{i_m}, stored as letters 1..n.
/// The empty vector is the monoid identity.
using PosWord = std::vector<int>;

/// Group word. Letter +i is x_i, letter -i is x_i^{-1}; 0 never occurs.
struct SignedWord {
  std::vector<int> letters;
  bool reduced = false;  // when true, no adjacent pair i,-i occurs

  std::size_t length() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  friend bool operator==(const SignedWord& a, const SignedWord& b) {
    return a.letters == b.letters;
  }
  friend bool operator<(const SignedWord& a, const SignedWord& b) {
    return a.letters < b.letters;
  }
};

bool is_freely_reduced(const std::vector<int>& letters);

/// Cancels adjacent inverse pairs to a fixed point. Free reduction is
/// confluent, so the result does not depend on cancellation order.
SignedWord reduce(const SignedWord& w);

SignedWord inverse(const SignedWord& w);
SignedWord concat(const SignedWord& a, const SignedWord& b);
SignedWord to_signed(const PosWord& w);

/// Accepts "1 2 1" or "x1 x2 x1"; empty/whitespace input is the empty word.
PosWord parse_pos_word(const std::string& text, int n);

/// Accepts "x1 x2^-1" (also "x2^+1") or signed indices "1 -2".
SignedWord parse_signed_word(const std::string& text, int n);

std::string format_pos_word(const PosWord& w);    // "x1 x2 x1"; empty -> "e"
std::string format_signed_word(const SignedWord& w);

}  // namespace permrel
