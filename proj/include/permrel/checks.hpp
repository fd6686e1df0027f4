#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permrel/group.hpp"
#include "permrel/monoid.hpp"
#include "permrel/presentation.hpp"
#include "permrel/report.hpp"

namespace permrel {

struct RunConfig {
  int n = 0;
  int l = 2;
  std::vector<std::string> perms;  // cycle notation, one entry per generator

  int length_bound = 6;  // exhaustive word-level checks
  int mmax_monoid = 10;
  int mmax_group = 8;
  int depth = 6;  // free-monoid reversibility depth
  int u_max = 3;  // block length for the identity suite
  std::string format = "text";
  std::uint64_t seed = 1;
  bool parallel = false;

  std::size_t class_cap = kDefaultClassCap;
  std::int64_t word_cap = kDefaultWordCap;
  std::size_t coset_cap = 0;  // 0 = derive from the index bound
  std::size_t state_cap = kDefaultStateCap;
};

/// Reads "key = value" lines ('#' starts a comment). Recognized keys match
/// the flag names: n, l, perm (repeatable), length_bound, mmax, mmax_group,
/// depth, u_max, format, seed, parallel.
void load_config_file(RunConfig& config, const std::string& path);

Presentation presentation_from(const RunConfig& config);

nlohmann::json config_echo(const RunConfig& config);

/// Orbits, representatives, predicates, and the cancellativity prediction.
Report run_classify(const RunConfig& config);

/// The full verification bundle: identity families, normal-form round
/// trips, index bound, embedding comparison, cancellativity agreement,
/// and the two-sided decomposition.
Report run_verify(const RunConfig& config);

/// Ball growth of the monoid and group with a growth-type verdict.
Report run_growth(const RunConfig& config);

/// Word problem for a single pair; mode is "monoid" or "group".
Report run_wp(const RunConfig& config, const std::string& u_text, const std::string& v_text,
              const std::string& mode);

/// Primitive roots, bounded right-reversibility, and the cyclic envelope
/// for a set of free-monoid words.
Report run_revcheck(const std::vector<std::string>& words, int depth);

}  // namespace permrel
