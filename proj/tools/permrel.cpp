// Command-line front end: classify a permutation presentation, verify its
// structural properties, measure growth, decide word problems, and test
// free-monoid reversibility.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "permrel/checks.hpp"
#include "permrel/errors.hpp"
#include "permrel/report.hpp"

namespace {

void add_presentation_flags(CLI::App* cmd, permrel::RunConfig& config, std::string& config_path) {
  cmd->add_option("--n", config.n, "number of generators (degree of H)");
  cmd->add_option("--l", config.l, "relation length (at least 2)");
  cmd->add_option("--perm", config.perms,
                  "generator of H in cycle notation, e.g. \"(1 2 3)\"; repeatable; "
                  "cycles compose left to right");
  cmd->add_option("--length-bound", config.length_bound, "bound for exhaustive word checks");
  cmd->add_option("--mmax", config.mmax_monoid, "monoid growth horizon");
  cmd->add_option("--mmax-group", config.mmax_group, "group growth horizon");
  cmd->add_option("--depth", config.depth, "reversibility search depth");
  cmd->add_option("--u-max", config.u_max, "largest block length in the identity suite");
  cmd->add_option("--seed", config.seed, "seed for sampled verifications");
  cmd->add_option("--format", config.format, "output format: text or json");
  cmd->add_flag("--parallel", config.parallel, "run independent checks concurrently");
  cmd->add_option("--config", config_path, "key=value config file; flags take precedence");
}

int emit(const permrel::Report& report, const std::string& format) {
  if (format == "json")
    std::cout << permrel::render_json(report) << "\n";
  else if (format == "text")
    std::cout << permrel::render_text(report);
  else
    throw permrel::ParseError("unknown format '" + format + "'");
  return permrel::report_exit_code(report);
}

// Flags win over the config file: reload defaults for any field the user
// did not pass explicitly.
void apply_config_file(CLI::App* cmd, permrel::RunConfig& config, const std::string& path) {
  if (path.empty()) return;
  permrel::RunConfig from_file;
  permrel::load_config_file(from_file, path);
  auto keep = [&](const char* flag) { return cmd->count(flag) > 0; };
  if (!keep("--n") && from_file.n) config.n = from_file.n;
  if (!keep("--l")) config.l = from_file.l;
  if (!keep("--perm") && !from_file.perms.empty()) config.perms = from_file.perms;
  if (!keep("--length-bound")) config.length_bound = from_file.length_bound;
  if (!keep("--mmax")) config.mmax_monoid = from_file.mmax_monoid;
  if (!keep("--mmax-group")) config.mmax_group = from_file.mmax_group;
  if (!keep("--depth")) config.depth = from_file.depth;
  if (!keep("--u-max")) config.u_max = from_file.u_max;
  if (!keep("--seed")) config.seed = from_file.seed;
  if (!keep("--format")) config.format = from_file.format;
  if (!keep("--parallel") && from_file.parallel) config.parallel = true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monoids and groups presented by permutation relations of fixed length"};
  app.require_subcommand(1);

  permrel::RunConfig config;
  std::string config_path;
  std::string wp_u, wp_v, wp_mode = "monoid";
  std::vector<std::string> rev_words;
  int rev_depth = 6;

  CLI::App* classify = app.add_subcommand("classify", "orbits, representatives, predicates");
  add_presentation_flags(classify, config, config_path);

  CLI::App* verify = app.add_subcommand(
      "verify", "identities, normal forms, index bound, embedding, cancellativity, decomposition");
  add_presentation_flags(verify, config, config_path);

  CLI::App* growth = app.add_subcommand("growth", "monoid and group growth with a type verdict");
  add_presentation_flags(growth, config, config_path);

  CLI::App* wp = app.add_subcommand("wp", "word problem for a pair of words");
  add_presentation_flags(wp, config, config_path);
  wp->add_option("u", wp_u, "first word, e.g. \"x1 x2\" or \"1 2\" (group mode: \"x1 x2^-1\")")
      ->required();
  wp->add_option("v", wp_v, "second word")->required();
  wp->add_option("--mode", wp_mode, "monoid or group");

  CLI::App* rev = app.add_subcommand("revcheck", "free-monoid right-reversibility toolkit");
  rev->add_option("--word", rev_words, "generator word over single-character letters; repeatable")
      ->required();
  rev->add_option("--depth", rev_depth, "search depth");
  std::string rev_format = "text";
  rev->add_option("--format", rev_format, "output format: text or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;  // usage errors are always exit code 1
  }

  try {
    if (classify->parsed()) {
      apply_config_file(classify, config, config_path);
      return emit(permrel::run_classify(config), config.format);
    }
    if (verify->parsed()) {
      apply_config_file(verify, config, config_path);
      return emit(permrel::run_verify(config), config.format);
    }
    if (growth->parsed()) {
      apply_config_file(growth, config, config_path);
      return emit(permrel::run_growth(config), config.format);
    }
    if (wp->parsed()) {
      apply_config_file(wp, config, config_path);
      return emit(permrel::run_wp(config, wp_u, wp_v, wp_mode), config.format);
    }
    if (rev->parsed()) {
      return emit(permrel::run_revcheck(rev_words, rev_depth), rev_format);
    }
  } catch (const permrel::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const permrel::CapExceeded& e) {
    std::cerr << "error: instance too large: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
