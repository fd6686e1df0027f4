#include "permrel/checks.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <future>
#include <random>
#include <sstream>

#include "permrel/errors.hpp"
#include "permrel/freemonoid.hpp"
#include "permrel/word.hpp"

namespace permrel {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

json words_json(const std::vector<PosWord>& ws) {
  json out = json::array();
  for (const PosWord& w : ws) out.push_back(format_pos_word(w));
  return out;
}

}  // namespace

void load_config_file(RunConfig& c, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trimmed(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError(path + ":" + std::to_string(lineno) + ": expected key=value");
    const std::string key = trimmed(line.substr(0, eq));
    const std::string value = trimmed(line.substr(eq + 1));
    try {
      if (key == "n")
        c.n = std::stoi(value);
      else if (key == "l")
        c.l = std::stoi(value);
      else if (key == "perm")
        c.perms.push_back(value);
      else if (key == "length_bound")
        c.length_bound = std::stoi(value);
      else if (key == "mmax")
        c.mmax_monoid = std::stoi(value);
      else if (key == "mmax_group")
        c.mmax_group = std::stoi(value);
      else if (key == "depth")
        c.depth = std::stoi(value);
      else if (key == "u_max")
        c.u_max = std::stoi(value);
      else if (key == "format")
        c.format = value;
      else if (key == "seed")
        c.seed = std::stoull(value);
      else if (key == "parallel")
        c.parallel = value == "1" || value == "true";
      else
        throw ParseError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    } catch (const std::invalid_argument&) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": bad value for '" + key + "'");
    }
  }
}

Presentation presentation_from(const RunConfig& c) {
  if (c.n < 1) throw ParseError("n must be at least 1 (set --n)");
  if (c.l < 2) throw ParseError("l must be at least 2");
  if (c.length_bound < c.l) throw ParseError("length bound must be at least l");
  std::vector<Perm> gens;
  gens.reserve(c.perms.size());
  for (const std::string& s : c.perms) gens.push_back(parse_perm(s, c.n));
  return make_presentation(c.n, c.l, gens);
}

json config_echo(const RunConfig& c) {
  json j;
  j["n"] = c.n;
  j["l"] = c.l;
  j["perms"] = c.perms;
  j["length_bound"] = c.length_bound;
  j["mmax"] = c.mmax_monoid;
  j["mmax_group"] = c.mmax_group;
  j["depth"] = c.depth;
  j["u_max"] = c.u_max;
  j["seed"] = c.seed;
  j["parallel"] = c.parallel;
  return j;
}

namespace {

CheckResult classify_result(const Presentation& p) {
  const Classification cls = classify(p.H);
  json data;
  data["group_order"] = p.H.order();
  data["orbits"] = p.H.orbits;
  data["reps"] = p.reps();
  data["rank"] = p.rank();
  data["semi_regular"] = cls.semi_regular;
  data["abelian"] = cls.abelian;
  data["transitive"] = cls.transitive;
  data["cancellative_predicted"] = cls.cancellative_predicted;
  // With trivial relations both structures are free on all n generators.
  data["free"] = p.rank() == p.n;
  return CheckResult{"classify", "pass", data, std::nullopt};
}

CheckResult identities_result(const Presentation& p, const CosetTable& ct, int u_max,
                              std::uint64_t seed) {
  const auto reports = verify_identities(p, ct, u_max, seed);
  json data = json::array();
  std::optional<json> witness;
  bool ok = true;
  for (const IdentityReport& r : reports) {
    json e;
    e["identity"] = r.identity;
    e["instances"] = r.instances;
    e["exhaustive"] = r.exhaustive;
    e["counterexamples"] = r.counterexamples.size();
    data.push_back(std::move(e));
    if (!r.counterexamples.empty()) {
      ok = false;
      if (!witness)
        witness = json{{"identity", r.identity},
                       {"lhs", format_signed_word(r.counterexamples.front().first)},
                       {"rhs", format_signed_word(r.counterexamples.front().second)}};
    }
  }
  return CheckResult{"identities", ok ? "pass" : "fail", json{{"families", data}}, witness};
}

CheckResult normal_form_result(const Presentation& p, const CosetTable& ct, std::uint64_t seed) {
  std::uint64_t checked = 0;
  std::optional<json> witness;
  const std::vector<int>& orbit1 = p.H.orbits.front();
  auto in_orbit1 = [&](int x) {
    return std::find(orbit1.begin(), orbit1.end(), x) != orbit1.end();
  };
  auto try_word = [&](const SignedWord& w) {
    if (witness) return;
    const NormalForm nf = normal_form(w, p, ct);
    ++checked;
    bool ok = nf.tail.size() == static_cast<std::size_t>(p.l - 1);
    for (int t : nf.tail) ok = ok && in_orbit1(t);
    SignedWord recombined = concat(nf.f, to_signed(nf.tail));
    ok = ok && equal_g(recombined, w, p, ct);
    for (int a : nf.f.letters) ok = ok && p.rep_of(a > 0 ? a : -a) == (a > 0 ? a : -a);
    if (!ok)
      witness = json{{"word", format_signed_word(w)},
                     {"f", format_signed_word(nf.f)},
                     {"tail", format_pos_word(nf.tail)}};
  };

  // Exhaustive up to length 3, then seeded samples of longer words.
  std::vector<SignedWord> layer{SignedWord{{}, true}};
  try_word(layer.front());
  for (int len = 1; len <= 3; ++len) {
    std::vector<SignedWord> next;
    for (const SignedWord& w : layer)
      for (int i = 1; i <= p.n; ++i)
        for (int sgn : {1, -1}) {
          SignedWord e = w;
          e.letters.push_back(sgn * i);
          try_word(e);
          next.push_back(std::move(e));
        }
    layer = std::move(next);
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> letter(1, p.n);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> len_dist(4, 7);
  for (int t = 0; t < 200; ++t) {
    SignedWord w;
    const int len = len_dist(rng);
    for (int i = 0; i < len; ++i) w.letters.push_back((coin(rng) ? 1 : -1) * letter(rng));
    try_word(w);
  }
  json data;
  data["words_checked"] = checked;
  return CheckResult{"normal_form_roundtrip", witness ? "fail" : "pass", data, witness};
}

CheckResult index_result(const Presentation& p, const CosetTable& ct) {
  const IndexReport ir = index_report(p, ct);
  const TableCheck tc = validate_coset_table(p, ct);
  json data;
  data["index"] = ir.index;
  data["bound"] = ir.bound;
  data["ker_pi_order"] = ir.ker_pi_order;
  if (ir.core_index) {
    data["core_index"] = *ir.core_index;
    data["radical_nilpotency_bound"] = *ir.radical_nilpotency_bound;
  } else {
    data["core_index"] = nullptr;
    data["radical_nilpotency_bound"] = nullptr;
  }
  json census = json::array();
  for (const auto& tails : tails_by_coset(p, ct)) census.push_back(tails.size());
  data["tails_per_coset"] = census;
  data["table_valid"] = tc.ok();
  const bool ok = tc.ok() && ir.index <= ir.bound;
  return CheckResult{"index_bound", ok ? "pass" : "fail", data, std::nullopt};
}

CheckResult embedding_result(const Presentation& p, const CosetTable& ct, int bound,
                             std::int64_t word_cap) {
  const Classification cls = classify(p.H);
  const EmbeddingReport er = embedding_check(p, ct, bound, word_cap);
  json data;
  data["checked_up_to"] = er.checked_up_to;
  data["embedding_predicted"] = cls.cancellative_predicted;
  std::optional<json> witness;
  std::string status = "pass";
  if (er.soundness_violation) {
    status = "fail";
    witness = json{{"kind", "equal_in_monoid_distinct_in_group"},
                   {"u", format_pos_word(er.soundness_violation->first)},
                   {"v", format_pos_word(er.soundness_violation->second)}};
  } else if (er.group_collapse) {
    witness = json{{"kind", "equal_in_group_distinct_in_monoid"},
                   {"u", format_pos_word(er.group_collapse->first)},
                   {"v", format_pos_word(er.group_collapse->second)}};
    // A collapse is the expected outcome exactly when embedding must fail.
    status = cls.cancellative_predicted ? "fail" : "pass";
    data["non_embedding_witnessed"] = true;
  } else {
    data["non_embedding_witnessed"] = false;
    status = cls.cancellative_predicted ? "pass" : "info";
  }
  return CheckResult{"embedding", status, data, witness};
}

CheckResult cancellativity_result(const Presentation& p, int bound, std::int64_t word_cap) {
  const Classification cls = classify(p.H);
  const auto w = cancellativity_check(p, bound, word_cap);
  json data;
  data["predicted_cancellative"] = cls.cancellative_predicted;
  data["checked_up_to"] = bound;
  std::optional<json> witness;
  std::string status;
  if (w) {
    witness = json{{"side", w->side == CancellationWitness::Side::left ? "left" : "right"},
                   {"a", format_pos_word(w->a)},
                   {"u", format_pos_word(w->u)},
                   {"v", format_pos_word(w->v)}};
    status = cls.cancellative_predicted ? "fail" : "pass";
  } else {
    status = cls.cancellative_predicted ? "pass" : "info";  // inconclusive at bound
  }
  data["agrees_with_prediction"] = (w.has_value() != cls.cancellative_predicted);
  return CheckResult{"cancellativity", status, data, witness};
}

CheckResult decomposition_result(const Presentation& p, int bound, std::int64_t word_cap) {
  const Decomposition d = decomposition_T(p, bound, word_cap);
  json data;
  data["left_basis"] = words_json(d.left_basis);
  data["right_basis"] = words_json(d.right_basis);
  data["left_covers"] = d.left_covers;
  data["right_covers"] = d.right_covers;
  data["left_stabilized"] = d.left_stabilized;
  data["right_stabilized"] = d.right_stabilized;
  data["verified_up_to"] = d.verified_up_to;
  std::string status = "pass";
  if (!d.left_covers || !d.right_covers)
    status = "fail";
  else if (!d.left_stabilized || !d.right_stabilized)
    status = "info";  // a finding, not an error
  return CheckResult{"decomposition", status, data, std::nullopt};
}

}  // namespace

Report run_classify(const RunConfig& c) {
  Report rep;
  rep.command = "classify";
  rep.config_echo = config_echo(c);
  const auto t0 = Clock::now();
  const Presentation p = presentation_from(c);
  rep.results.push_back(classify_result(p));
  rep.timings_ms["classify"] = ms_since(t0);
  return rep;
}

Report run_verify(const RunConfig& c) {
  Report rep;
  rep.command = "verify";
  rep.config_echo = config_echo(c);
  const Presentation p = presentation_from(c);
  const auto t0 = Clock::now();
  const CosetTable ct = todd_coxeter(p, c.coset_cap);
  rep.timings_ms["todd_coxeter"] = ms_since(t0);

  using Task = std::function<CheckResult()>;
  std::vector<std::pair<std::string, Task>> tasks;
  tasks.emplace_back("classify", [&] { return classify_result(p); });
  tasks.emplace_back("identities", [&] { return identities_result(p, ct, c.u_max, c.seed); });
  tasks.emplace_back("normal_form_roundtrip", [&] { return normal_form_result(p, ct, c.seed); });
  tasks.emplace_back("index_bound", [&] { return index_result(p, ct); });
  tasks.emplace_back("embedding", [&] { return embedding_result(p, ct, c.length_bound, c.word_cap); });
  tasks.emplace_back("cancellativity", [&] { return cancellativity_result(p, c.length_bound, c.word_cap); });
  tasks.emplace_back("decomposition", [&] { return decomposition_result(p, c.length_bound, c.word_cap); });

  if (c.parallel) {
    std::vector<std::future<std::pair<CheckResult, double>>> futures;
    for (auto& [name, task] : tasks)
      futures.push_back(std::async(std::launch::async, [task = task] {
        const auto t = Clock::now();
        CheckResult r = task();
        return std::make_pair(std::move(r), ms_since(t));
      }));
    for (std::size_t i = 0; i < futures.size(); ++i) {
      auto [result, ms] = futures[i].get();
      rep.timings_ms[tasks[i].first] = ms;
      rep.results.push_back(std::move(result));
    }
  } else {
    for (auto& [name, task] : tasks) {
      const auto t = Clock::now();
      rep.results.push_back(task());
      rep.timings_ms[name] = ms_since(t);
    }
  }
  return rep;
}

Report run_growth(const RunConfig& c) {
  Report rep;
  rep.command = "growth";
  rep.config_echo = config_echo(c);
  const Presentation p = presentation_from(c);
  const Classification cls = classify(p.H);

  auto t0 = Clock::now();
  const std::vector<std::uint64_t> g = growth_s(p, c.mmax_monoid, c.word_cap);
  rep.timings_ms["growth_monoid"] = ms_since(t0);
  t0 = Clock::now();
  const CosetTable ct = todd_coxeter(p, c.coset_cap);
  const std::vector<std::uint64_t> b = growth_g(p, ct, c.mmax_group, c.state_cap);
  rep.timings_ms["growth_group"] = ms_since(t0);

  std::vector<std::uint64_t> inc;
  for (std::size_t m = 1; m < b.size(); ++m) inc.push_back(b[m] - b[m - 1]);

  // Linear growth shows up as eventually constant per-length counts. Class
  // counts settle from length l+1, ball increments from 2l-1 (tail detours
  // reach 2(l-1) letters past an element on both sides).
  auto constant_from = [&](const std::vector<std::uint64_t>& v, int from) {
    if (static_cast<int>(v.size()) <= from + 1) return false;
    for (std::size_t i = static_cast<std::size_t>(from) + 1; i < v.size(); ++i)
      if (v[i] != v[static_cast<std::size_t>(from)]) return false;
    return true;
  };
  const bool g_linear = constant_from(g, p.l + 1);
  const bool b_linear = constant_from(inc, 2 * p.l - 2);  // inc[m-1] = b(m)-b(m-1)
  const int probe = std::min(c.mmax_monoid, 6);
  const bool g_exponential =
      g.size() > static_cast<std::size_t>(probe) &&
      g[static_cast<std::size_t>(probe)] >= (1ull << probe);

  std::string verdict;
  if (g_linear && b_linear)
    verdict = "gk_dimension_1";
  else if (g_exponential)
    verdict = "exponential";
  else
    verdict = "undetermined";
  const bool matches = cls.transitive ? verdict == "gk_dimension_1" : verdict == "exponential";

  json data;
  data["monoid_classes_by_length"] = g;
  data["group_ball_sizes"] = b;
  data["group_ball_increments"] = inc;
  data["transitive"] = cls.transitive;
  data["verdict"] = verdict;
  rep.results.push_back(
      CheckResult{"growth_dichotomy", matches ? "pass" : "fail", data, std::nullopt});
  return rep;
}

Report run_wp(const RunConfig& c, const std::string& u_text, const std::string& v_text,
              const std::string& mode) {
  Report rep;
  rep.command = "wp";
  rep.config_echo = config_echo(c);
  const Presentation p = presentation_from(c);
  const auto t0 = Clock::now();
  json data;
  data["mode"] = mode;
  if (mode == "monoid") {
    const PosWord u = parse_pos_word(u_text, p.n);
    const PosWord v = parse_pos_word(v_text, p.n);
    const SClass cu = class_of(u, p, c.class_cap);
    const SClass cv = class_of(v, p, c.class_cap);
    data["u"] = format_pos_word(u);
    data["v"] = format_pos_word(v);
    data["u_canonical"] = format_pos_word(cu.canonical);
    data["v_canonical"] = format_pos_word(cv.canonical);
    data["u_class_size"] = cu.size;
    data["v_class_size"] = cv.size;
    data["equal"] = u.size() == v.size() && cu.canonical == cv.canonical;
  } else if (mode == "group") {
    const SignedWord u = parse_signed_word(u_text, p.n);
    const SignedWord v = parse_signed_word(v_text, p.n);
    const CosetTable ct = todd_coxeter(p, c.coset_cap);
    const GInvariant iu = invariant(u, p, ct);
    const GInvariant iv = invariant(v, p, ct);
    const NormalForm nu = normal_form(u, p, ct);
    const NormalForm nv = normal_form(v, p, ct);
    data["u"] = format_signed_word(u);
    data["v"] = format_signed_word(v);
    data["u_invariant"] = json{{"pi", format_signed_word(iu.pi_word)}, {"coset", iu.coset}};
    data["v_invariant"] = json{{"pi", format_signed_word(iv.pi_word)}, {"coset", iv.coset}};
    data["u_normal_form"] =
        json{{"f", format_signed_word(nu.f)}, {"tail", format_pos_word(nu.tail)}};
    data["v_normal_form"] =
        json{{"f", format_signed_word(nv.f)}, {"tail", format_pos_word(nv.tail)}};
    data["equal"] = equal_g(u, v, p, ct);
  } else {
    throw ParseError("mode must be 'monoid' or 'group'");
  }
  rep.results.push_back(
      CheckResult{"word_problem", data["equal"].get<bool>() ? "pass" : "info", data, std::nullopt});
  rep.timings_ms["word_problem"] = ms_since(t0);
  return rep;
}

Report run_revcheck(const std::vector<std::string>& words, int depth) {
  Report rep;
  rep.command = "revcheck";
  rep.config_echo = json{{"words", words}, {"depth", depth}};
  const auto t0 = Clock::now();
  json data;
  json roots = json::object();
  for (const std::string& w : words) roots[w] = primitive_root(w);
  data["primitive_roots"] = roots;
  const auto envelope = cyclic_envelope(words);
  data["cyclic_envelope"] = envelope ? json(*envelope) : json(nullptr);
  const ReversibilityReport rr = right_reversible_bounded(words, depth);
  data["reversible_up_to_depth"] = rr.reversible_up_to_depth;
  std::optional<json> witness;
  if (rr.counterexample)
    witness = json{{"s", rr.counterexample->first}, {"t", rr.counterexample->second}};
  // A reversible verdict without a cyclic envelope contradicts the theory
  // and means the depth must be escalated until a counterexample appears.
  std::string status = "pass";
  if (rr.reversible_up_to_depth && !envelope) status = "fail";
  rep.results.push_back(CheckResult{"right_reversibility", status, data, witness});
  rep.timings_ms["right_reversibility"] = ms_since(t0);
  return rep;
}

}  // namespace permrel
