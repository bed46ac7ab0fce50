#include "ppnkit/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ppnkit/arith.hpp"
#include "ppnkit/erdos_moser.hpp"
#include "ppnkit/interval.hpp"
#include "ppnkit/ppn.hpp"
#include "ppnkit/residues.hpp"
#include "ppnkit/search.hpp"
#include "ppnkit/sieve.hpp"
#include "ppnkit/sylvester.hpp"

namespace ppnkit {

namespace {

using json = nlohmann::ordered_json;

json nat(const Natural& n) { return n.get_str(); }
json rat(const Rational& q) { return q.get_str(); }

json interval_json(const Interval& iv, int significant = 0) {
  return json{{"lo", iv.lo_string(significant)},
              {"hi", iv.hi_string(significant)},
              {"precision", iv.digits()}};
}

json naturals_json(const std::vector<Natural>& values) {
  json arr = json::array();
  for (const Natural& v : values) arr.push_back(nat(v));
  return arr;
}

json factorization_json(const Factorization& f) {
  json factors = json::array();
  for (const auto& fp : f.factors)
    factors.push_back(json{{"prime", nat(fp.prime)}, {"exponent", fp.exponent}});
  return json{{"display", f.to_string()}, {"factors", factors}};
}

json record_json(const PpnRecord& r) {
  return json{{"value", nat(r.value)},
              {"primes", naturals_json(r.primes)},
              {"factor_count", r.factor_count()},
              {"primality_certain", r.primality_certain}};
}

Natural parse_natural(const std::string& text) {
  if (text.empty()) throw CLI::ValidationError("empty integer literal");
  for (char c : text)
    if (c < '0' || c > '9')
      throw CLI::ValidationError("not a nonnegative integer: " + text);
  return Natural(text, 10);
}

std::vector<Natural> parse_natural_list(const std::string& text) {
  std::vector<Natural> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_natural(item));
  if (out.empty()) throw CLI::ValidationError("empty list");
  return out;
}

int env_default_precision() {
  if (const char* v = std::getenv(kPrecisionEnvVar)) {
    int p = std::atoi(v);
    if (p >= 2) return p;
  }
  return kDefaultIntervalDigits;
}

enum class Status { ok, rejected, error };

const char* to_string(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::rejected: return "rejected";
    case Status::error: return "error";
  }
  return "error";
}

struct Outcome {
  Status status = Status::ok;
  json result;
};

// --------------------------------------------------------------------
// command handlers
// --------------------------------------------------------------------

Outcome do_ppn_verify(const std::string& value_text, const std::string& claim_text) {
  Natural K = parse_natural(value_text);
  PpnVerification v = claim_text.empty()
                          ? verify_ppn(K)
                          : verify_ppn_claimed(K, parse_natural_list(claim_text));
  if (v.ok()) {
    json result = record_json(*v.record);
    result["accepted"] = true;
    return {Status::ok, result};
  }
  return {Status::rejected,
          json{{"accepted", false},
               {"value", nat(K)},
               {"reason", ppnkit::to_string(*v.rejection)}}};
}

Outcome do_ppn_search(unsigned r_max, const std::string& limit_text, unsigned jobs,
                      bool even_only, bool no_two_prime,
                      const std::string& prime_limit_text) {
  SearchConfig config;
  config.r_max = r_max;
  if (!limit_text.empty()) config.value_limit = parse_natural(limit_text);
  if (!prime_limit_text.empty()) config.prime_limit = parse_natural(prime_limit_text);
  config.parallel_width = jobs;
  config.even_only = even_only;
  config.two_prime_solve = !no_two_prime;

  SearchOutcome outcome = search_ppns(config);
  json records = json::array();
  for (const PpnRecord& r : outcome.records) records.push_back(record_json(r));
  json result{{"count", outcome.records.size()},
              {"records", std::move(records)},
              {"complete", outcome.complete}};
  if (even_only)
    result["note"] = "even-only sweep; completeness is conjecture-dependent";
  return {Status::ok, result};
}

Outcome do_ppn_construct(const std::string& value_text, const std::string& mode) {
  Natural K = parse_natural(value_text);
  PpnVerification v = verify_ppn(K);
  if (!v.ok())
    return {Status::rejected,
            json{{"value", nat(K)},
                 {"reason", std::string("input is not a PPN: ") +
                                ppnkit::to_string(*v.rejection)}}};
  const PpnRecord& record = *v.record;

  if (mode == "successor") {
    auto next = successor(record);
    if (!next)
      return {Status::rejected,
              json{{"value", nat(K)},
                   {"successor", nullptr},
                   {"reason", "K+1 is not prime"}}};
    return {Status::ok, json{{"value", nat(K)}, {"successor", record_json(*next)}}};
  }
  if (mode == "quadratic") {
    auto extensions = quadratic_extensions(record);
    json arr = json::array();
    for (const PpnRecord& r : extensions) arr.push_back(record_json(r));
    if (extensions.empty())
      return {Status::rejected,
              json{{"value", nat(K)},
                   {"extensions", std::move(arr)},
                   {"reason", "no divisor pair of K^2+1 yields two new primes"}}};
    return {Status::ok, json{{"value", nat(K)}, {"extensions", std::move(arr)}}};
  }
  if (mode == "triple") {
    auto t = triple(record);
    if (!t)
      return {Status::rejected,
              json{{"value", nat(K)},
                   {"reason", "K+1 and K^2+K+1 are not both prime"}}};
    json result{{"value", nat(K)},
                {"triple", json::array({record_json(t->first), record_json(t->second),
                                        record_json(t->third)})}};
    if (t->residues_mod_864) {
      result["residues_mod_864"] =
          json::array({nat((*t->residues_mod_864)[0]), nat((*t->residues_mod_864)[1]),
                       nat((*t->residues_mod_864)[2])});
    }
    return {Status::ok, result};
  }
  throw CLI::ValidationError("unknown construct mode: " + mode);
}

Outcome do_ppn_table() {
  json rows = json::array();
  for (const PpnRecord& r : known_ppns()) rows.push_back(record_json(r));
  return {Status::ok, json{{"rows", std::move(rows)}}};
}

Outcome do_sylvester(unsigned count, unsigned max_index) {
  json terms = json::array();
  for (unsigned n = 1; n <= count; ++n) terms.push_back(nat(sylvester_term(n, max_index)));
  return {Status::ok, json{{"count", count}, {"terms", std::move(terms)}}};
}

Outcome do_curtiss(unsigned r, unsigned max_index) {
  Natural bound = curtiss_bound(r, max_index);
  return {Status::ok, json{{"factors", r},
                           {"bound", nat(bound)},
                           {"digits", bound.get_str().size()}}};
}

Outcome do_residues(const std::string& values_text, const std::string& modulus_text,
                    const std::string& indices_text, const std::string& ap_start_text,
                    const std::string& ap_step_text) {
  std::vector<Natural> values;
  if (values_text.empty()) {
    const auto& table = known_ppns();
    for (std::size_t i = 1; i < table.size(); ++i) values.push_back(table[i].value);
  } else {
    values = parse_natural_list(values_text);
  }
  Natural modulus = modulus_text.empty() ? Natural(288) : parse_natural(modulus_text);
  std::vector<unsigned> indices;
  if (!indices_text.empty())
    for (const Natural& n : parse_natural_list(indices_text))
      indices.push_back(static_cast<unsigned>(n.get_ui()));

  ResidueReport report = residue_ap(values, modulus, indices);
  json result{{"modulus", nat(modulus)},
              {"values", naturals_json(values)},
              {"indices", report.indices},
              {"residues", naturals_json(report.residues)}};
  if (report.ap)
    result["ap"] = json{{"start", nat(report.ap->start)}, {"step", nat(report.ap->step)}};
  else
    result["ap"] = nullptr;

  // Modulus uniqueness: explicit targets, or the detected AP.
  std::optional<Natural> a, d;
  if (!ap_start_text.empty() && !ap_step_text.empty()) {
    a = parse_natural(ap_start_text);
    d = parse_natural(ap_step_text);
  } else if (report.ap) {
    a = report.ap->start;
    d = report.ap->step;
  }
  if (a) {
    ApModuliReport moduli = find_ap_moduli(values, *a, *d, indices);
    json mj{{"ap_start", nat(*a)},
            {"ap_step", nat(*d)},
            {"threshold", nat(moduli.threshold)},
            {"gcd_of_differences", nat(moduli.gcd_of_differences)},
            {"unbounded_family", moduli.unbounded_family}};
    if (moduli.gcd_factorization)
      mj["gcd_factorization"] = factorization_json(*moduli.gcd_factorization);
    json diffs = json::array();
    for (const auto& diff : moduli.nonzero_differences)
      diffs.push_back(json{{"index", diff.index},
                           {"value", diff.value.get_str()},
                           {"factorization", factorization_json(diff.factorization)}});
    mj["nonzero_differences"] = std::move(diffs);
    mj["moduli"] = naturals_json(moduli.moduli);
    result["ap_moduli"] = std::move(mj);
  }
  return {Status::ok, result};
}

Outcome do_em_check(const std::string& k_text, const std::string& n_text) {
  Natural k = parse_natural(k_text);
  Natural n;
  if (!n_text.empty()) {
    n = parse_natural(n_text);
  } else {
    PpnVerification v = verify_ppn(k);
    if (!v.ok())
      throw CLI::ValidationError(
          "--n is required when K is not a PPN (no canonical exponent)");
    n = canonical_exponent(*v.record);
  }
  EmCheck check = em_criterion(k, n);
  json result{{"k", nat(check.k)},
              {"n", nat(check.n)},
              {"fraction_sum", rat(check.fraction_sum)},
              {"sum_is_integer", check.sum_is_integer},
              {"exponent_condition", check.exponent_condition},
              {"holds_criterion", check.holds_criterion}};
  if (check.integer_value) {
    result["integer_value"] = nat(*check.integer_value);
    if (*check.integer_value >= 2)
      result["note"] = "fraction sum is an integer >= 2 (not a PPN)";
  }
  result["holds_direct"] =
      check.holds_direct ? json(*check.holds_direct) : json(nullptr);
  return {check.holds_criterion ? Status::ok : Status::rejected, result};
}

json bound_report_json(const BoundReport& report) {
  json steps = json::array();
  for (const BoundStep& s : report.steps)
    steps.push_back(json{{"name", s.name},
                         {"confirmed", s.confirmed},
                         {"inequality", s.inequality},
                         {"lo", s.lo},
                         {"hi", s.hi}});
  json result{{"omega_min", report.omega_min},
              {"mode", ppnkit::to_string(report.mode)},
              {"precision", report.precision},
              {"threshold", rat(report.threshold)},
              {"fringe_slack", rat(report.fringe_slack)},
              {"x_star", report.x_star},
              {"x_star_refined", report.x_star_refined},
              {"fringe", interval_json(report.fringe, 12)},
              {"mertens_at_x_star", interval_json(report.mertens_at_x_star, 12)},
              {"log_m_lower", interval_json(report.log_m_lower, 12)},
              {"log_k_lower", interval_json(report.log_k_lower, 12)},
              {"exponent_lower", interval_json(report.exponent_lower, 12)},
              {"mertens_below_requirement", report.mertens_below_requirement},
              {"steps", std::move(steps)},
              {"all_confirmed", report.all_confirmed}};
  result["first_unconfirmed"] =
      report.first_unconfirmed ? json(*report.first_unconfirmed) : json(nullptr);
  return result;
}

Outcome do_em_bound(unsigned omega_min, bool rh, const std::string& x_star,
                    int precision, bool refine) {
  BoundMode mode = rh ? BoundMode::riemann_hypothesis : BoundMode::unconditional;
  std::optional<std::string> x = x_star.empty() ? std::nullopt
                                                : std::make_optional(x_star);
  BoundReport report = moser_bound(omega_min, mode, x, precision, refine);
  return {report.all_confirmed ? Status::ok : Status::rejected,
          bound_report_json(report)};
}

Outcome do_mertens_verify(const std::string& limit_text, unsigned samples,
                          int precision, const std::string& cache_path) {
  Rational limit_q = parse_decimal(limit_text);
  Natural limit_n = limit_q.get_num() / limit_q.get_den();
  if (!limit_n.fits_ulong_p())
    throw CLI::ValidationError("limit too large for the sieve");
  MertensVerifyReport report =
      mertens_verify(limit_n.get_ui(), samples, precision, cache_path);
  json rows = json::array();
  for (const MertensSample& s : report.samples) {
    json row{{"x", s.x},
             {"recip_sum", interval_json(s.recip_sum, 20)},
             {"estimate_unconditional", interval_json(s.estimate_unconditional, 20)},
             {"estimate_rh", interval_json(s.estimate_rh, 20)},
             {"inside_unconditional", s.inside_unconditional},
             {"inside_rh", s.inside_rh}};
    if (s.theta_bound) {
      row["theta_bound"] = interval_json(*s.theta_bound, 20);
      row["theta_sum_lo"] = s.theta_sum_lo;
      row["theta_above_bound"] = s.theta_above_bound;
    }
    rows.push_back(std::move(row));
  }
  json result{{"limit", report.limit},
              {"requested_samples", report.requested_samples},
              {"samples", std::move(rows)},
              {"all_inside", report.all_inside},
              {"all_theta_above", report.all_theta_above}};
  return {report.all_inside && report.all_theta_above ? Status::ok : Status::rejected,
          result};
}

}  // namespace

int run_cli(const std::vector<std::string>& argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"primary pseudoperfect number toolkit"};
  app.require_subcommand(1);

  // ppn ----------------------------------------------------------------
  auto* ppn = app.add_subcommand("ppn", "verify, search for, and construct PPNs");
  ppn->require_subcommand(1);

  std::string verify_value, verify_claim;
  auto* verify = ppn->add_subcommand("verify", "check the defining condition of K");
  verify->add_option("K", verify_value, "value to verify")->required();
  verify->add_option("--claim", verify_claim,
                     "comma-separated claimed prime factorization");

  unsigned search_r = 5, search_jobs = 1;
  std::string search_limit, search_prime_limit;
  bool search_even_only = false, search_no_two_prime = false;
  auto* search = ppn->add_subcommand("search", "exhaustive sweep up to a bound");
  search->add_option("--max-factors", search_r, "largest prime-factor count")
      ->required();
  search->add_option("--limit", search_limit, "cap on K (default: Curtiss bound)");
  search->add_option("--jobs", search_jobs, "parallel subtree workers");
  search->add_flag("--even-only", search_even_only,
                   "restrict to even K (conjecture-dependent)");
  search->add_flag("--no-two-prime-solve", search_no_two_prime,
                   "disable the penultimate-level discriminant solve");
  search->add_option("--prime-limit", search_prime_limit,
                     "cap on candidate primes (truncates the sweep)");

  std::string construct_value, construct_mode;
  auto* construct = ppn->add_subcommand("construct", "apply a PPN construction");
  construct->add_option("K", construct_value, "verified starting PPN")->required();
  construct->add_option("--mode", construct_mode, "successor | quadratic | triple")
      ->required()
      ->check(CLI::IsMember({"successor", "quadratic", "triple"}));

  auto* table = ppn->add_subcommand("table", "the eight known PPNs");

  // sylvester / curtiss --------------------------------------------------
  unsigned sylvester_count = 8, sylvester_max = kDefaultSylvesterIndexCap;
  auto* sylvester = app.add_subcommand("sylvester", "Sylvester's sequence");
  sylvester->add_option("--count", sylvester_count, "terms to emit")->required();
  sylvester->add_option("--max-index", sylvester_max, "index cap override");

  unsigned curtiss_r = 1, curtiss_max = kDefaultSylvesterIndexCap;
  auto* curtiss = app.add_subcommand("curtiss", "Curtiss ceiling S_{r+1} - 1");
  curtiss->add_option("--factors", curtiss_r, "prime-factor count r")->required();
  curtiss->add_option("--max-index", curtiss_max, "index cap override");

  // residues --------------------------------------------------------------
  std::string residues_values, residues_modulus, residues_indices,
      residues_ap_start, residues_ap_step;
  auto* residues = app.add_subcommand("residues", "residues and AP structure");
  residues->add_option("--values", residues_values,
                       "comma-separated values (default: known PPNs r=2..8)");
  residues->add_option("--modulus", residues_modulus, "modulus (default 288)");
  residues->add_option("--indices", residues_indices,
                       "row indices weighting the AP step (default positional)");
  residues->add_option("--ap-start", residues_ap_start, "target AP start a");
  residues->add_option("--ap-step", residues_ap_step, "target AP step d");

  // em ---------------------------------------------------------------------
  auto* em = app.add_subcommand("em", "Erdos-Moser congruence and bound");
  em->require_subcommand(1);

  std::string em_k, em_n;
  auto* em_check = em->add_subcommand("check", "EM congruence via Prop-5 criterion");
  em_check->add_option("--k", em_k, "modulus k")->required();
  em_check->add_option("--n", em_n, "exponent (default: canonical exponent of a PPN)");

  unsigned bound_omega = 33;
  bool bound_rh = false, bound_refine = false;
  std::string bound_x_star;
  int bound_precision = env_default_precision();
  auto* em_bound = em->add_subcommand("bound", "conditional lower-bound chain");
  em_bound->add_option("--omega-min", bound_omega, "premised minimum omega(k)");
  em_bound->add_flag("--rh", bound_rh, "use Schoenfeld's conditional envelope");
  em_bound->add_option("--x-star", bound_x_star, "override the Mertens cut point");
  em_bound->add_option("--precision", bound_precision, "interval decimal digits");
  em_bound->add_flag("--refine-x-star", bound_refine,
                     "bisect for the largest admissible x");

  // mertens ------------------------------------------------------------------
  auto* mertens = app.add_subcommand("mertens", "analytic envelope soundness");
  mertens->require_subcommand(1);
  std::string mertens_limit, mertens_cache;
  unsigned mertens_samples = 20;
  int mertens_precision = env_default_precision();
  auto* mertens_verify_cmd =
      mertens->add_subcommand("verify", "sieve and test the envelopes");
  mertens_verify_cmd->add_option("--limit", mertens_limit, "sieve limit")->required();
  mertens_verify_cmd->add_option("--samples", mertens_samples, "sample points");
  mertens_verify_cmd->add_option("--precision", mertens_precision,
                                 "interval decimal digits");
  mertens_verify_cmd->add_option("--sieve-cache", mertens_cache,
                                 "bitset cache file path");

  std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
  std::reverse(args.begin(), args.end());  // CLI11 consumes reversed args

  json envelope;
  auto emit = [&](Status status, json inputs, json result, long long ms) {
    envelope = json{{"command", json::array()},
                    {"inputs", std::move(inputs)},
                    {"result", std::move(result)},
                    {"status", to_string(status)},
                    {"timing_ms", ms}};
    for (const CLI::App* sub = &app; !sub->get_subcommands().empty();) {
      sub = sub->get_subcommands().front();
      envelope["command"].push_back(sub->get_name());
    }
    out << envelope.dump(2) << "\n";
  };

  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed_ms = [&t0] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  };

  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    emit(Status::error, json::object(), json{{"error", e.what()}}, elapsed_ms());
    return 2;
  }

  try {
    Outcome outcome;
    json inputs = json::object();

    if (verify->parsed()) {
      inputs = {{"K", verify_value}};
      if (!verify_claim.empty()) inputs["claim"] = verify_claim;
      outcome = do_ppn_verify(verify_value, verify_claim);
    } else if (search->parsed()) {
      inputs = {{"max_factors", search_r},
                {"limit", search_limit.empty() ? json(nullptr) : json(search_limit)},
                {"jobs", search_jobs},
                {"even_only", search_even_only},
                {"two_prime_solve", !search_no_two_prime}};
      if (!search_prime_limit.empty()) inputs["prime_limit"] = search_prime_limit;
      outcome = do_ppn_search(search_r, search_limit, search_jobs, search_even_only,
                              search_no_two_prime, search_prime_limit);
    } else if (construct->parsed()) {
      inputs = {{"K", construct_value}, {"mode", construct_mode}};
      outcome = do_ppn_construct(construct_value, construct_mode);
    } else if (table->parsed()) {
      outcome = do_ppn_table();
    } else if (sylvester->parsed()) {
      inputs = {{"count", sylvester_count}, {"max_index", sylvester_max}};
      outcome = do_sylvester(sylvester_count, sylvester_max);
    } else if (curtiss->parsed()) {
      inputs = {{"factors", curtiss_r}, {"max_index", curtiss_max}};
      outcome = do_curtiss(curtiss_r, curtiss_max);
    } else if (residues->parsed()) {
      inputs = {{"values", residues_values.empty() ? json("table-rows-2-8")
                                                   : json(residues_values)},
                {"modulus", residues_modulus.empty() ? json("288")
                                                     : json(residues_modulus)}};
      if (!residues_indices.empty()) inputs["indices"] = residues_indices;
      if (!residues_ap_start.empty()) inputs["ap_start"] = residues_ap_start;
      if (!residues_ap_step.empty()) inputs["ap_step"] = residues_ap_step;
      outcome = do_residues(residues_values, residues_modulus, residues_indices,
                            residues_ap_start, residues_ap_step);
    } else if (em_check->parsed()) {
      inputs = {{"k", em_k}, {"n", em_n.empty() ? json(nullptr) : json(em_n)}};
      outcome = do_em_check(em_k, em_n);
    } else if (em_bound->parsed()) {
      inputs = {{"omega_min", bound_omega},
                {"rh", bound_rh},
                {"x_star", bound_x_star.empty() ? json(nullptr) : json(bound_x_star)},
                {"precision", bound_precision},
                {"refine_x_star", bound_refine}};
      outcome = do_em_bound(bound_omega, bound_rh, bound_x_star, bound_precision,
                            bound_refine);
    } else if (mertens_verify_cmd->parsed()) {
      inputs = {{"limit", mertens_limit},
                {"samples", mertens_samples},
                {"precision", mertens_precision}};
      if (!mertens_cache.empty()) inputs["sieve_cache"] = mertens_cache;
      outcome = do_mertens_verify(mertens_limit, mertens_samples, mertens_precision,
                                  mertens_cache);
    } else {
      err << "no subcommand selected\n";
      emit(Status::error, inputs, json{{"error", "no subcommand"}}, elapsed_ms());
      return 2;
    }

    emit(outcome.status, std::move(inputs), std::move(outcome.result), elapsed_ms());
    return outcome.status == Status::ok ? 0 : outcome.status == Status::rejected ? 1 : 2;
  } catch (const SearchLimitError& e) {
    json partial = json::array();
    for (const PpnRecord& r : e.partial.records) partial.push_back(record_json(r));
    err << "resource limit: " << e.what() << "\n";
    emit(Status::error,
         json::object(),
         json{{"error", e.what()},
              {"partial_records", std::move(partial)},
              {"frontier", e.partial.frontier}},
         elapsed_ms());
    return 2;
  } catch (const FactorLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    emit(Status::error, json::object(),
         json{{"error", e.what()},
              {"partial_factorization", factorization_json(e.partial)},
              {"unfactored", nat(e.unfactored)}},
         elapsed_ms());
    return 2;
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    emit(Status::error, json::object(), json{{"error", e.what()}}, elapsed_ms());
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    emit(Status::error, json::object(), json{{"error", e.what()}}, elapsed_ms());
    return 2;
  }
}

}  // namespace ppnkit
