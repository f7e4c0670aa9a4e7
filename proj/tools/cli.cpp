#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "coinbound/closed_form.hpp"
#include "coinbound/oracle.hpp"
#include "coinbound/representation.hpp"

namespace coinbound::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json envelope(const std::string& command, Json input) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  doc["input"] = std::move(input);
  return doc;
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump() << '\n'; }

Int parse_positive(const std::string& text, const char* what) {
  Int value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || value <= 0) {
    throw UsageError(std::string(what) + " must be a positive integer, got '" + text + "'");
  }
  return value;
}

Int resolve_capacity(const std::optional<Int>& flag, const std::optional<std::string>& env) {
  if (flag) {
    if (*flag <= 0) throw UsageError("--capacity must be a positive integer");
    return *flag;
  }
  if (env) return parse_positive(*env, kCapacityEnvVar);
  return kDefaultOracleCapacity;
}

Json to_json(const std::vector<Int>& values) { return Json(values); }

struct InstanceFlags {
  Int m = 0, n = 0, max_a = 0, max_b = 0;

  Json echo() const { return Json{{"m", m}, {"n", n}, {"A", max_a}, {"B", max_b}}; }
};

void add_instance_flags(CLI::App* cmd, InstanceFlags& f) {
  cmd->add_option("--m", f.m, "first coin value")->required();
  cmd->add_option("--n", f.n, "second coin value")->required();
  cmd->add_option("--A", f.max_a, "maximum count of coin m")->required();
  cmd->add_option("--B", f.max_b, "maximum count of coin n")->required();
}

// Commands. Each returns an exit code and writes its document to out.

int cmd_count(const InstanceFlags& f, const std::string& method, Int capacity,
              std::ostream& out) {
  Json doc = envelope("count", f.echo());
  const BoundedInstance inst = make_instance(f.m, f.n, f.max_a, f.max_b);
  const OracleOptions options{.capacity = capacity};

  int code = kExitOk;
  if (method == "formula") {
    doc["result"] = Json{{"count", count_representable(inst)}};
  } else if (method == "oracle") {
    doc["result"] = Json{{"count", oracle_count(GeneralInstance(inst), options)}};
  } else {
    const Int formula = count_representable(inst);
    const Int oracle = oracle_count(GeneralInstance(inst), options);
    doc["result"] =
        Json{{"count_formula", formula}, {"count_oracle", oracle}, {"agree", formula == oracle}};
    if (formula != oracle) code = kExitMismatch;
  }
  doc["case"] = to_string(classify(inst));
  doc["method"] = method;
  emit(out, doc);
  return code;
}

int cmd_gaps(const InstanceFlags& f, const std::string& format, Int capacity,
             std::ostream& out) {
  const BoundedInstance inst = make_instance(f.m, f.n, f.max_a, f.max_b);
  const GapReport report = bounded_gaps(inst, OracleOptions{.capacity = capacity});

  if (format == "csv") {
    out << "gap\n";
    for (Int g : report.gaps) out << g << '\n';
    return kExitOk;
  }

  Json doc = envelope("gaps", f.echo());
  doc["result"] = Json{{"count", static_cast<Int>(report.gaps.size())},
                       {"gaps", to_json(report.gaps)},
                       {"lower_gaps", to_json(report.lower_gaps)},
                       {"upper_gaps", to_json(report.upper_gaps)}};
  doc["case"] = to_string(report.case_tag);
  doc["method"] = report.case_tag == CaseTag::LargeCoefficients ? "formula" : "oracle";
  emit(out, doc);
  return kExitOk;
}

int cmd_frobenius(Int m, Int n, std::ostream& out) {
  Json doc = envelope("frobenius", Json{{"m", m}, {"n", n}});
  const ClassicSummary summary = classic_summary(DenominationPair(m, n));
  doc["result"] = Json{{"h", summary.h}, {"g", summary.g}};
  doc["method"] = "formula";
  emit(out, doc);
  return kExitOk;
}

int cmd_represent(const InstanceFlags& f, Int s, std::ostream& out) {
  Json input = f.echo();
  input["s"] = s;
  Json doc = envelope("represent", std::move(input));
  const BoundedInstance inst = make_instance(f.m, f.n, f.max_a, f.max_b);

  Json result;
  if (const auto rep = find_representation(inst, s)) {
    result = Json{{"representable", true}, {"a", rep->a}, {"b", rep->b}};
  } else {
    result = Json{{"representable", false}};
  }
  doc["result"] = std::move(result);
  doc["case"] = to_string(classify(inst));
  doc["method"] = "formula";
  emit(out, doc);
  return kExitOk;
}

int cmd_verify(const VerifyConfig& config, std::ostream& out) {
  Json doc = envelope("verify", Json{{"m_max", config.m_max},
                                     {"bound_factor", config.bound_factor},
                                     {"capacity", config.capacity},
                                     {"gap_stride", config.gap_stride}});
  const VerifySummary summary = run_verify(config);

  Json first = nullptr;
  if (summary.first_mismatch) {
    const Mismatch& mm = *summary.first_mismatch;
    first = Json{{"m", mm.m},         {"n", mm.n},           {"A", mm.max_a},
                 {"B", mm.max_b},     {"what", mm.what},     {"formula", mm.formula},
                 {"oracle", mm.oracle}};
  }
  doc["result"] = Json{{"pairs", summary.pairs},
                       {"checked", summary.checked},
                       {"gap_checked", summary.gap_checked},
                       {"skipped", summary.skipped},
                       {"mismatches", summary.mismatches},
                       {"first_mismatch", std::move(first)}};
  doc["method"] = "both";
  emit(out, doc);
  return summary.mismatches == 0 ? kExitOk : kExitMismatch;
}

struct PairWork {
  Int m;
  Int n;
};

VerifySummary verify_pair(const PairWork& pair, const VerifyConfig& config) {
  VerifySummary s;
  s.pairs = 1;
  const OracleOptions options{.capacity = config.capacity};
  const Int a_end = checked_mul(config.bound_factor, pair.n);
  const Int b_end = checked_mul(config.bound_factor, pair.m);
  Int index = 0;

  auto record = [&](Int a, Int b, const char* what, Int formula, Int oracle) {
    ++s.mismatches;
    if (!s.first_mismatch) s.first_mismatch = Mismatch{pair.m, pair.n, a, b, what, formula, oracle};
  };

  for (Int a = 0; a <= a_end; ++a) {
    for (Int b = 0; b <= b_end; ++b, ++index) {
      const BoundedInstance inst = make_instance(pair.m, pair.n, a, b);
      try {
        const ReachableSet reach = reachable_set(GeneralInstance(inst), options);
        const Int formula = count_representable(inst);
        const Int oracle = reach.count();
        ++s.checked;
        if (formula != oracle) record(a, b, "count", formula, oracle);

        if (index % config.gap_stride == 0) {
          const std::vector<Int> expected = reach.gaps();
          const std::vector<Int> got = bounded_gaps(inst, options).gaps;
          ++s.gap_checked;
          if (got != expected) {
            record(a, b, "gaps", static_cast<Int>(got.size()),
                   static_cast<Int>(expected.size()));
          }
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::CapacityExceeded) throw;
        ++s.skipped;
      }
    }
  }
  return s;
}

void merge_into(VerifySummary& total, const VerifySummary& part) {
  total.pairs += part.pairs;
  total.checked += part.checked;
  total.gap_checked += part.gap_checked;
  total.skipped += part.skipped;
  total.mismatches += part.mismatches;
  if (!total.first_mismatch && part.first_mismatch) total.first_mismatch = part.first_mismatch;
}

}  // namespace

VerifySummary run_verify(const VerifyConfig& config) {
  std::vector<PairWork> pairs;
  for (Int m = 2; m <= config.m_max; ++m) {
    for (Int n = m + 1; n <= config.m_max; ++n) {
      if (gcd(m, n) == 1) pairs.push_back({m, n});
    }
  }

  std::vector<VerifySummary> results(pairs.size());
  const unsigned workers =
      std::max(1U, std::min<unsigned>(config.jobs, static_cast<unsigned>(pairs.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < pairs.size(); ++i) results[i] = verify_pair(pairs[i], config);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> failures(workers);
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          for (std::size_t i; (i = next.fetch_add(1)) < pairs.size();) {
            results[i] = verify_pair(pairs[i], config);
          }
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
    threads.clear();
    for (const auto& f : failures) {
      if (f) std::rethrow_exception(f);
    }
  }

  VerifySummary total;
  for (const VerifySummary& part : results) merge_into(total, part);
  return total;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::optional<std::string> capacity_env) {
  CLI::App app{"Exact counts, gaps and witnesses for the bounded two-coin Frobenius problem",
               "coinbound"};
  app.require_subcommand(1);

  InstanceFlags count_flags;
  std::string method = "formula";
  std::optional<Int> count_capacity;
  auto* count = app.add_subcommand("count", "number of representable values in 0..A*m+B*n");
  add_instance_flags(count, count_flags);
  count->add_option("--method", method, "formula, oracle or both")
      ->check(CLI::IsMember({"formula", "oracle", "both"}));
  count->add_option("--capacity", count_capacity, "oracle capacity");

  InstanceFlags gaps_flags;
  std::string format = "json";
  std::optional<Int> gaps_capacity;
  auto* gaps = app.add_subcommand("gaps", "unrepresentable values in 0..A*m+B*n");
  add_instance_flags(gaps, gaps_flags);
  gaps->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  gaps->add_option("--capacity", gaps_capacity, "oracle capacity");

  Int frob_m = 0, frob_n = 0;
  auto* frobenius = app.add_subcommand("frobenius", "classic gap count h and Frobenius number g");
  frobenius->add_option("--m", frob_m, "first coin value")->required();
  frobenius->add_option("--n", frob_n, "second coin value")->required();

  InstanceFlags rep_flags;
  Int rep_s = 0;
  auto* represent = app.add_subcommand("represent", "boxed witness a*m + b*n = s");
  add_instance_flags(represent, rep_flags);
  represent->add_option("--s", rep_s, "target value")->required();

  VerifyConfig verify_config;
  std::optional<Int> verify_capacity;
  auto* verify = app.add_subcommand("verify", "sweep closed form against the oracle");
  verify->add_option("--m-max", verify_config.m_max, "largest coin value")->required();
  verify->add_option("--bound-factor", verify_config.bound_factor, "A up to f*n, B up to f*m");
  verify->add_option("--capacity", verify_capacity, "oracle capacity");
  verify->add_option("--gap-stride", verify_config.gap_stride,
                     "compare gap lists on every k-th instance of each pair");
  verify->add_option("--jobs", verify_config.jobs, "worker threads");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  // Echo for the error envelope when a domain error escapes a command.
  std::string command;
  Json echo;
  try {
    if (count->parsed()) {
      command = "count";
      echo = count_flags.echo();
      return cmd_count(count_flags, method, resolve_capacity(count_capacity, capacity_env), out);
    }
    if (gaps->parsed()) {
      command = "gaps";
      echo = gaps_flags.echo();
      return cmd_gaps(gaps_flags, format, resolve_capacity(gaps_capacity, capacity_env), out);
    }
    if (frobenius->parsed()) {
      command = "frobenius";
      echo = Json{{"m", frob_m}, {"n", frob_n}};
      return cmd_frobenius(frob_m, frob_n, out);
    }
    if (represent->parsed()) {
      command = "represent";
      echo = rep_flags.echo();
      echo["s"] = rep_s;
      return cmd_represent(rep_flags, rep_s, out);
    }
    if (verify->parsed()) {
      command = "verify";
      if (verify_config.m_max < 2) throw UsageError("--m-max must be at least 2");
      if (verify_config.bound_factor < 0) throw UsageError("--bound-factor must be >= 0");
      if (verify_config.gap_stride < 1) throw UsageError("--gap-stride must be >= 1");
      if (verify_config.jobs < 1) throw UsageError("--jobs must be >= 1");
      verify_config.capacity = resolve_capacity(verify_capacity, capacity_env);
      return cmd_verify(verify_config, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    Json doc = envelope(command, std::move(echo));
    doc["error"] = Json{{"kind", to_string(e.kind())}, {"message", e.what()}};
    emit(out, doc);
    return kExitDomain;
  }
  err << "error: no command given\n";
  return kExitUsage;
}

}  // namespace coinbound::cli
