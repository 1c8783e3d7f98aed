#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gaprec/json_io.hpp"
#include "gaprec/rational.hpp"
#include "gaprec/recurrence.hpp"
#include "gaprec/semigroup.hpp"
#include "gaprec/series.hpp"
#include "gaprec/version.hpp"
#include "gaprec/walk.hpp"
#include "gaprec/witness.hpp"

namespace {

using gaprec::OrderedJson;
using gaprec::Rational;
using gaprec::WeightVector;

// Exit codes: 0 success, 1 invalid input, 2 verification failure, 3 witness
// search failure.
constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitNotFound = 3;

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> parts;
  if (csv.empty()) return parts;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = csv.find(',', start);
    if (comma == std::string::npos) {
      parts.push_back(csv.substr(start));
      return parts;
    }
    parts.push_back(csv.substr(start, comma - start));
    start = comma + 1;
  }
}

std::vector<std::int64_t> parse_int_list(const std::string& csv) {
  std::vector<std::int64_t> values;
  for (const std::string& tok : split_csv(csv)) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw gaprec::Error("'" + tok + "' is not an integer");
    }
    values.push_back(v);
  }
  return values;
}

std::vector<Rational> parse_rational_list(const std::string& csv) {
  std::vector<Rational> values;
  for (const std::string& tok : split_csv(csv)) values.push_back(gaprec::parse_rational(tok));
  return values;
}

std::string join_ints(const std::vector<std::int64_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out;
}

// Fixed 12-significant-digit rendering for Monte Carlo estimates, the one
// place a non-rational number appears in output.
std::string format_estimate(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

unsigned workers_from_env() {
  const char* env = std::getenv("GAPREC_THREADS");
  if (!env) return 0;
  char* end = nullptr;
  unsigned long n = std::strtoul(env, &end, 10);
  if (end == env || *end != '\0') return 0;
  return static_cast<unsigned>(n);
}

void render_table(const OrderedJson& node, const std::string& prefix) {
  for (const auto& [key, value] : node.items()) {
    if (value.is_object()) {
      render_table(value, prefix.empty() ? key : prefix + "." + key);
    } else if (value.is_array() && !value.empty() && value[0].is_object()) {
      // columnar block, e.g. per-state simulation rows
      std::vector<std::string> heads;
      for (const auto& [h, unused] : value[0].items()) heads.push_back(h);
      std::vector<std::size_t> width;
      for (const auto& h : heads) width.push_back(h.size());
      std::vector<std::vector<std::string>> rows;
      for (const auto& row : value) {
        std::vector<std::string> cells;
        for (std::size_t c = 0; c < heads.size(); ++c) {
          const auto& cell = row[heads[c]];
          cells.push_back(cell.is_string() ? cell.get<std::string>() : cell.dump());
          width[c] = std::max(width[c], cells.back().size());
        }
        rows.push_back(std::move(cells));
      }
      std::printf("%s:\n", (prefix.empty() ? key : prefix + "." + key).c_str());
      std::printf("  ");
      for (std::size_t c = 0; c < heads.size(); ++c)
        std::printf("%-*s ", static_cast<int>(width[c]), heads[c].c_str());
      std::printf("\n");
      for (const auto& cells : rows) {
        std::printf("  ");
        for (std::size_t c = 0; c < cells.size(); ++c)
          std::printf("%-*s ", static_cast<int>(width[c]), cells[c].c_str());
        std::printf("\n");
      }
    } else {
      std::string text;
      if (value.is_array()) {
        for (const auto& item : value) {
          if (!text.empty()) text += " ";
          text += item.is_string() ? item.get<std::string>() : item.dump();
        }
      } else {
        text = value.is_string() ? value.get<std::string>() : value.dump();
      }
      std::printf("%s: %s\n", (prefix.empty() ? key : prefix + "." + key).c_str(), text.c_str());
    }
  }
}

void emit(const OrderedJson& doc, const std::string& format) {
  if (format == "table") {
    render_table(doc, "");
  } else {
    std::cout << doc.dump() << "\n";
  }
  std::cout.flush();
}

OrderedJson make_doc(const std::string& command, OrderedJson inputs, OrderedJson result) {
  OrderedJson doc;
  doc["command"] = command;
  doc["inputs"] = std::move(inputs);
  doc["result"] = std::move(result);
  doc["metadata"] = OrderedJson{{"version", GAPREC_VERSION}};
  return doc;
}

// Shared flags for the subcommands that start from a generator list.
struct SemigroupArgs {
  std::string generators;
  std::string weights;
  std::int64_t degree = -1;  // -1: use the default window
  bool reduce = false;
  std::string format = "json";

  void attach(CLI::App* cmd, bool with_weights, bool with_degree) {
    cmd->add_option("--gen", generators, "comma-separated positive generators")->required();
    if (with_weights)
      cmd->add_option("--weights", weights,
                      "comma-separated positive rationals (p or p/q), aligned with the sorted "
                      "generator list; default all ones");
    if (with_degree)
      cmd->add_option("--deg", degree, "truncation degree (default: frobenius + 2*max generator)")
          ->check(CLI::NonNegativeNumber);
    cmd->add_flag("--reduce", reduce, "divide the generators by their gcd first");
    cmd->add_option("--format", format, "output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));
  }

  // Parses and validates, mapping a gcd failure to the canonical hint.
  gaprec::NumericalSemigroup semigroup(std::vector<std::int64_t>& raw_out) const {
    std::vector<std::int64_t> raw = parse_int_list(generators);
    if (reduce) raw = gaprec::reduce_gcd(raw);
    raw_out = raw;
    try {
      return gaprec::new_semigroup(raw);
    } catch (const gaprec::GcdNotOne& e) {
      throw gaprec::Error("gcd(" + join_ints(raw) + ")=" + std::to_string(e.gcd) +
                          "; try --reduce");
    }
  }

  WeightVector weight_vector(std::size_t n) const {
    if (weights.empty()) return WeightVector::ones(n);
    return WeightVector(parse_rational_list(weights));
  }

  std::int64_t window(const gaprec::NumericalSemigroup& s) const {
    return degree >= 0 ? degree : gaprec::default_truncation(s);
  }
};

int run_gaps(const SemigroupArgs& args) {
  std::vector<std::int64_t> raw;
  gaprec::NumericalSemigroup s = args.semigroup(raw);
  OrderedJson result;
  result["generators"] = s.generators().elements();
  result["gaps"] = s.gaps().values;
  if (auto fr = s.frobenius()) {
    result["frobenius"] = *fr;
  } else {
    result["frobenius"] = nullptr;
  }
  emit(make_doc("gaps", {{"generators", raw}, {"reduce", args.reduce}}, result), args.format);
  return kExitOk;
}

int run_reduce(const std::string& generators, const std::string& format) {
  std::vector<std::int64_t> raw = parse_int_list(generators);
  std::vector<std::int64_t> reduced = gaprec::reduce_gcd(raw);
  std::int64_t g = raw.empty() ? 0 : raw[0] / reduced[0];
  emit(make_doc("reduce", {{"generators", raw}},
                {{"generators", reduced}, {"gcd", g}}),
       format);
  return kExitOk;
}

int run_recurrence(const SemigroupArgs& args) {
  std::vector<std::int64_t> raw;
  gaprec::NumericalSemigroup s = args.semigroup(raw);
  WeightVector w = args.weight_vector(s.generators().count());
  const std::int64_t degree = args.window(s);
  gaprec::RecurrenceSpec rec = gaprec::build_recurrence(s, w);
  gaprec::SequenceWindow window = gaprec::run_recurrence(s, w, degree);

  OrderedJson inputs{{"generators", s.generators().elements()},
                     {"weights", gaprec::rationals_to_strings(w.values())},
                     {"degree", degree}};
  OrderedJson result;
  result["order"] = rec.order;
  result["alpha"] = gaprec::rationals_to_strings(rec.alphas);
  result["sequence"] = gaprec::rationals_to_strings(window.values);
  result["zeros"] = gaprec::zero_set(window);
  emit(make_doc("recurrence", inputs, result), args.format);
  return kExitOk;
}

int run_series(const SemigroupArgs& args, std::int64_t t, bool telescoped) {
  std::vector<std::int64_t> raw;
  gaprec::NumericalSemigroup s = args.semigroup(raw);
  WeightVector w = args.weight_vector(s.generators().count());
  const std::int64_t degree = args.window(s);

  OrderedJson inputs{{"generators", s.generators().elements()},
                     {"weights", gaprec::rationals_to_strings(w.values())},
                     {"degree", degree}};
  OrderedJson result;
  if (t >= 0) {
    gaprec::PowerSeries ps = gaprec::step_power(s, w, t, degree);
    inputs["t"] = t;
    result["coefficients"] = gaprec::rationals_to_strings(ps.coefficients);
    std::vector<std::int64_t> support;
    for (std::size_t k = 0; k < ps.coefficients.size(); ++k) {
      if (ps.coefficients[k] != 0) support.push_back(static_cast<std::int64_t>(k));
    }
    result["support"] = support;
  } else if (telescoped) {
    gaprec::PowerSeries ps = gaprec::step_power_sum(s, w, degree);
    result["coefficients"] = gaprec::rationals_to_strings(ps.coefficients);
  } else {
    gaprec::PowerSeries ps = gaprec::generating_series(s, w, degree);
    result["coefficients"] = gaprec::rationals_to_strings(ps.coefficients);
  }
  emit(make_doc("series", inputs, result), args.format);
  return kExitOk;
}

int run_verify(const SemigroupArgs& args) {
  std::vector<std::int64_t> raw;
  gaprec::NumericalSemigroup s = args.semigroup(raw);
  WeightVector w = args.weight_vector(s.generators().count());
  const std::int64_t degree = args.window(s);

  gaprec::VanishingReport report = gaprec::verify_vanishing(s, w, degree);
  gaprec::PowerSeries series = gaprec::generating_series(s, w, degree);
  const bool series_ok = series.coefficients == report.window.values;

  OrderedJson inputs{{"generators", s.generators().elements()},
                     {"weights", gaprec::rationals_to_strings(w.values())},
                     {"degree", degree}};
  OrderedJson result;
  result["order"] = s.generators().largest();
  result["sequence"] = gaprec::rationals_to_strings(report.window.values);
  result["zeros"] = report.zeros;
  result["gaps"] = report.gaps_in_range;
  result["series_matches_recurrence"] = series_ok;
  result["zeros_match_gaps"] = report.matches;
  emit(make_doc("verify", inputs, result), args.format);
  return (series_ok && report.matches) ? kExitOk : kExitVerifyFailed;
}

int run_simulate(const SemigroupArgs& args, std::int64_t walks, std::int64_t max_state,
                 std::uint64_t seed) {
  std::vector<std::int64_t> raw;
  gaprec::NumericalSemigroup s = args.semigroup(raw);
  WeightVector w = args.weight_vector(s.generators().count());
  WeightVector probabilities = gaprec::normalize_weights(w);

  gaprec::SequenceWindow exact = gaprec::exact_visit_probabilities(s, probabilities, max_state);
  gaprec::WalkConfig config{s, probabilities, walks, max_state, seed};
  gaprec::VisitEstimate estimate = gaprec::simulate(config, workers_from_env());

  OrderedJson inputs{{"generators", s.generators().elements()},
                     {"weights", gaprec::rationals_to_strings(w.values())},
                     {"probabilities", gaprec::rationals_to_strings(probabilities.values())},
                     {"num_walks", walks},
                     {"max_state", max_state},
                     {"seed", seed}};
  OrderedJson states = OrderedJson::array();
  for (std::size_t k = 0; k < estimate.hit_counts.size(); ++k) {
    states.push_back(OrderedJson{{"state", k},
                                 {"hits", estimate.hit_counts[k]},
                                 {"estimate", format_estimate(estimate.estimate(k))},
                                 {"standard_error", format_estimate(estimate.standard_error(k))},
                                 {"exact", gaprec::to_string(exact.values[k])}});
  }
  OrderedJson doc = make_doc("simulate", inputs, {{"states", states}});
  doc["metadata"]["rng"] = gaprec::kRngFamily;
  doc["metadata"]["seed"] = seed;
  emit(doc, args.format);
  return kExitOk;
}

int run_witness(std::int64_t order, const std::string& set_csv, const std::string& format) {
  gaprec::PairQuery query = gaprec::make_query(order, parse_int_list(set_csv));
  gaprec::WitnessSearchResult search = gaprec::find_witness(query);

  OrderedJson inputs{{"order", query.order}, {"target_set", query.target_set}};
  if (search.found()) {
    OrderedJson result{{"found", true},
                       {"certificate", gaprec::certificate_to_json(*search.certificate)}};
    emit(make_doc("witness", inputs, result), format);
    return kExitOk;
  }
  OrderedJson result{{"found", false}, {"reason", search.failure_reason}};
  emit(make_doc("witness", inputs, result), format);
  return kExitNotFound;
}

int run_certify(const std::string& path, const std::string& format) {
  std::string text;
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream in(path);
    if (!in) throw gaprec::Error("cannot open certificate file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw gaprec::Error(std::string("certificate is not valid JSON: ") + e.what());
  }
  gaprec::WitnessCertificate cert = gaprec::certificate_from_json(doc);
  gaprec::CertifyResult outcome = gaprec::certify(cert);

  OrderedJson result{{"certified", outcome.ok}, {"failures", outcome.failures}};
  emit(make_doc("certify", {{"source", path}}, result), format);
  return outcome.ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical semigroup gap sets, their vanishing linear recurrences, and the "
               "associated random walks (exact rational arithmetic)"};
  app.set_version_flag("--version", GAPREC_VERSION);
  app.require_subcommand(1);

  std::function<int()> selected;

  auto gaps_args = std::make_shared<SemigroupArgs>();
  auto* gaps_cmd = app.add_subcommand("gaps", "gap set and Frobenius number of a semigroup");
  gaps_args->attach(gaps_cmd, false, false);
  gaps_cmd->callback([&selected, gaps_args] { selected = [gaps_args] { return run_gaps(*gaps_args); }; });

  auto reduce_gen = std::make_shared<std::string>();
  auto reduce_fmt = std::make_shared<std::string>("json");
  auto* reduce_cmd = app.add_subcommand("reduce", "divide a generator list by its gcd");
  reduce_cmd->add_option("--gen", *reduce_gen, "comma-separated positive generators")->required();
  reduce_cmd->add_option("--format", *reduce_fmt, "output format: json or table")
      ->check(CLI::IsMember({"json", "table"}));
  reduce_cmd->callback([&selected, reduce_gen, reduce_fmt] {
    selected = [reduce_gen, reduce_fmt] { return run_reduce(*reduce_gen, *reduce_fmt); };
  });

  auto rec_args = std::make_shared<SemigroupArgs>();
  auto* rec_cmd = app.add_subcommand(
      "recurrence", "recurrence coefficients and exact solution window for a semigroup");
  rec_args->attach(rec_cmd, true, true);
  rec_cmd->callback([&selected, rec_args] { selected = [rec_args] { return run_recurrence(*rec_args); }; });

  auto ser_args = std::make_shared<SemigroupArgs>();
  auto ser_t = std::make_shared<std::int64_t>(-1);
  auto ser_tel = std::make_shared<bool>(false);
  auto* ser_cmd = app.add_subcommand(
      "series", "power-series coefficients of the generating function 1/(1 - sum w_i z^a_i)");
  ser_args->attach(ser_cmd, true, true);
  ser_cmd->add_option("--t", *ser_t, "emit the t-th power of the step polynomial instead")
      ->check(CLI::NonNegativeNumber);
  ser_cmd->add_flag("--telescoped", *ser_tel, "emit the sum of step powers instead");
  ser_cmd->callback([&selected, ser_args, ser_t, ser_tel] {
    selected = [ser_args, ser_t, ser_tel] { return run_series(*ser_args, *ser_t, *ser_tel); };
  });

  auto ver_args = std::make_shared<SemigroupArgs>();
  auto* ver_cmd = app.add_subcommand(
      "verify", "check recurrence = series and zero set = gap set (exit 2 on mismatch)");
  ver_args->attach(ver_cmd, true, true);
  ver_cmd->callback([&selected, ver_args] { selected = [ver_args] { return run_verify(*ver_args); }; });

  auto sim_args = std::make_shared<SemigroupArgs>();
  auto sim_walks = std::make_shared<std::int64_t>(0);
  auto sim_max = std::make_shared<std::int64_t>(0);
  auto sim_seed = std::make_shared<std::uint64_t>(0);
  auto* sim_cmd = app.add_subcommand(
      "simulate", "Monte Carlo estimate of the visit probabilities of the semigroup walk");
  sim_args->attach(sim_cmd, true, false);
  sim_cmd->add_option("--walks", *sim_walks, "number of independent walks")
      ->required()
      ->check(CLI::PositiveNumber);
  sim_cmd->add_option("--max", *sim_max, "largest state to tally")
      ->required()
      ->check(CLI::PositiveNumber);
  sim_cmd->add_option("--seed", *sim_seed, "64-bit RNG seed (default 0)");
  sim_cmd->callback([&selected, sim_args, sim_walks, sim_max, sim_seed] {
    selected = [sim_args, sim_walks, sim_max, sim_seed] {
      return run_simulate(*sim_args, *sim_walks, *sim_max, *sim_seed);
    };
  });

  auto wit_order = std::make_shared<std::int64_t>(0);
  auto wit_set = std::make_shared<std::string>();
  auto wit_fmt = std::make_shared<std::string>("json");
  auto* wit_cmd = app.add_subcommand(
      "witness", "search for an order-M recurrence vanishing on a target set (exit 3 if not found)");
  wit_cmd->add_option("--order", *wit_order, "recurrence order M")->required();
  wit_cmd->add_option("--set", *wit_set, "comma-separated target points")->required();
  wit_cmd->add_option("--format", *wit_fmt, "output format: json or table")
      ->check(CLI::IsMember({"json", "table"}));
  wit_cmd->callback([&selected, wit_order, wit_set, wit_fmt] {
    selected = [wit_order, wit_set, wit_fmt] {
      return run_witness(*wit_order, *wit_set, *wit_fmt);
    };
  });

  auto cert_path = std::make_shared<std::string>("-");
  auto cert_fmt = std::make_shared<std::string>("json");
  auto* cert_cmd = app.add_subcommand(
      "certify", "re-verify a witness certificate from a file or stdin (exit 2 on failure)");
  cert_cmd->add_option("--cert", *cert_path, "certificate JSON file, or - for stdin");
  cert_cmd->add_option("--format", *cert_fmt, "output format: json or table")
      ->check(CLI::IsMember({"json", "table"}));
  cert_cmd->callback([&selected, cert_path, cert_fmt] {
    selected = [cert_path, cert_fmt] { return run_certify(*cert_path, *cert_fmt); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    return selected();
  } catch (const gaprec::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalidInput;
  }
}
