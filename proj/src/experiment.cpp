#include "nnrep/experiment.hpp"

#include <json.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "nnrep/constructions.hpp"
#include "nnrep/errors.hpp"
#include "nnrep/minimize.hpp"
#include "nnrep/prng.hpp"
#include "nnrep/ptf.hpp"
#include "nnrep/serialization.hpp"

namespace nnrep {

namespace {

using ordered_json = nlohmann::ordered_json;

// Full truth-table enumeration replaces sampling when the sample budget
// covers every function of the arity.
bool exhaustive(int n, std::uint64_t samples) {
  const unsigned table_bits = 1u << n;
  return table_bits < 64 && samples >= (std::uint64_t{1} << table_bits);
}

boolean_function function_from_integer(int n, std::uint64_t table) {
  boolean_function f(n);
  for (std::uint32_t a = 0; a < f.domain_size(); ++a) {
    f.set_value(a, (table >> a) & 1u);
  }
  return f;
}

std::string join_rows(const std::string& header, const std::vector<std::string>& rows) {
  std::string csv = header;
  for (const std::string& row : rows) {
    csv += '\n';
    csv += row;
  }
  return csv;
}

ordered_json config_json(const experiment_config& config) {
  ordered_json j;
  j["kind"] = experiment_kind_name(config.what);
  j["arity"] = config.arity;
  j["samples"] = config.samples;
  j["seed"] = config.seed;
  return j;
}

experiment_output run_random_bnn(const experiment_config& config) {
  const int n = config.arity;
  if (n < 1 || n > 4) {
    throw arity_out_of_range("random-bnn needs arity between 1 and 4, got " + std::to_string(n));
  }
  counter_rng rng(config.seed);
  const bool full = exhaustive(n, config.samples);
  const std::uint64_t count = full ? (std::uint64_t{1} << (1u << n)) : config.samples;

  std::vector<std::string> rows;
  ordered_json json_rows = ordered_json::array();
  for (std::uint64_t i = 0; i < count; ++i) {
    const boolean_function f =
        full ? function_from_integer(n, i) : random_function(n, rng);
    const search_result res = exact_bnn(f);
    const std::string text = table_spec_text(f);
    rows.push_back(std::to_string(i) + "," + text + "," + std::to_string(*res.optimum) + "," +
                   std::to_string(res.explored));
    ordered_json row;
    row["index"] = i;
    row["function"] = text;
    row["optimum"] = *res.optimum;
    row["explored"] = res.explored;
    json_rows.push_back(std::move(row));
  }
  ordered_json j = config_json(config);
  j["rows"] = std::move(json_rows);
  return experiment_output{join_rows("index,function,optimum,explored", rows), j.dump()};
}

experiment_output run_covering_size(const experiment_config& config) {
  const int n = config.arity;
  if (n < 1 || n > 12) {
    throw arity_out_of_range("covering-size needs arity between 1 and 12, got " +
                             std::to_string(n));
  }
  counter_rng rng(config.seed);
  const bool full = exhaustive(n, config.samples);
  const std::uint64_t count = full ? (std::uint64_t{1} << (1u << n)) : config.samples;
  const ball_covering covering = cover_hypercube(n);
  const std::uint64_t bound =
      std::min<std::uint64_t>(5 * covering.cell_count(), std::uint64_t{1} << n);

  std::vector<std::string> rows;
  ordered_json json_rows = ordered_json::array();
  for (std::uint64_t i = 0; i < count; ++i) {
    const boolean_function f =
        full ? function_from_integer(n, i) : random_function(n, rng);
    const nn_representation rep = build_covering(f, covering);
    const bool ok = rep.size() <= bound;  // construction already re-verified
    const std::string text = table_spec_text(f);
    rows.push_back(std::to_string(i) + "," + text + "," + std::to_string(rep.size()) + "," +
                   std::to_string(covering.cell_count()) + "," + std::to_string(bound) + "," +
                   (ok ? "true" : "false"));
    ordered_json row;
    row["index"] = i;
    row["function"] = text;
    row["size"] = rep.size();
    row["cells"] = covering.cell_count();
    row["bound"] = bound;
    row["ok"] = ok;
    json_rows.push_back(std::move(row));
  }
  ordered_json j = config_json(config);
  j["rows"] = std::move(json_rows);
  return experiment_output{join_rows("index,function,size,cells,bound,ok", rows), j.dump()};
}

std::string symmetric_text(int n, const std::vector<int>& levels) {
  std::string text = "sym:" + std::to_string(n);
  if (!levels.empty()) {
    text += ':';
    for (std::size_t i = 0; i < levels.size(); ++i) {
      text += (i ? "," : "") + std::to_string(levels[i]);
    }
  }
  return text;
}

std::string threshold_text(const threshold_spec& spec) {
  std::string text = "th:" + std::to_string(spec.arity()) + ":" + spec.threshold.str() + ":";
  for (int i = 0; i < spec.arity(); ++i) {
    text += (i ? "," : "") + spec.weights[static_cast<std::size_t>(i)].str();
  }
  return text;
}

experiment_output run_compile_sweep(const experiment_config& config) {
  const int max_n = config.arity;
  if (max_n < 1 || max_n > 6) {
    throw arity_out_of_range("compile-sweep needs arity between 1 and 6, got " +
                             std::to_string(max_n));
  }
  counter_rng rng(config.seed);
  std::vector<std::string> rows;
  ordered_json json_rows = ordered_json::array();

  const auto emit = [&](int n, const std::string& method, const std::string& text,
                        const boolean_function& f, const nn_representation& rep) {
    const compiled_ptf compiled = compile_ptf(f, rep);
    const bool ok = verify_ptf(f, compiled.poly).ok && check_margin(f, compiled.poly) &&
                    compiled.poly.terms.size() == rep.size();
    rows.push_back(std::to_string(n) + "," + method + "," + text + "," +
                   std::to_string(rep.size()) + "," +
                   std::to_string(compiled.poly.terms.size()) + "," + (ok ? "true" : "false"));
    ordered_json row;
    row["n"] = n;
    row["method"] = method;
    row["function"] = text;
    row["prototypes"] = rep.size();
    row["terms"] = compiled.poly.terms.size();
    row["ok"] = ok;
    json_rows.push_back(std::move(row));
  };

  for (int n = 1; n <= max_n; ++n) {
    // Every symmetric function of the arity, by ascending level-set mask.
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (n + 1)); ++mask) {
      std::vector<int> levels;
      for (int l = 0; l <= n; ++l) {
        if ((mask >> l) & 1u) {
          levels.push_back(l);
        }
      }
      const symmetric_spec spec = symmetric_spec::make(n, levels);
      emit(n, "symmetric", symmetric_text(n, levels), make_symmetric(spec),
           build_symmetric(spec));
    }
    // Majority as a weighted threshold, then random small-weight thresholds.
    {
      threshold_spec maj;
      maj.weights.assign(static_cast<std::size_t>(n), bigint(1));
      maj.threshold = (n + 1) / 2;
      emit(n, "threshold", threshold_text(maj), make_threshold(maj), build_threshold(maj));
    }
    for (std::uint64_t i = 0; i < config.samples; ++i) {
      threshold_spec spec;
      spec.weights.reserve(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) {
        spec.weights.push_back(bigint(static_cast<std::int64_t>(rng.below(7)) - 3));
      }
      spec.threshold = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(6 * n + 2))) -
                       3 * static_cast<std::int64_t>(n);
      emit(n, "threshold", threshold_text(spec), make_threshold(spec), build_threshold(spec));
    }
    emit(n, "majority-bnn", "maj:" + std::to_string(n), make_majority(n), build_majority_bnn(n));
    emit(n, "parity-bnn", "parity:" + std::to_string(n), make_parity(n), build_parity_bnn(n));
    // Covering construction over random (or all) functions.
    const bool full = exhaustive(n, config.samples);
    const std::uint64_t count = full ? (std::uint64_t{1} << (1u << n)) : config.samples;
    const ball_covering covering = cover_hypercube(n);
    for (std::uint64_t i = 0; i < count; ++i) {
      const boolean_function f =
          full ? function_from_integer(n, i) : random_function(n, rng);
      emit(n, "covering", table_spec_text(f), f, build_covering(f, covering));
    }
  }
  ordered_json j = config_json(config);
  j["rows"] = std::move(json_rows);
  return experiment_output{join_rows("n,method,function,prototypes,terms,ok", rows), j.dump()};
}

}  // namespace

experiment_output run_experiment(const experiment_config& config) {
  switch (config.what) {
    case experiment_config::kind::random_bnn:
      return run_random_bnn(config);
    case experiment_config::kind::covering_size:
      return run_covering_size(config);
    case experiment_config::kind::compile_sweep:
      return run_compile_sweep(config);
  }
  throw invalid_argument("unknown experiment kind");
}

experiment_config::kind parse_experiment_kind(const std::string& name) {
  if (name == "random-bnn") {
    return experiment_config::kind::random_bnn;
  }
  if (name == "covering-size") {
    return experiment_config::kind::covering_size;
  }
  if (name == "compile-sweep") {
    return experiment_config::kind::compile_sweep;
  }
  throw invalid_argument("unknown experiment kind: " + name);
}

std::string experiment_kind_name(experiment_config::kind what) {
  switch (what) {
    case experiment_config::kind::random_bnn:
      return "random-bnn";
    case experiment_config::kind::covering_size:
      return "covering-size";
    case experiment_config::kind::compile_sweep:
      return "compile-sweep";
  }
  throw invalid_argument("unknown experiment kind");
}

}  // namespace nnrep
