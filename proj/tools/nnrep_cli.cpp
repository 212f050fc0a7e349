// Command-line front end over the C API in nnrep.h.
//
// Exit codes: 0 success; 1 a check failed (verification mismatch or tie,
// construction or compilation failure, tree mismatch); 2 usage or input
// problems (bad specs, malformed files, out-of-range arguments); 3 resource
// cutoffs (search stopped by its size or time budget) and internal failures.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "nnrep.h"

namespace {

struct failure {
  int code;
  std::string message;
};

int exit_for(nnrep_status status) {
  switch (status) {
    case NNREP_OK:
      return 0;
    case NNREP_ERR_CONSTRUCTION:
    case NNREP_ERR_COMPILE:
      return 1;
    case NNREP_ERR_PARSE:
    case NNREP_ERR_DIMENSION:
    case NNREP_ERR_ARITY:
    case NNREP_ERR_EMPTY:
    case NNREP_ERR_K_TOO_LARGE:
    case NNREP_ERR_INVALID_REPRESENTATION:
    case NNREP_ERR_INVALID_ARGUMENT:
      return 2;
    case NNREP_ERR_NOMEM:
    case NNREP_ERR_INTERNAL:
      return 3;
  }
  return 3;
}

void check(nnrep_status status) {
  if (status != NNREP_OK) {
    throw failure{exit_for(status), nnrep_last_error()};
  }
}

std::string take_string(char* text) {
  std::string out = text == nullptr ? "" : text;
  nnrep_string_free(text);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw failure{2, "cannot open " + path};
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw failure{2, "cannot open " + path + " for writing"};
  }
  out << content << '\n';
  out.flush();
  if (!out) {
    throw failure{3, "failed while writing " + path};
  }
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content << '\n';
  } else {
    write_file(out_path, content);
  }
}

using function_handle = std::unique_ptr<nnrep_function, decltype(&nnrep_function_free)>;
using representation_handle =
    std::unique_ptr<nnrep_representation, decltype(&nnrep_representation_free)>;
using polynomial_handle = std::unique_ptr<nnrep_polynomial, decltype(&nnrep_polynomial_free)>;
using ldt_handle = std::unique_ptr<nnrep_ldt, decltype(&nnrep_ldt_free)>;

function_handle parse_function(const std::string& spec) {
  nnrep_function* f = nullptr;
  check(nnrep_function_parse(spec.c_str(), &f));
  return function_handle(f, &nnrep_function_free);
}

representation_handle load_representation(const std::string& path) {
  nnrep_representation* rep = nullptr;
  check(nnrep_representation_parse(read_file(path).c_str(), &rep));
  return representation_handle(rep, &nnrep_representation_free);
}

const char* label_name(int label) {
  switch (label) {
    case 0:
      return "negative";
    case 1:
      return "positive";
    default:
      return "tie";
  }
}

// ----- subcommand bodies; each returns the process exit code -----

int run_construct(const std::string& spec, const std::string& method,
                  const std::string& out_path) {
  nnrep_representation* rep = nullptr;
  check(nnrep_construct(spec.c_str(), method.c_str(), &rep));
  const representation_handle guard(rep, &nnrep_representation_free);
  char* json = nullptr;
  check(nnrep_representation_to_json(rep, &json));
  emit(take_string(json), out_path);
  return 0;
}

int run_verify(const std::string& spec, const std::string& rep_path, int k, bool as_json) {
  const function_handle f = parse_function(spec);
  const representation_handle rep = load_representation(rep_path);
  int ok = 0;
  char* report = nullptr;
  check(nnrep_verify(f.get(), rep.get(), k, as_json ? 1 : 0, &ok, &report));
  std::cout << take_string(report) << '\n';
  return ok ? 0 : 1;
}

int run_classify(const std::string& rep_path, const std::string& point, int k, bool as_json) {
  const representation_handle rep = load_representation(rep_path);
  int label = 0;
  check(nnrep_classify(rep.get(), point.c_str(), k, &label));
  if (as_json) {
    std::cout << "{\"label\":\"" << label_name(label) << "\"}\n";
  } else {
    std::cout << label_name(label) << '\n';
  }
  return label == 2 ? 1 : 0;
}

int run_minimize(const std::string& spec, const std::string& model, int k, std::uint64_t max_size,
                 std::uint64_t time_limit_ms, const std::string& witness_path, bool as_json) {
  std::int64_t optimum = -1;
  char* summary = nullptr;
  nnrep_representation* witness = nullptr;
  check(nnrep_minimize(spec.c_str(), model.c_str(), k, max_size, time_limit_ms, &optimum,
                       &summary, &witness));
  const representation_handle witness_guard(witness, &nnrep_representation_free);
  const std::string summary_text = take_string(summary);
  if (as_json) {
    std::cout << summary_text << '\n';
  } else if (optimum >= 0) {
    std::cout << "optimum=" << optimum << '\n';
  } else {
    std::cout << "optimum=none (search stopped at its cutoff)\n";
  }
  if (!witness_path.empty() && witness != nullptr) {
    char* json = nullptr;
    check(nnrep_representation_to_json(witness, &json));
    write_file(witness_path, take_string(json));
  }
  return optimum >= 0 ? 0 : 3;
}

int run_compile(const std::string& spec, const std::string& rep_path,
                const std::string& poly_path, const std::string& params_path, bool as_json) {
  const function_handle f = parse_function(spec);
  const representation_handle rep = load_representation(rep_path);
  nnrep_polynomial* poly = nullptr;
  check(nnrep_compile_ptf(f.get(), rep.get(), &poly));
  const polynomial_handle guard(poly, &nnrep_polynomial_free);

  int verified = 0;
  check(nnrep_verify_ptf(f.get(), poly, &verified, nullptr));
  int margin = 0;
  check(nnrep_check_margin(f.get(), poly, &margin));
  char* bound_json = nullptr;
  check(nnrep_term_count_report(spec.c_str(), poly, &bound_json));
  const std::string bound = take_string(bound_json);
  char* params_json = nullptr;
  check(nnrep_polynomial_params_json(poly, &params_json));
  const std::string params = take_string(params_json);
  char* poly_json = nullptr;
  check(nnrep_polynomial_to_json(poly, &poly_json));
  const std::string poly_text = take_string(poly_json);

  if (!poly_path.empty()) {
    write_file(poly_path, poly_text);
  }
  if (!params_path.empty()) {
    write_file(params_path, params);
  }
  if (as_json) {
    std::cout << "{\"terms\":" << nnrep_polynomial_term_count(poly)
              << ",\"verified\":" << (verified ? "true" : "false")
              << ",\"margin\":" << (margin ? "true" : "false") << ",\"params\":" << params
              << ",\"bound\":" << bound << ",\"poly\":" << poly_text << "}\n";
  } else {
    std::cout << "terms=" << nnrep_polynomial_term_count(poly) << '\n'
              << "verified=" << (verified ? "true" : "false") << '\n'
              << "margin=" << (margin ? "true" : "false") << '\n'
              << "params=" << params << '\n'
              << "bound=" << bound << '\n';
    if (poly_path.empty()) {
      std::cout << "poly=" << poly_text << '\n';
    }
  }
  return verified && margin ? 0 : 1;
}

int run_eval(const std::string& poly_path, const std::string& point) {
  nnrep_polynomial* poly = nullptr;
  check(nnrep_polynomial_parse(read_file(poly_path).c_str(), &poly));
  const polynomial_handle guard(poly, &nnrep_polynomial_free);
  int sign = 0;
  check(nnrep_eval_sign(poly, point.c_str(), &sign));
  std::cout << sign << '\n';
  return 0;
}

int run_bisector(const std::string& rep_path, const std::string& out_path) {
  const representation_handle rep = load_representation(rep_path);
  nnrep_ldt* tree = nullptr;
  check(nnrep_bisector_ldt(rep.get(), &tree));
  const ldt_handle guard(tree, &nnrep_ldt_free);
  char* json = nullptr;
  check(nnrep_ldt_to_json(tree, &json));
  emit(take_string(json), out_path);
  return 0;
}

int run_ldt_check(const std::string& spec, const std::string& tree_path, bool as_json) {
  const function_handle f = parse_function(spec);
  nnrep_ldt* tree = nullptr;
  check(nnrep_ldt_parse(read_file(tree_path).c_str(), &tree));
  const ldt_handle guard(tree, &nnrep_ldt_free);
  int equal = 0;
  std::int64_t witness = -1;
  check(nnrep_ldt_check(f.get(), tree, &equal, &witness));
  if (as_json) {
    std::cout << "{\"equal\":" << (equal ? "true" : "false") << ",\"witness\":";
    if (equal) {
      std::cout << "null}\n";
    } else {
      std::cout << witness << "}\n";
    }
  } else if (equal) {
    std::cout << "equal\n";
  } else {
    std::cout << "mismatch at index " << witness << '\n';
  }
  return equal ? 0 : 1;
}

int run_knn_count(const std::string& rep_path, const std::string& point, int k, bool as_json) {
  const representation_handle rep = load_representation(rep_path);
  int label = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t bound = 0;
  check(nnrep_knn_classify_counted(rep.get(), point.c_str(), k, &label, &comparisons, &bound));
  if (as_json) {
    std::cout << "{\"label\":\"" << label_name(label) << "\",\"comparisons\":" << comparisons
              << ",\"bound\":" << bound << "}\n";
  } else {
    std::cout << "label=" << label_name(label) << '\n'
              << "comparisons=" << comparisons << '\n'
              << "bound=" << bound << '\n';
  }
  return label == 2 ? 1 : 0;
}

int run_rect(int n) {
  char* json = nullptr;
  check(nnrep_max_mono_rectangle(n, &json));
  std::cout << take_string(json) << '\n';
  return 0;
}

int run_experiment(const std::string& kind, int arity, std::uint64_t samples, std::uint64_t seed,
                   const std::string& csv_path, const std::string& json_path) {
  char* csv = nullptr;
  char* json = nullptr;
  check(nnrep_experiment_run(kind.c_str(), arity, samples, seed, &csv,
                             json_path.empty() ? nullptr : &json));
  emit(take_string(csv), csv_path);
  if (!json_path.empty()) {
    write_file(json_path, take_string(json));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nearest-neighbor representations of Boolean functions: construct, verify, "
               "minimize, and compile"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("nnrep ") + nnrep_version());
  bool verbose = false;
  app.add_flag("--verbose", verbose, "print elapsed wall time to stderr");

  std::string spec;
  std::string method = "covering";
  std::string rep_path;
  std::string tree_path;
  std::string poly_path;
  std::string params_path;
  std::string witness_path;
  std::string out_path;
  std::string point;
  std::string model = "bnn";
  std::string kind;
  std::string csv_path;
  std::string json_path;
  int k = 1;
  int n = 2;
  int arity = 2;
  std::uint64_t max_size = 0;
  std::uint64_t time_limit = 0;
  std::uint64_t samples = 10;
  std::uint64_t seed = 1;
  bool as_json = false;

  CLI::App* construct = app.add_subcommand("construct", "build a representation of a function");
  construct->add_option("--function", spec, "function spec")->required();
  construct->add_option("--method", method,
                        "symmetric | threshold | majority-bnn | parity-bnn | covering");
  construct->add_option("--out", out_path, "output file (default: stdout)");

  CLI::App* verify = app.add_subcommand("verify", "check a representation against a function");
  verify->add_option("--function", spec, "function spec")->required();
  verify->add_option("--rep", rep_path, "representation JSON file")->required();
  verify->add_option("--k", k, "number of nearest neighbors (default 1)");
  verify->add_flag("--json", as_json, "JSON report");

  CLI::App* classify = app.add_subcommand("classify", "label one point");
  classify->add_option("--rep", rep_path, "representation JSON file")->required();
  classify->add_option("--point", point, "comma-separated bits, x1 first")->required();
  classify->add_option("--k", k, "number of nearest neighbors (default 1)");
  classify->add_flag("--json", as_json, "JSON output");

  CLI::App* minimize = app.add_subcommand("minimize", "exact smallest representation");
  minimize->add_option("--function", spec, "function spec")->required();
  minimize->add_option("--model", model, "bnn | knn | grid (default bnn)");
  minimize->add_option("--k", k, "vote size for model knn");
  minimize->add_option("--max-size", max_size, "size cutoff (0 = none)");
  minimize->add_option("--time-limit", time_limit, "time cutoff in ms (0 = none)");
  minimize->add_option("--witness-out", witness_path, "write the witness JSON here");
  minimize->add_flag("--json", as_json, "JSON summary");

  CLI::App* compile = app.add_subcommand("compile-ptf", "compile a representation to a polynomial");
  compile->add_option("--function", spec, "function spec")->required();
  compile->add_option("--rep", rep_path, "representation JSON file")->required();
  compile->add_option("--poly-out", poly_path, "write the polynomial JSON here");
  compile->add_option("--params-out", params_path, "write the compiler parameters here");
  compile->add_flag("--json", as_json, "JSON output");

  CLI::App* eval = app.add_subcommand("eval-sign", "exact polynomial sign at a point");
  eval->add_option("--poly", poly_path, "polynomial JSON file")->required();
  eval->add_option("--point", point, "comma-separated bits, x1 first")->required();

  CLI::App* bisector = app.add_subcommand("bisector", "depth-1 tree from a one-per-side representation");
  bisector->add_option("--rep", rep_path, "representation JSON file")->required();
  bisector->add_option("--out", out_path, "output file (default: stdout)");

  CLI::App* ldt = app.add_subcommand("ldt-check", "compare a decision tree against a function");
  ldt->add_option("--function", spec, "function spec")->required();
  ldt->add_option("--tree", tree_path, "decision tree JSON file")->required();
  ldt->add_flag("--json", as_json, "JSON output");

  CLI::App* knn_count = app.add_subcommand("knn-count", "classify while counting comparisons");
  knn_count->add_option("--rep", rep_path, "representation JSON file")->required();
  knn_count->add_option("--point", point, "comma-separated bits, x1 first")->required();
  knn_count->add_option("--k", k, "number of nearest neighbors (default 1)");
  knn_count->add_flag("--json", as_json, "JSON output");

  CLI::App* rect = app.add_subcommand("rect", "largest monochromatic inner-product rectangle");
  rect->add_option("--n", n, "half-arity, 1..3")->required();

  CLI::App* experiment = app.add_subcommand("experiment", "deterministic batch runs");
  experiment->add_option("--kind", kind, "random-bnn | covering-size | compile-sweep")
      ->required();
  experiment->add_option("--arity", arity, "function arity")->required();
  experiment->add_option("--samples", samples, "sample count (default 10)");
  experiment->add_option("--seed", seed, "stream seed (default 1)");
  experiment->add_option("--csv-out", csv_path, "CSV output file (default: stdout)");
  experiment->add_option("--json-out", json_path, "JSON output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto started = std::chrono::steady_clock::now();
  int code = 0;
  try {
    if (construct->parsed()) {
      code = run_construct(spec, method, out_path);
    } else if (verify->parsed()) {
      code = run_verify(spec, rep_path, k, as_json);
    } else if (classify->parsed()) {
      code = run_classify(rep_path, point, k, as_json);
    } else if (minimize->parsed()) {
      code = run_minimize(spec, model, k, max_size, time_limit, witness_path, as_json);
    } else if (compile->parsed()) {
      code = run_compile(spec, rep_path, poly_path, params_path, as_json);
    } else if (eval->parsed()) {
      code = run_eval(poly_path, point);
    } else if (bisector->parsed()) {
      code = run_bisector(rep_path, out_path);
    } else if (ldt->parsed()) {
      code = run_ldt_check(spec, tree_path, as_json);
    } else if (knn_count->parsed()) {
      code = run_knn_count(rep_path, point, k, as_json);
    } else if (rect->parsed()) {
      code = run_rect(n);
    } else if (experiment->parsed()) {
      code = run_experiment(kind, arity, samples, seed, csv_path, json_path);
    }
  } catch (const failure& f) {
    std::cerr << "error: " << f.message << '\n';
    code = f.code;
  }
  if (verbose) {
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    std::cerr << "elapsed_ms=" << elapsed.count() << '\n';
  }
  return code;
}
