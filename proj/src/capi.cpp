#include "nnrep.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <utility>

#include "nnrep/constructions.hpp"
#include "nnrep/errors.hpp"
#include "nnrep/experiment.hpp"
#include "nnrep/ldt.hpp"
#include "nnrep/minimize.hpp"
#include "nnrep/ptf.hpp"
#include "nnrep/serialization.hpp"

struct nnrep_function {
  nnrep::boolean_function f;
};

struct nnrep_representation {
  nnrep::nn_representation rep;
};

struct nnrep_polynomial {
  nnrep::sign_polynomial poly;
  std::optional<nnrep::compiler_params> params;
};

struct nnrep_ldt {
  nnrep::linear_decision_tree tree;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) {
    throw std::bad_alloc();
  }
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

void set_out_string(char** out, const std::string& text) {
  if (out != nullptr) {
    *out = dup_string(text);
  }
}

// Runs the body and maps exceptions onto status codes plus the thread-local
// message.
template <typename Fn>
nnrep_status guarded(Fn&& body) {
  try {
    body();
    g_last_error.clear();
    return NNREP_OK;
  } catch (const nnrep::parse_error& e) {
    g_last_error = e.what();
    return NNREP_ERR_PARSE;
  } catch (const nnrep::dimension_mismatch& e) {
    g_last_error = e.what();
    return NNREP_ERR_DIMENSION;
  } catch (const nnrep::arity_out_of_range& e) {
    g_last_error = e.what();
    return NNREP_ERR_ARITY;
  } catch (const nnrep::empty_representation& e) {
    g_last_error = e.what();
    return NNREP_ERR_EMPTY;
  } catch (const nnrep::k_too_large& e) {
    g_last_error = e.what();
    return NNREP_ERR_K_TOO_LARGE;
  } catch (const nnrep::invalid_representation& e) {
    g_last_error = e.what();
    return NNREP_ERR_INVALID_REPRESENTATION;
  } catch (const nnrep::construction_error& e) {
    g_last_error = e.what();
    return NNREP_ERR_CONSTRUCTION;
  } catch (const nnrep::compile_error& e) {
    g_last_error = e.what();
    return NNREP_ERR_COMPILE;
  } catch (const nnrep::invalid_argument& e) {
    g_last_error = e.what();
    return NNREP_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return NNREP_ERR_NOMEM;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return NNREP_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return NNREP_ERR_INTERNAL;
  }
}

void require(bool condition, const char* message) {
  if (!condition) {
    throw nnrep::invalid_argument(message);
  }
}

nnrep::symmetric_spec symmetric_form(const nnrep::function_spec& spec) {
  std::vector<int> levels;
  switch (spec.kind) {
    case nnrep::function_spec::family::parity:
      for (int l = 1; l <= spec.arity; l += 2) {
        levels.push_back(l);
      }
      break;
    case nnrep::function_spec::family::majority:
      for (int l = (spec.arity + 1) / 2; l <= spec.arity; ++l) {
        levels.push_back(l);
      }
      break;
    case nnrep::function_spec::family::symmetric:
      return *spec.symmetric;
    default:
      throw nnrep::invalid_argument(
          "method symmetric applies to parity:, maj:, and sym: functions only");
  }
  return nnrep::symmetric_spec::make(spec.arity, std::move(levels));
}

nnrep::threshold_spec threshold_form(const nnrep::function_spec& spec) {
  switch (spec.kind) {
    case nnrep::function_spec::family::threshold:
      return *spec.threshold;
    case nnrep::function_spec::family::majority: {
      nnrep::threshold_spec out;
      out.weights.assign(static_cast<std::size_t>(spec.arity), nnrep::bigint(1));
      out.threshold = (spec.arity + 1) / 2;
      return out;
    }
    default:
      throw nnrep::invalid_argument("method threshold applies to th: and maj: functions only");
  }
}

}  // namespace

extern "C" {

const char* nnrep_version(void) { return "1.0.0"; }

const char* nnrep_last_error(void) { return g_last_error.c_str(); }

void nnrep_string_free(char* text) { std::free(text); }

nnrep_status nnrep_function_parse(const char* spec, nnrep_function** out) {
  return guarded([&] {
    require(spec != nullptr && out != nullptr, "spec and out must not be NULL");
    *out = new nnrep_function{nnrep::parse_function(spec)};
  });
}

void nnrep_function_free(nnrep_function* f) { delete f; }

int nnrep_function_arity(const nnrep_function* f) { return f == nullptr ? -1 : f->f.arity(); }

int nnrep_function_value(const nnrep_function* f, uint32_t assignment) {
  if (f == nullptr || assignment >= f->f.domain_size()) {
    return -1;
  }
  return f->f.value(assignment) ? 1 : 0;
}

nnrep_status nnrep_function_table_text(const nnrep_function* f, char** out) {
  return guarded([&] {
    require(f != nullptr && out != nullptr, "function and out must not be NULL");
    *out = dup_string(nnrep::table_spec_text(f->f));
  });
}

nnrep_status nnrep_representation_parse(const char* json, nnrep_representation** out) {
  return guarded([&] {
    require(json != nullptr && out != nullptr, "json and out must not be NULL");
    *out = new nnrep_representation{nnrep::representation_from_json(json)};
  });
}

nnrep_status nnrep_representation_to_json(const nnrep_representation* rep, char** out) {
  return guarded([&] {
    require(rep != nullptr && out != nullptr, "representation and out must not be NULL");
    *out = dup_string(nnrep::representation_to_json(rep->rep));
  });
}

void nnrep_representation_free(nnrep_representation* rep) { delete rep; }

int nnrep_representation_dimension(const nnrep_representation* rep) {
  return rep == nullptr ? -1 : rep->rep.dimension();
}

size_t nnrep_representation_positive_count(const nnrep_representation* rep) {
  return rep == nullptr ? 0 : rep->rep.positives().size();
}

size_t nnrep_representation_negative_count(const nnrep_representation* rep) {
  return rep == nullptr ? 0 : rep->rep.negatives().size();
}

nnrep_status nnrep_construct(const char* spec, const char* method, nnrep_representation** out) {
  return guarded([&] {
    require(spec != nullptr && method != nullptr && out != nullptr,
            "spec, method, and out must not be NULL");
    const nnrep::function_spec parsed = nnrep::parse_function_spec(spec);
    const std::string name = method;
    nnrep::nn_representation rep = [&] {
      if (name == "symmetric") {
        return nnrep::build_symmetric(symmetric_form(parsed));
      }
      if (name == "threshold") {
        return nnrep::build_threshold(threshold_form(parsed));
      }
      if (name == "majority-bnn") {
        if (parsed.kind != nnrep::function_spec::family::majority) {
          throw nnrep::invalid_argument("method majority-bnn applies to maj: functions only");
        }
        return nnrep::build_majority_bnn(parsed.arity);
      }
      if (name == "parity-bnn") {
        if (parsed.kind != nnrep::function_spec::family::parity) {
          throw nnrep::invalid_argument("method parity-bnn applies to parity: functions only");
        }
        return nnrep::build_parity_bnn(parsed.arity);
      }
      if (name == "covering") {
        return nnrep::build_covering(nnrep::realize(parsed));
      }
      throw nnrep::invalid_argument("unknown construction method: " + name);
    }();
    *out = new nnrep_representation{std::move(rep)};
  });
}

nnrep_status nnrep_classify(const nnrep_representation* rep, const char* point, int k,
                            int* label_out) {
  return guarded([&] {
    require(rep != nullptr && point != nullptr && label_out != nullptr,
            "representation, point, and label_out must not be NULL");
    const nnrep::boolean_point x = nnrep::parse_boolean_point(point);
    const std::optional<nnrep::label> result = nnrep::classify_knn(rep->rep, x, k);
    *label_out = !result ? 2 : (*result == nnrep::label::positive ? 1 : 0);
  });
}

nnrep_status nnrep_verify(const nnrep_function* f, const nnrep_representation* rep, int k,
                          int as_json, int* ok_out, char** report_out) {
  return guarded([&] {
    require(f != nullptr && rep != nullptr && ok_out != nullptr,
            "function, representation, and ok_out must not be NULL");
    const nnrep::verification_report report =
        k == 1 ? nnrep::verify_nn(f->f, rep->rep) : nnrep::verify_knn(f->f, rep->rep, k);
    *ok_out = report.ok ? 1 : 0;
    set_out_string(report_out, as_json ? nnrep::report_to_json(report, rep->rep.dimension())
                                       : nnrep::report_to_text(report, rep->rep.dimension()));
  });
}

nnrep_status nnrep_minimize(const char* spec, const char* model, int k, uint64_t max_size,
                            uint64_t time_limit_ms, int64_t* optimum_out, char** summary_out,
                            nnrep_representation** witness_out) {
  return guarded([&] {
    require(spec != nullptr && model != nullptr && optimum_out != nullptr,
            "spec, model, and optimum_out must not be NULL");
    const nnrep::boolean_function f = nnrep::parse_function(spec);
    nnrep::search_limits limits;
    if (max_size > 0) {
      limits.max_size = static_cast<std::size_t>(max_size);
    }
    if (time_limit_ms > 0) {
      limits.time_limit = std::chrono::milliseconds(time_limit_ms);
    }
    const std::string name = model;
    int effective_k = 1;
    nnrep::search_result result = [&] {
      if (name == "bnn") {
        return nnrep::exact_bnn(f, limits);
      }
      if (name == "knn") {
        require(max_size > 0, "model knn needs a size cutoff");
        effective_k = k;
        return nnrep::exact_knn_bnn(f, k, static_cast<std::size_t>(max_size), limits);
      }
      if (name == "grid") {
        require(max_size > 0, "model grid needs a size cutoff");
        return nnrep::grid_nn_upper(f, nnrep::default_grid(f.arity()),
                                    static_cast<std::size_t>(max_size), limits);
      }
      throw nnrep::invalid_argument("unknown minimization model: " + name);
    }();
    *optimum_out = result.optimum ? static_cast<int64_t>(*result.optimum) : -1;
    set_out_string(summary_out,
                   nnrep::minimize_summary_json(spec, name, effective_k, result));
    if (witness_out != nullptr) {
      *witness_out = result.witness
                         ? new nnrep_representation{std::move(*result.witness)}
                         : nullptr;
    }
  });
}

nnrep_status nnrep_compile_ptf(const nnrep_function* f, const nnrep_representation* rep,
                               nnrep_polynomial** out) {
  return guarded([&] {
    require(f != nullptr && rep != nullptr && out != nullptr,
            "function, representation, and out must not be NULL");
    nnrep::compiled_ptf compiled = nnrep::compile_ptf(f->f, rep->rep);
    *out = new nnrep_polynomial{std::move(compiled.poly), std::move(compiled.params)};
  });
}

nnrep_status nnrep_polynomial_parse(const char* json, nnrep_polynomial** out) {
  return guarded([&] {
    require(json != nullptr && out != nullptr, "json and out must not be NULL");
    *out = new nnrep_polynomial{nnrep::polynomial_from_json(json), std::nullopt};
  });
}

nnrep_status nnrep_polynomial_to_json(const nnrep_polynomial* poly, char** out) {
  return guarded([&] {
    require(poly != nullptr && out != nullptr, "polynomial and out must not be NULL");
    *out = dup_string(nnrep::polynomial_to_json(poly->poly));
  });
}

nnrep_status nnrep_polynomial_params_json(const nnrep_polynomial* poly, char** out) {
  return guarded([&] {
    require(poly != nullptr && out != nullptr, "polynomial and out must not be NULL");
    if (!poly->params) {
      throw nnrep::invalid_argument("this polynomial carries no compiler parameters");
    }
    *out = dup_string(nnrep::params_to_json(*poly->params));
  });
}

void nnrep_polynomial_free(nnrep_polynomial* poly) { delete poly; }

size_t nnrep_polynomial_term_count(const nnrep_polynomial* poly) {
  return poly == nullptr ? 0 : poly->poly.terms.size();
}

nnrep_status nnrep_eval_sign(const nnrep_polynomial* poly, const char* point, int* sign_out) {
  return guarded([&] {
    require(poly != nullptr && point != nullptr && sign_out != nullptr,
            "polynomial, point, and sign_out must not be NULL");
    *sign_out = nnrep::eval_sign(poly->poly, nnrep::parse_boolean_point(point));
  });
}

nnrep_status nnrep_verify_ptf(const nnrep_function* f, const nnrep_polynomial* poly, int* ok_out,
                              char** report_out) {
  return guarded([&] {
    require(f != nullptr && poly != nullptr && ok_out != nullptr,
            "function, polynomial, and ok_out must not be NULL");
    const nnrep::ptf_report report = nnrep::verify_ptf(f->f, poly->poly);
    *ok_out = report.ok ? 1 : 0;
    if (report_out != nullptr) {
      std::string json = "[";
      for (std::size_t i = 0; i < report.counterexamples.size(); ++i) {
        json += (i ? "," : "") + std::to_string(report.counterexamples[i]);
      }
      json += "]";
      *report_out = dup_string(json);
    }
  });
}

nnrep_status nnrep_check_margin(const nnrep_function* f, const nnrep_polynomial* poly,
                                int* ok_out) {
  return guarded([&] {
    require(f != nullptr && poly != nullptr && ok_out != nullptr,
            "function, polynomial, and ok_out must not be NULL");
    *ok_out = nnrep::check_margin(f->f, poly->poly) ? 1 : 0;
  });
}

nnrep_status nnrep_term_count_report(const char* spec, const nnrep_polynomial* poly, char** out) {
  return guarded([&] {
    require(spec != nullptr && poly != nullptr && out != nullptr,
            "spec, polynomial, and out must not be NULL");
    const nnrep::function_spec parsed = nnrep::parse_function_spec(spec);
    *out = dup_string(nnrep::term_count_to_json(nnrep::term_count_report(parsed, poly->poly)));
  });
}

nnrep_status nnrep_ldt_parse(const char* json, nnrep_ldt** out) {
  return guarded([&] {
    require(json != nullptr && out != nullptr, "json and out must not be NULL");
    *out = new nnrep_ldt{nnrep::ldt_from_json(json)};
  });
}

nnrep_status nnrep_ldt_to_json(const nnrep_ldt* tree, char** out) {
  return guarded([&] {
    require(tree != nullptr && out != nullptr, "tree and out must not be NULL");
    *out = dup_string(nnrep::ldt_to_json(tree->tree));
  });
}

void nnrep_ldt_free(nnrep_ldt* tree) { delete tree; }

int nnrep_ldt_depth(const nnrep_ldt* tree) {
  if (tree == nullptr) {
    return -1;
  }
  try {
    return nnrep::ldt_depth(tree->tree);
  } catch (...) {
    return -1;
  }
}

nnrep_status nnrep_ldt_eval(const nnrep_ldt* tree, const char* point, int* value_out) {
  return guarded([&] {
    require(tree != nullptr && point != nullptr && value_out != nullptr,
            "tree, point, and value_out must not be NULL");
    *value_out = nnrep::ldt_eval(tree->tree, nnrep::parse_boolean_point(point)) ? 1 : 0;
  });
}

nnrep_status nnrep_ldt_check(const nnrep_function* f, const nnrep_ldt* tree, int* equal_out,
                             int64_t* witness_out) {
  return guarded([&] {
    require(f != nullptr && tree != nullptr && equal_out != nullptr,
            "function, tree, and equal_out must not be NULL");
    const nnrep::ldt_report report = nnrep::ldt_check(f->f, tree->tree);
    *equal_out = report.equal ? 1 : 0;
    if (witness_out != nullptr) {
      *witness_out = report.witness ? static_cast<int64_t>(*report.witness) : -1;
    }
  });
}

nnrep_status nnrep_bisector_ldt(const nnrep_representation* rep, nnrep_ldt** out) {
  return guarded([&] {
    require(rep != nullptr && out != nullptr, "representation and out must not be NULL");
    *out = new nnrep_ldt{nnrep::bisector_tree(rep->rep)};
  });
}

nnrep_status nnrep_knn_classify_counted(const nnrep_representation* rep, const char* point,
                                        int k, int* label_out, uint64_t* comparisons_out,
                                        uint64_t* bound_out) {
  return guarded([&] {
    require(rep != nullptr && point != nullptr && label_out != nullptr &&
                comparisons_out != nullptr,
            "representation, point, label_out, and comparisons_out must not be NULL");
    const nnrep::counted_result counted =
        nnrep::knn_classify_counted(rep->rep, nnrep::parse_boolean_point(point), k);
    *label_out = !counted.result ? 2 : (*counted.result == nnrep::label::positive ? 1 : 0);
    *comparisons_out = counted.comparisons;
    if (bound_out != nullptr) {
      *bound_out = nnrep::knn_comparison_bound(rep->rep.size(), k);
    }
  });
}

nnrep_status nnrep_max_mono_rectangle(int n, char** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be NULL");
    *out = dup_string(nnrep::rectangle_to_json(nnrep::max_mono_rectangle(n)));
  });
}

nnrep_status nnrep_experiment_run(const char* kind, int arity, uint64_t samples, uint64_t seed,
                                  char** csv_out, char** json_out) {
  return guarded([&] {
    require(kind != nullptr, "kind must not be NULL");
    nnrep::experiment_config config;
    config.what = nnrep::parse_experiment_kind(kind);
    config.arity = arity;
    config.samples = samples;
    config.seed = seed;
    const nnrep::experiment_output output = nnrep::run_experiment(config);
    set_out_string(csv_out, output.csv);
    set_out_string(json_out, output.json);
  });
}

}  // extern "C"
