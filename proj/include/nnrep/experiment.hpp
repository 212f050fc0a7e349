#pragma once

#include <cstdint>
#include <string>

namespace nnrep {

// Batch runs over many functions. Output is fully determined by the config:
// the same (kind, arity, samples, seed) always produces byte-identical CSV
// and JSON, and no timing information ever appears in either.
struct experiment_config {
  enum class kind { random_bnn, covering_size, compile_sweep };

  kind what = kind::random_bnn;
  int arity = 2;
  std::uint64_t samples = 10;
  std::uint64_t seed = 1;
};

struct experiment_output {
  std::string csv;   // header plus one row per record, '\n' separators
  std::string json;  // config echo plus the same records as objects
};

// random_bnn (arity <= 4): exact smallest Boolean-prototype representation
//   per sampled function; switches to full truth-table enumeration when
//   samples >= 2^(2^arity). Columns: index,function,optimum,explored.
// covering_size (arity <= 12): size of the ball-covering construction versus
//   the 5-per-cell bound, same exhaustive rule. Columns:
//   index,function,size,cells,bound,ok.
// compile_sweep (arity <= 6, per n = 1..arity): polynomial compilation of
//   every symmetric function's diagonal representation, of `samples` random
//   weighted-threshold representations, of the two fixed Boolean
//   constructions, and of `samples` random functions' covering
//   representations. Columns: n,method,function,prototypes,terms,ok.
experiment_output run_experiment(const experiment_config& config);

// "random-bnn" | "covering-size" | "compile-sweep" <-> enum, throws
// invalid_argument on unknown names.
experiment_config::kind parse_experiment_kind(const std::string& name);
std::string experiment_kind_name(experiment_config::kind what);

}  // namespace nnrep
