#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "report_io.hpp"
#include "resint/chow.hpp"
#include "resint/identities.hpp"
#include "resint/limits.hpp"

namespace resint::cli {

struct RunConfig {
  std::string subcommand;
  int r = 1;
  int n = 3;
  int d = 3;
  std::vector<Piece> pieces;
  bool all = false;
  bool non_reduced_only = false;
  bool show_classes = false;
  int dmax = 4;
  Format format = Format::table;
  std::optional<Partition> pairing;
  std::optional<std::string> ring_file;
  std::optional<std::string> input_file;
  bool standard = false;
  Mutation fault = Mutation::none;
  unsigned threads = 1;
};

/// Text for stdout and the process exit code (0 when every internal check
/// passed, 1 otherwise). Usage problems are thrown as resint::Error.
struct CommandResult {
  std::string output;
  int exit_code = 0;
};

/// Throws ValidationError when the subcommand's inputs are inconsistent.
void validate(const RunConfig& config);

CommandResult cmd_fano(const RunConfig& config);
CommandResult cmd_degenerate(const RunConfig& config);
CommandResult cmd_verify(const RunConfig& config);
CommandResult cmd_decompose(const RunConfig& config);
CommandResult run_config(const RunConfig& config);

/// Golden suite over every tabulated value; one line per failure and a
/// final digest line.
CommandResult run_selftest(unsigned threads);

/// RESINT_THREADS, or the hardware concurrency when unset; at least 1.
unsigned threads_from_env();

/// Runs job(0..count-1) on up to `threads` workers and returns the results
/// in index order. The first exception (by index) is rethrown.
template <class T>
std::vector<T> parallel_map(std::size_t count, unsigned threads, const std::function<T(std::size_t)>& job);

}  // namespace resint::cli

#include "parallel.inl"
