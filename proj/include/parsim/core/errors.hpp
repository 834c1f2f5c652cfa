#pragma once

#include <stdexcept>
#include <string>

namespace parsim {

// Process exit codes used by the command-line tool. Every failure mode has
// a distinct, documented code so scripts can dispatch on $?.
enum class ExitCode : int {
  ok = 0,                  // success
  usage = 1,               // bad command line (unknown flag, missing arg)
  parse_error = 2,         // malformed input file
  precondition = 3,        // input violates an operation's precondition
  budget_exceeded = 4,     // an exact counter refused: search space over budget
  verification_failed = 5, // at least one verification verdict failed
  io_error = 6,            // file not readable/writable
  internal = 7             // invariant breach inside the library (a bug)
};

// Input text could not be parsed; line/col are 1-based positions.
struct ParseError : std::runtime_error {
  int line, col;
  ParseError(std::string msg, int line_, int col_)
      : std::runtime_error(std::move(msg)), line(line_), col(col_) {}
};

// An operation was handed an input outside its documented domain.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An exact counter determined the search space exceeds its configured
// budget. Counting never degrades to approximation; it refuses instead.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal invariant failed; indicates a bug in this library, not bad
// input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

} // namespace parsim
