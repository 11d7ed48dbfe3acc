#pragma once

#include <stdexcept>
#include <string>

namespace fgtool {

enum class Errc {
  // structure validation
  MissingFace,
  UnknownVertex,
  EmptySimplex,
  CyclicOrder,
  CyclicQuiver,
  ParallelArrows,
  NotOrdered,
  Disconnected,
  // basepoints and maps
  UnknownBasepoint,
  MalformedWalk,
  NotAnEdgePath,
  // Van Kampen preconditions
  CoverViolation,
  DisconnectedPiece,
  BadBasepoint,
  // group computations
  TargetTooLarge,
  NonPrimeCharacteristic,
  // input files
  SyntaxError,
  DuplicateId,
  UnknownLabel,
  InvalidInput,
};

const char* errc_name(Errc c);

/// All domain failures are thrown as Error; `line()` is nonzero for
/// errors that point at a line of an input file.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg, int line = 0)
      : std::runtime_error(line > 0 ? std::string(errc_name(code)) + " (line " +
                                          std::to_string(line) + "): " + msg
                                    : std::string(errc_name(code)) + ": " + msg),
        code_(code), line_(line) {}

  Errc code() const { return code_; }
  int line() const { return line_; }

private:
  Errc code_;
  int line_;
};

} // namespace fgtool
