#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace clutterlab {

enum class Errc {
  NotAntichain,
  DuplicateMember,
  ElementOutOfRange,
  InfiniteCoveringNumber,
  NotTangled,
  NotBipartite,
  GraphConnected,
  EmptyCore,
  NotACover,
  IndexOutOfRange,
  EmptySetSystem,
  BudgetExceeded,
  BoundExceeded,
  SizeRangeInfeasible,
  BadDimension,
  SetcoreNotInjective,
  ParseError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

/// Thrown by min_cover_graph when the minimum covers induce a non-bipartite
/// graph. Carries an odd closed walk (vertex sequence, first == last) as the
/// certificate; a non-bipartite G(C) means the input clutter is not clean.
class NotBipartiteError : public Error {
 public:
  explicit NotBipartiteError(std::vector<int> walk)
      : Error(Errc::NotBipartite, "minimum-cover graph has an odd closed walk"),
        odd_walk_(std::move(walk)) {}

  const std::vector<int>& odd_walk() const { return odd_walk_; }

 private:
  std::vector<int> odd_walk_;
};

}  // namespace clutterlab
