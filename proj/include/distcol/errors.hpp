#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace distcol {

/// Input that violates a documented precondition (bad file, degree too
/// large, unsupported colour count, non-Latin square, ...).
class InvalidInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A matching or cycle decomposition could not be produced. Only reachable
/// when the input is not a cubic bipartite multigraph.
class DecompositionError : public InvalidInstance {
 public:
  using InvalidInstance::InvalidInstance;
};

/// Raised when a step that the existence argument guarantees comes up empty.
/// Never fires on valid input; `context()` carries a JSON dump of the
/// instance and the partial colouring for bug reports.
class TheoremViolation : public std::logic_error {
 public:
  explicit TheoremViolation(const std::string& what, std::string context = {})
      : std::logic_error(what), context_(std::move(context)) {}

  const std::string& context() const noexcept { return context_; }

 private:
  std::string context_;
};

}  // namespace distcol
