#ifndef DOLDEF_ERRORS_HPP
#define DOLDEF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace doldef {

/// A computation whose mathematical preconditions fail at the given input;
/// reported as a refusal (CLI exit code 3), never as a wrong answer.
struct ComputationRefused : std::runtime_error {
  explicit ComputationRefused(const std::string& what) : std::runtime_error(what) {}
};

/// A model that fails structural validation (CLI exit code 2).
struct ModelInvalid : std::runtime_error {
  explicit ModelInvalid(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace doldef

#endif
