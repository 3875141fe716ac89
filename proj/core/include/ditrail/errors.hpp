#pragma once

#include <stdexcept>
#include <string>

namespace ditrail {

/// Malformed caller input: out-of-range vertex, empty set where one is
/// required, unparsable file, and the like.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A stated precondition of an operation does not hold. Distinct from a
/// negative result: the question was not well-posed.
class PreconditionError : public std::logic_error {
 public:
  explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

/// A structural guarantee that must hold under valid preconditions failed.
/// Either an implementation bug or a genuine counterexample; never swallowed.
class LemmaViolation : public std::runtime_error {
 public:
  explicit LemmaViolation(const std::string& what) : std::runtime_error(what) {}
};

/// An internal contract between modules was broken (e.g. an unbalanced arc
/// set handed to the Euler-circuit extractor).
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

/// Trail composition rejected: the spliced-in trail shares an arc with the
/// host trail.
class SpliceError : public std::invalid_argument {
 public:
  explicit SpliceError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace ditrail
