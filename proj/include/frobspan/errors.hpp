#pragma once

#include <stdexcept>
#include <string>

namespace frobspan {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Endpoint mismatch when composing spans, relations, maps or words.
class ComposeError : public Error {
public:
  explicit ComposeError(const std::string& what) : Error(what) {}
};

/// A stated precondition does not hold; `condition()` names the failed check.
class PreconditionError : public Error {
public:
  PreconditionError(std::string condition, const std::string& what)
      : Error(what), condition_(std::move(condition)) {}
  const std::string& condition() const { return condition_; }

private:
  std::string condition_;
};

/// Malformed input (JSON schema, label sets, tables).
class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

/// Ill-typed generator word; carries the offending subtree rendering.
class WordError : public Error {
public:
  WordError(std::string subtree, const std::string& what)
      : Error(what), subtree_(std::move(subtree)) {}
  const std::string& subtree() const { return subtree_; }

private:
  std::string subtree_;
};

}  // namespace frobspan
