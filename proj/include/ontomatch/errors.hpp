#pragma once

#include <stdexcept>
#include <string>

namespace ontomatch {

/// Base for all input-related failures so callers can treat "the input was
/// bad" uniformly while still catching specific conditions.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class MalformedXml : public InputError {
public:
  MalformedXml(const std::string& message, int line)
      : InputError("malformed XML at line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const noexcept { return line_; }

private:
  int line_;
};

class SyntaxError : public InputError {
public:
  SyntaxError(const std::string& message, int line)
      : InputError("syntax error at line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const noexcept { return line_; }

private:
  int line_;
};

class MissingOntologyUri : public InputError {
public:
  using InputError::InputError;
};

class DuplicateIri : public InputError {
public:
  using InputError::InputError;
};

class DanglingEdge : public InputError {
public:
  using InputError::InputError;
};

class UnknownSynset : public InputError {
public:
  using InputError::InputError;
};

class CyclicHierarchy : public InputError {
public:
  using InputError::InputError;
};

class KindMismatch : public InputError {
public:
  using InputError::InputError;
};

class EmptyMatrix : public InputError {
public:
  using InputError::InputError;
};

class MissingField : public InputError {
public:
  using InputError::InputError;
};

/// File could not be read or written; distinct from parse failures so the
/// CLI can report I/O problems with a different exit status.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace ontomatch
