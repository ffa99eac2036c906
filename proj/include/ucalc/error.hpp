#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ucalc {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value of one algebra kind was handed to an operation of another,
/// or a rank magnitude is not an element of the algebra's rank group.
class KindMismatchError : public Error {
 public:
  using Error::Error;
};

/// An operation precondition does not hold (e.g. solve_add with target < v).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Conditioning or revising on an event of measure n.
class ImpossibleEvidenceError : public Error {
 public:
  using Error::Error;
};

/// Normalizing a table whose total is n.
class AllImpossibleError : public Error {
 public:
  using Error::Error;
};

/// Entrenchment queried for a formula that is not plainly believed.
class NotBelievedError : public Error {
 public:
  using Error::Error;
};

/// Rank-shift revision with a non-positive increment.
class BadShiftError : public Error {
 public:
  using Error::Error;
};

/// An event was used with a measure over a different world space.
class SpaceMismatchError : public Error {
 public:
  using Error::Error;
};

/// Blocks do not form a partition, or block values are not normalized.
class PartitionError : public Error {
 public:
  using Error::Error;
};

/// A formula mentions an atom outside the space's vocabulary, the
/// vocabulary has duplicates, or it exceeds the enumeration limit.
class VocabularyError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in a formula, value literal, or state file.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t offset,
             std::vector<std::string> expected = {})
      : Error(std::move(message)), offset_(offset),
        expected_(std::move(expected)) {}

  /// Byte offset of the offending position in the input.
  std::size_t offset() const { return offset_; }

  /// Tokens that would have been accepted at the offending position.
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace ucalc
