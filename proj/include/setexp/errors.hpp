#pragma once

#include <stdexcept>
#include <string>

namespace setexp {

// Violated precondition or invariant on user-supplied data.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Combinatorial guard exceeded (vertex enumeration, selection search).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// An operation that requires a non-empty set received or produced the empty set.
class EmptyResultError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace setexp

namespace setexp {

// Malformed instance document; the message starts with the JSON path.
class ParseError : public DomainError {
 public:
  ParseError(const std::string& path, const std::string& what) : DomainError(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace setexp
