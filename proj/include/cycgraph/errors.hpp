#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cycgraph {

/// Group enumeration or a pairwise scan grew past its configured cap.
class CapExceededError : public std::runtime_error {
public:
  CapExceededError(const std::string& what, std::size_t cap)
      : std::runtime_error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}

  std::size_t cap() const { return cap_; }

private:
  std::size_t cap_;
};

class DegreeMismatchError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class NotAMemberError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class NotNormalError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An affine family description violates one of its construction conditions.
/// The message names the specific condition that failed.
class InvalidFamilyError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The structured (non-enumerating) counting path cannot be applied; the
/// caller must fall back to brute force on an enumerated realization.
class StructuredCountError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The commuting graph is undefined for abelian groups.
class EmptyVertexSetError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A requested count is not computable with the available methods and caps.
class UncomputableError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class SpecParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace cycgraph
