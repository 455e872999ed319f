#pragma once

#include <stdexcept>
#include <string>

namespace abelian {

/// Base class of every error thrown by this library.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// A group or field was requested from inconsistent parameters.
class invalid_spec_error : public error {
 public:
  using error::error;
};

/// Operands do not fit together (wrong group, wrong field context,
/// empty set where a nonempty one is required, division by zero).
class domain_error : public error {
 public:
  using error::error;
};

/// An operation-specific hypothesis was violated by the arguments.
class precondition_error : public error {
 public:
  using error::error;
};

/// The request exceeds a configured enumeration or search cap.
class resource_error : public error {
 public:
  using error::error;
};

/// The coefficient characteristic is incompatible with the group.
class unsupported_error : public error {
 public:
  using error::error;
};

/// A mathematical identity that must hold failed; indicates a bug.
class internal_error : public error {
 public:
  using error::error;
};

/// Malformed serialized input.
class parse_error : public error {
 public:
  using error::error;
};

}  // namespace abelian
