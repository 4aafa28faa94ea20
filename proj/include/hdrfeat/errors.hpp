#pragma once

#include <stdexcept>

namespace hdrfeat {

/// Invalid argument or configuration supplied by the caller. CLI exit code 1.
class ParamError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// File could not be opened or read. CLI exit code 2.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// File was readable but its magic/layout is unsupported or malformed. CLI exit code 2.
class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Structurally valid input carrying invalid values (NaN samples, bad indices, ...).
/// CLI exit code 2.
class DataError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace hdrfeat
