#pragma once

#include <stdexcept>
#include <string>

namespace vdeblur {

// Root of the library's error taxonomy. Every failure surfaced to callers
// derives from Error, so CLI code can map the whole family to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mismatched image/flow/map dimensions or channel counts.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Input too small for the requested operation (pyramid floor, SSIM window).
class SizeError : public Error {
 public:
  using Error::Error;
};

// Non-finite or out-of-domain numeric input.
class ValueError : public Error {
 public:
  using Error::Error;
};

// Malformed or truncated file content.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Filesystem read/write failure.
class IoError : public Error {
 public:
  using Error::Error;
};

// Empty, too-short, or mismatched frame sequences.
class SequenceError : public Error {
 public:
  using Error::Error;
};

// Invalid configuration: unknown restorer, unknown config key, bad parameter.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// External restorer backend failed to run or produce output.
class BackendError : public Error {
 public:
  using Error::Error;
};

// External restorer backend violated the tensor contract.
class ContractError : public Error {
 public:
  using Error::Error;
};

}  // namespace vdeblur
