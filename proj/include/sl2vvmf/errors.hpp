#pragma once

#include <stdexcept>
#include <string>

namespace sl2vvmf {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidArgument : Error {
  using Error::Error;
};

// request outside the supported dimensions / ranges
struct Unsupported : Error {
  using Error::Error;
};

// two independent computations disagreed; always a bug
struct InternalInconsistency : Error {
  using Error::Error;
};

struct DegenerateMlde : Error {
  using Error::Error;
};

struct RelationViolation : Error {
  using Error::Error;
};

}  // namespace sl2vvmf
