#pragma once

#include <stdexcept>
#include <string>

namespace weber {

/// Base class for every error raised by the library. `kind()` is the stable
/// machine-readable name used in CLI error reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define WEBER_DEFINE_ERROR(Name)                                         \
  class Name : public Error {                                            \
   public:                                                               \
    explicit Name(const std::string& what) : Error(#Name, what) {}       \
  };

WEBER_DEFINE_ERROR(DomainError)
WEBER_DEFINE_ERROR(AmbiguityError)
WEBER_DEFINE_ERROR(ConsistencyError)
WEBER_DEFINE_ERROR(SingularParameter)
WEBER_DEFINE_ERROR(KernelError)
WEBER_DEFINE_ERROR(DegenerateSeed)
WEBER_DEFINE_ERROR(NeedsExtension)
WEBER_DEFINE_ERROR(ChartError)
WEBER_DEFINE_ERROR(DivergenceError)
WEBER_DEFINE_ERROR(InternalError)
WEBER_DEFINE_ERROR(IOError)

#undef WEBER_DEFINE_ERROR

}  // namespace weber
