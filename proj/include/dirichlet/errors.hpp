#pragma once

#include <stdexcept>
#include <string>

namespace dirichlet {

/// Base class of every error raised by the library.  `kind()` is the stable,
/// machine-readable tag surfaced by the CLI error object.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define DIRICHLET_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& what) : Error(#Name, what) {}    \
  }

DIRICHLET_DEFINE_ERROR(ParseError);
DIRICHLET_DEFINE_ERROR(NonRealPolynomial);
DIRICHLET_DEFINE_ERROR(DomainViolation);
DIRICHLET_DEFINE_ERROR(OutsideDomain);
DIRICHLET_DEFINE_ERROR(NotDegreeTwo);
DIRICHLET_DEFINE_ERROR(UnboundedDomain);
DIRICHLET_DEFINE_ERROR(EmptyInterior);
DIRICHLET_DEFINE_ERROR(SingularSystem);
DIRICHLET_DEFINE_ERROR(ShiftRequired);

#undef DIRICHLET_DEFINE_ERROR

}  // namespace dirichlet
