#pragma once

#include <stdexcept>
#include <string>

namespace tridle {

// Domain error with a stable machine-readable code. The CLI maps these to
// exit status 1 and prints the code, so codes are part of the interface.
class Error : public std::runtime_error {
  public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

  private:
    std::string code_;
};

#define TRIDLE_ERROR_TYPE(Name)                                               \
    class Name : public Error {                                               \
      public:                                                                 \
        explicit Name(const std::string& what) : Error(#Name, what) {}        \
    }

TRIDLE_ERROR_TYPE(NotDivisible);
TRIDLE_ERROR_TYPE(DivisionByZero);
TRIDLE_ERROR_TYPE(NonUnitEvaluation);
TRIDLE_ERROR_TYPE(SyntaxError);
TRIDLE_ERROR_TYPE(ArityError);
TRIDLE_ERROR_TYPE(EdgeCountError);
TRIDLE_ERROR_TYPE(InvalidPd);
TRIDLE_ERROR_TYPE(NonPlanar);
TRIDLE_ERROR_TYPE(Disconnected);
TRIDLE_ERROR_TYPE(OrientationAmbiguous);
TRIDLE_ERROR_TYPE(SignConflict);
TRIDLE_ERROR_TYPE(PreconditionViolated);
TRIDLE_ERROR_TYPE(MultiComponent);
TRIDLE_ERROR_TYPE(ShapeError);
TRIDLE_ERROR_TYPE(InvalidSite);
TRIDLE_ERROR_TYPE(NotSolvable);
TRIDLE_ERROR_TYPE(BudgetExceeded);
TRIDLE_ERROR_TYPE(UnknownCatalogEntry);

#undef TRIDLE_ERROR_TYPE

} // namespace tridle
