#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace relnet {

// Base for all typed computation errors. kind() is a stable machine-readable
// name; the CLI maps it onto exit code 3 and prints it on stderr.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define RELNET_DEFINE_ERROR(Name, Kind)                                  \
    class Name : public Error {                                          \
    public:                                                              \
        explicit Name(const std::string& what) : Error(Kind, what) {}    \
    }

RELNET_DEFINE_ERROR(VarMismatchError, "VarMismatch");
RELNET_DEFINE_ERROR(NonzeroRemainderError, "NonzeroRemainder");
RELNET_DEFINE_ERROR(DegenerateRootError, "DegenerateRoot");
RELNET_DEFINE_ERROR(DivergentMomentError, "DivergentMoment");
RELNET_DEFINE_ERROR(DivergentMgfError, "DivergentMGF");
RELNET_DEFINE_ERROR(TooManyEdgesError, "TooManyEdges");
RELNET_DEFINE_ERROR(NoGraphRealizationError, "NoGraphRealization");
RELNET_DEFINE_ERROR(MissingCoefficientError, "MissingCoefficient");
RELNET_DEFINE_ERROR(NonzeroFirstCutError, "NonzeroFirstCut");
RELNET_DEFINE_ERROR(InconsistentSizesError, "InconsistentSizes");
RELNET_DEFINE_ERROR(InconclusiveError, "Inconclusive");
RELNET_DEFINE_ERROR(QuadratureError, "QuadratureFailure");
RELNET_DEFINE_ERROR(UnsupportedError, "Unsupported");

#undef RELNET_DEFINE_ERROR

}  // namespace relnet
