#pragma once

#include <stdexcept>
#include <string>

namespace gk {

// Every library error carries a stable code string so the CLI can map any
// failure to exit code 2 and machine output can switch on it.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define GK_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                 \
    public:                                                     \
        explicit Name(const std::string& message)               \
            : Error(#Name, message) {}                          \
    }

GK_DEFINE_ERROR(NonPrimeVertex);
GK_DEFINE_ERROR(DanglingEdge);
GK_DEFINE_ERROR(LoopEdge);
GK_DEFINE_ERROR(GraphTooLarge);
GK_DEFINE_ERROR(UnknownVertex);
GK_DEFINE_ERROR(InvalidFixedAssignment);
GK_DEFINE_ERROR(ImproperColoring);
GK_DEFINE_ERROR(CyclicOrientation);
GK_DEFINE_ERROR(DirectedThreePath);
GK_DEFINE_ERROR(BadSubset);
GK_DEFINE_ERROR(BadLabeling);
GK_DEFINE_ERROR(InvalidGroupData);
GK_DEFINE_ERROR(FieldTooLarge);
GK_DEFINE_ERROR(HypothesisViolation);
GK_DEFINE_ERROR(OrderBoundExceeded);
GK_DEFINE_ERROR(DisjointnessViolation);
GK_DEFINE_ERROR(NotRealizable);
GK_DEFINE_ERROR(NonIntegralAverage);
GK_DEFINE_ERROR(CharacteristicInSet);
GK_DEFINE_ERROR(VertexMismatch);
GK_DEFINE_ERROR(MissingTwo);
GK_DEFINE_ERROR(ParseError);
GK_DEFINE_ERROR(ValidationError);
GK_DEFINE_ERROR(UnknownGroup);
GK_DEFINE_ERROR(DataUnavailable);
GK_DEFINE_ERROR(TooManyVertices);

#undef GK_DEFINE_ERROR

} // namespace gk
