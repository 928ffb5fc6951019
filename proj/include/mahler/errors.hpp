#ifndef MAHLER_ERRORS_HPP
#define MAHLER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mahler {

/* Base for all reportable failures.  name() is stable and machine-readable;
   what() carries the human-readable detail. */
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& msg)
        : std::runtime_error(msg), name_(std::move(name)) {}
    const std::string& name() const { return name_; }
private:
    std::string name_;
};

#define MAHLER_DEFINE_ERROR(NAME)                                   \
    class NAME : public Error {                                     \
    public:                                                         \
        explicit NAME(const std::string& msg) : Error(#NAME, msg) {} \
    }

MAHLER_DEFINE_ERROR(CompositionOrderError);
MAHLER_DEFINE_ERROR(TruncationError);
MAHLER_DEFINE_ERROR(IllPosedError);
MAHLER_DEFINE_ERROR(AmbiguousError);
MAHLER_DEFINE_ERROR(PreconditionError);
MAHLER_DEFINE_ERROR(RejectedError);
MAHLER_DEFINE_ERROR(PoleError);
MAHLER_DEFINE_ERROR(PrecisionExhausted);
MAHLER_DEFINE_ERROR(NoConvergenceError);
MAHLER_DEFINE_ERROR(DegenerateError);
MAHLER_DEFINE_ERROR(InconclusiveError);
MAHLER_DEFINE_ERROR(SaturationError);
MAHLER_DEFINE_ERROR(InfeasibleError);
MAHLER_DEFINE_ERROR(DegreeOverflowError);
MAHLER_DEFINE_ERROR(TailBoundError);
MAHLER_DEFINE_ERROR(ConditionError);

#undef MAHLER_DEFINE_ERROR

}  // namespace mahler

#endif
