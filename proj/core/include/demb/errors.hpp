#ifndef DEMB_ERRORS_HPP
#define DEMB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace demb {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define DEMB_DEFINE_ERROR(Name)                                         \
  struct Name : Error {                                                 \
    explicit Name(const std::string& msg = "")                          \
        : Error(msg.empty() ? std::string(#Name)                        \
                            : std::string(#Name) + ": " + msg) {}       \
  }

DEMB_DEFINE_ERROR(ParseError);
DEMB_DEFINE_ERROR(DivisionByZero);
DEMB_DEFINE_ERROR(DimensionMismatch);
DEMB_DEFINE_ERROR(DimensionTooLarge);
DEMB_DEFINE_ERROR(DegeneratePolytope);
DEMB_DEFINE_ERROR(UnboundedRegion);
DEMB_DEFINE_ERROR(EmptyRegion);
DEMB_DEFINE_ERROR(ZeroVector);
DEMB_DEFINE_ERROR(ZeroSegment);
DEMB_DEFINE_ERROR(IndexOutOfRange);
DEMB_DEFINE_ERROR(NotDelzant);
DEMB_DEFINE_ERROR(NotDelzantVertex);
DEMB_DEFINE_ERROR(ChopTooLarge);
DEMB_DEFINE_ERROR(NegativeRadius);
DEMB_DEFINE_ERROR(NonSimpleVertex);
DEMB_DEFINE_ERROR(InvalidParameters);
DEMB_DEFINE_ERROR(UnknownEntry);
DEMB_DEFINE_ERROR(DimensionNotRenderable);

#undef DEMB_DEFINE_ERROR

}  // namespace demb

#endif
