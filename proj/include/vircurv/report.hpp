#pragma once

#include <string>
#include <string_view>

#include "vircurv/curvature.hpp"
#include "vircurv/verify.hpp"

namespace vircurv {

enum class Format { text, json, csv };

std::string_view to_string(Format format);
Format parse_format(std::string_view text);  // UsageError on unknown names

// Every emitter returns complete output ending in a newline. JSON documents
// carry "schema_version": 1 and write every scalar as a "p/q" string. Output
// depends only on the arguments.

std::string emit_field(std::string_view command, const CentralParams& params, const TrigField& x, Format format);
std::string emit_scalar(std::string_view command, const CentralParams& params, const Rational& value, Format format);
std::string emit_virasoro(std::string_view command, const CentralParams& params, const VirasoroElement& x,
                          Format format);
std::string emit_complex(std::string_view command, const CentralParams& params, const ComplexField& z,
                         Format format);
std::string emit_ricci(const RicciReport& report, Format format);

// elapsed_ms is written only when `timing` is set.
std::string emit_verification(const VerificationReport& report, Format format, bool timing = false);

} // namespace vircurv
