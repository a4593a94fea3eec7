#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

namespace infcc {

enum class ErrorCode {
  kUnknownFamily,
  kFlipTargetNotMember,
  kNotAMember,
  kUnboundedQuad,
  kUnreachable,
  kInfiniteCrossers,
  kNotLocallyFinite,
  kNotAPolygon,
  kArcOutsideModel,
  kSupportMeetsU,
  kNonAdmissibleFrontier,
  kExactnessFailure,
  kParse,
};

const char* to_string(ErrorCode code);

/// Refusals that carry mathematical meaning (unreachable objects, infinite
/// crosser sets, fountains handed to the tiling generator) are reported with
/// this type; `detail` is the machine-readable diagnostic the CLI prints.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, nlohmann::json detail = nlohmann::json::object())
      : std::runtime_error(what), code_(code), detail_(std::move(detail)) {}

  ErrorCode code() const { return code_; }
  const nlohmann::json& detail() const { return detail_; }

  /// True for mathematical refusals (exit code 2 on the command line).
  bool is_refusal() const;

 private:
  ErrorCode code_;
  nlohmann::json detail_;
};

}  // namespace infcc
