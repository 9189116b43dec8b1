#pragma once

#include <stdexcept>
#include <string>

namespace cegi {

// Every failure the library reports. The first block is domain/validation
// (CLI exit 1), the last two are I/O and decode failures (CLI exit 2);
// ingestion reclassifies its per-line decode issues as domain problems.
enum class errc {
  non_monotonic_timestamps,
  negative_power,
  unknown_region,
  rank_exceeds_dim,
  missing_param_entry,
  out_of_range,
  non_positive_reference,
  non_positive_total_gain,
  non_positive_candidate,
  non_positive_base,
  empty_selection,
  duplicate_key,
  invariant_violation,
  unknown_task,
  unknown_metric,
  external_only_metric,
  checksum_mismatch,
  invalid_argument,
  io_error,
  decode_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::non_monotonic_timestamps: return "NonMonotonicTimestamps";
    case errc::negative_power: return "NegativePower";
    case errc::unknown_region: return "UnknownRegion";
    case errc::rank_exceeds_dim: return "RankExceedsDim";
    case errc::missing_param_entry: return "MissingParamEntry";
    case errc::out_of_range: return "OutOfRange";
    case errc::non_positive_reference: return "NonPositiveReference";
    case errc::non_positive_total_gain: return "NonPositiveTotalGain";
    case errc::non_positive_candidate: return "NonPositiveCandidate";
    case errc::non_positive_base: return "NonPositiveBase";
    case errc::empty_selection: return "EmptySelection";
    case errc::duplicate_key: return "DuplicateKey";
    case errc::invariant_violation: return "InvariantViolation";
    case errc::unknown_task: return "UnknownTask";
    case errc::unknown_metric: return "UnknownMetric";
    case errc::external_only_metric: return "ExternalOnlyMetric";
    case errc::checksum_mismatch: return "ChecksumMismatch";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::io_error: return "IoError";
    case errc::decode_error: return "DecodeError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  errc code() const noexcept { return code_; }

  bool is_io() const noexcept { return code_ == errc::io_error || code_ == errc::decode_error; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace cegi
