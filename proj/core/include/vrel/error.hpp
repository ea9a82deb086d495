#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vrel {

enum class Errc {
  kOutOfRange,
  kDuplicateEdge,
  kSelfLoop,
  kEdgeExists,
  kNoInsertion,
  kDisconnected,
  kEmptyMask,
  kNotSymmetric,
  kNoConvergence,
  kOverBudget,
  kStaleClassification,
  kProbabilityRange,
  kParameterRange,
  kQuotaFailure,
  kMissingScore,
  kEmptyInput,
  kOutsideBounds,
  kIncompleteRecords,
  kParse,
  kManifestMismatch,
  kIo,
};

std::string_view errc_name(Errc code);

// All library failures are reported through this type; `code()` lets callers
// tell the failure classes apart without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace vrel
