#include "vrel/error.hpp"

namespace vrel {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kOutOfRange: return "out-of-range";
    case Errc::kDuplicateEdge: return "duplicate-edge";
    case Errc::kSelfLoop: return "self-loop";
    case Errc::kEdgeExists: return "edge-exists";
    case Errc::kNoInsertion: return "no-insertion";
    case Errc::kDisconnected: return "disconnected";
    case Errc::kEmptyMask: return "empty-mask";
    case Errc::kNotSymmetric: return "not-symmetric";
    case Errc::kNoConvergence: return "no-convergence";
    case Errc::kOverBudget: return "over-budget";
    case Errc::kStaleClassification: return "stale-classification";
    case Errc::kProbabilityRange: return "probability-range";
    case Errc::kParameterRange: return "parameter-range";
    case Errc::kQuotaFailure: return "quota-failure";
    case Errc::kMissingScore: return "missing-score";
    case Errc::kEmptyInput: return "empty-input";
    case Errc::kOutsideBounds: return "outside-bounds";
    case Errc::kIncompleteRecords: return "incomplete-records";
    case Errc::kParse: return "parse";
    case Errc::kManifestMismatch: return "manifest-mismatch";
    case Errc::kIo: return "io";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace vrel
