#pragma once

#include <string>

#include <json.hpp>

#include "umeb/channels.hpp"
#include "umeb/verifier.hpp"

namespace umeb::io {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "umeb-report/1";

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Candidate file format: {"d": int, "n": int, "members": [[[re,im], ...
// row-major], ...]}.
json candidate_to_json(const UmebCandidate& candidate);
UmebCandidate candidate_from_json(const json& j);
UmebCandidate load_candidate(const std::string& path);

json state_to_json(const BipartiteState& s);
json gram_to_json(const GramReport& rep);
json unextendibility_to_json(const UnextendibilityReport& rep);
json channel_to_json(const ChannelReport& rep);

enum class Verdict { umeb_proven, umeb_evidence, extendable, invalid };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::umeb_proven: return "UMEB_PROVEN";
    case Verdict::umeb_evidence: return "UMEB_EVIDENCE";
    case Verdict::extendable: return "EXTENDABLE";
    default: return "INVALID";
  }
}

}  // namespace umeb::io
