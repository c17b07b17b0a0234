#include "umeb/io.hpp"

#include <fstream>

namespace umeb::io {

json candidate_to_json(const UmebCandidate& candidate) {
  json members = json::array();
  for (const auto& m : candidate.members) {
    json entries = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        entries.push_back({m(i, j).real(), m(i, j).imag()});
      }
    }
    members.push_back(std::move(entries));
  }
  return json{{"d", candidate.dim},
              {"n", candidate.size()},
              {"label", candidate.label},
              {"members", std::move(members)}};
}

UmebCandidate candidate_from_json(const json& j) {
  UmebCandidate out;
  try {
    out.dim = j.at("d").get<int>();
    const int n = j.at("n").get<int>();
    out.label = j.value("label", "file");
    if (out.dim < 2) throw IoError("candidate: d must be >= 2");
    const auto& members = j.at("members");
    if (static_cast<int>(members.size()) != n) {
      throw IoError("candidate: n does not match member count");
    }
    for (const auto& entries : members) {
      if (static_cast<int>(entries.size()) != out.dim * out.dim) {
        throw IoError("candidate: member entry count is not d^2");
      }
      Mat m(out.dim, out.dim);
      int idx = 0;
      for (int i = 0; i < out.dim; ++i) {
        for (int k = 0; k < out.dim; ++k, ++idx) {
          const auto& pair = entries.at(idx);
          m(i, k) = cplx(pair.at(0).get<double>(), pair.at(1).get<double>());
        }
      }
      if (!m.allFinite()) throw IoError("candidate: non-finite entry");
      out.members.push_back(std::move(m));
    }
  } catch (const json::exception& e) {
    throw IoError(std::string("candidate: malformed JSON: ") + e.what());
  }
  return out;
}

UmebCandidate load_candidate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw IoError(std::string("parse error in ") + path + ": " + e.what());
  }
  return candidate_from_json(j);
}

json state_to_json(const BipartiteState& s) {
  json amps = json::array();
  for (Eigen::Index i = 0; i < s.amplitudes.size(); ++i) {
    amps.push_back({s.amplitudes(i).real(), s.amplitudes(i).imag()});
  }
  return json{{"d", s.dim}, {"amplitudes", std::move(amps)}};
}

json gram_to_json(const GramReport& rep) {
  return json{{"schema", kSchema},
              {"dim", rep.dim},
              {"n", rep.n},
              {"max_offdiag", rep.max_offdiag},
              {"max_diag_dev", rep.max_diag_dev},
              {"max_unitarity_defect", rep.max_unitarity_defect},
              {"pass", rep.pass()}};
}

json unextendibility_to_json(const UnextendibilityReport& rep) {
  return json{{"schema", kSchema},
              {"complement_dim", rep.complement_dim},
              {"best_value", rep.best_value},
              {"best_entropy_bits", rep.best_entropy_bits},
              {"restarts", rep.restarts},
              {"converged_restarts", rep.converged_restarts},
              {"structural_certificate", umeb::to_string(rep.structural_certificate)},
              {"best_state", state_to_json(rep.best_state)}};
}

json channel_to_json(const ChannelReport& rep) {
  return json{{"schema", kSchema},
              {"trace_preserving_residual", rep.trace_preserving_residual},
              {"unital_residual", rep.unital_residual},
              {"support_dim", rep.support_dim},
              {"support_max_entanglement", rep.support_max_entanglement},
              {"mixture_of_unitaries_possible", rep.mixture_of_unitaries_possible},
              {"verdict_tag", umeb::to_string(rep.tag)}};
}

}  // namespace umeb::io
