#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "scalsup/multiagent.hpp"

namespace scalsup {

/// Parses a model document (JSON, format "scalsup-model/1"; schema in
/// schema/model.schema.json). Throws InvalidModel on any structural or
/// semantic error, including unresolved names.
MultiAgentModel parse_model(std::string_view text);
MultiAgentModel load_model(const std::filesystem::path& path);

/// Canonical model document. Agents are named "<group>_<index>" and the spec
/// "spec"; parsing the output yields an isomorphic model.
std::string serialize_model(const MultiAgentModel& m);

/// Single-line JSON rendering of a generator with canonical state numbering.
std::string generator_to_json(const Generator& g);

std::string verdict_to_json(const ConditionVerdict& v);

struct ReportOptions {
    /// Also emit SSUP_o with one transition per source event.
    bool expand_scalable_supervisor = false;
};

/// Full synthesis report as a pretty-printed JSON document. The
/// "supervisor" section depends only on the relabeled supervisor, so it is
/// byte-identical for models that differ only in the number of agents.
std::string report_to_json(const MultiAgentModel& m, const SynthesisReport& rep, const ReportOptions& opts = {});

std::string comparison_to_json(const Comparison& c);

} // namespace scalsup
