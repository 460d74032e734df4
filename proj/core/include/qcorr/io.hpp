#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "qcorr/channel.hpp"
#include "qcorr/discord.hpp"
#include "qcorr/harness.hpp"
#include "qcorr/recovery.hpp"

namespace qcorr {

using Json = nlohmann::json;

// Complex scalars are serialized as [re, im]; matrices as row-major arrays
// of rows of such pairs.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j);

/// {"dim_a": .., "dim_b": .., "matrix": ..} or a pure state
/// {"dim_a": .., "dim_b": .., "amplitudes": ..}.
Json state_to_json(const BipartiteState& s);
BipartiteState state_from_json(const Json& j);

/// {"dim_in": .., "dim_out": .., "kraus": [..]} or a zoo spec such as
/// {"zoo": "isotropic", "p": 0.5, "gamma": {"unitary": ..}, "d": 2}.
Json channel_to_json(const KrausChannel& ch);
KrausChannel channel_from_json(const Json& j);

/// Zoo spec from a compact CLI string, e.g.
/// "zoo:depolarizing,p=0.5,d=2", "zoo:unitary,name=hadamard",
/// "zoo:decohere,d=2", "zoo:isotropic,p=0.3,d=2",
/// "zoo:isotropic,p=0.2,gamma=transpose,d=2", "zoo:identity,d=2".
KrausChannel channel_from_zoo_spec(const std::string& spec);

Json optimizer_config_to_json(const OptimizerConfig& cfg);
OptimizerConfig optimizer_config_from_json(const Json& j);

Json discord_result_to_json(const DiscordResult& r, const OptimizerConfig& cfg);
Json invariance_report_to_json(const InvarianceReport& r);
Json suite_summary_to_json(const SuiteSummary& s);
Json sufficiency_report_to_json(const SufficiencyReport& r);
Json channel_verdict_to_json(const ChannelVerdict& v);

std::string suite_summary_to_csv(const SuiteSummary& s);

BipartiteState load_state(const std::string& path);
KrausChannel load_channel(const std::string& path_or_zoo);
void save_state(const std::string& path, const BipartiteState& s);

}  // namespace qcorr
