#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace shortc2 {

// Runs the named invariant suite ("all" or one of core, greens, boettcher,
// modelspace, affine, topology, biholo, io) and returns a structured report:
// {schema_version, suite, seed, pass, checks: [{name, pass, detail, ...}]}.
// Sampling is deterministic in the seed.
nlohmann::json run_verify(const std::string& suite, std::uint64_t seed = 0);

} // namespace shortc2
