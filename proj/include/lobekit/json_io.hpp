#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "lobekit/builder.hpp"
#include "lobekit/decomposition.hpp"
#include "lobekit/symmetry.hpp"
#include "lobekit/transitivity.hpp"

namespace lobekit {

// Field names of every document below are listed in README.md.

/// Parses a build spec document. Throws InputError for malformed JSON,
/// unknown keys, wrong types and infinite or fractional multiplicities;
/// semantic checks are left to validate_spec.
RawBuildSpec parse_build_spec(std::string_view text);

/// Reads, parses and validates a spec file.
BuildSpec load_build_spec(const std::string& path);

nlohmann::json permutation_json(const Permutation& p);
nlohmann::json generators_json(const GeneratorSet& gens);
nlohmann::json orbits_json(const OrbitPartition& orbits);
nlohmann::json decomposition_json(const LobeDecomposition& d);
nlohmann::json classification_json(const ClassificationReport& r);
nlohmann::json limit_json(const LimitReport& r, const BuildSpec& spec);
nlohmann::json build_sidecar_json(const BuildResult& result, const BuildSpec& spec);

}  // namespace lobekit
