#pragma once

#include <json.hpp>

#include "qlap/automorphism.hpp"
#include "qlap/bounds.hpp"
#include "qlap/partition.hpp"
#include "qlap/quantum_equiv.hpp"
#include "qlap/spectral.hpp"

// JSON mapping for report types. Rationals serialize as
// {"num": .., "den": .., "value": <double>}; "value" is ignored on input.
namespace qlap {

void to_json(nlohmann::json& j, const Path& p);
void from_json(const nlohmann::json& j, Path& p);

void to_json(nlohmann::json& j, const SpectralResult& s);
void from_json(const nlohmann::json& j, SpectralResult& s);

void to_json(nlohmann::json& j, const Partition& p);
void from_json(const nlohmann::json& j, Partition& p);

void to_json(nlohmann::json& j, const PartitionBracket& b);
void from_json(const nlohmann::json& j, PartitionBracket& b);

void to_json(nlohmann::json& j, const RationalInterval& r);
void from_json(const nlohmann::json& j, RationalInterval& r);

void to_json(nlohmann::json& j, const EdgePathCount& c);
void from_json(const nlohmann::json& j, EdgePathCount& c);
void to_json(nlohmann::json& j, const EdgeCounts& c);
void from_json(const nlohmann::json& j, EdgeCounts& c);
void to_json(nlohmann::json& j, const ConstancyReport& c);
void from_json(const nlohmann::json& j, ConstancyReport& c);
void to_json(nlohmann::json& j, const InequalityRow& r);
void from_json(const nlohmann::json& j, InequalityRow& r);
void to_json(nlohmann::json& j, const InequalityReport& r);
void from_json(const nlohmann::json& j, InequalityReport& r);
void to_json(nlohmann::json& j, const SideAnalysis& s);
void from_json(const nlohmann::json& j, SideAnalysis& s);
void to_json(nlohmann::json& j, const IndexEntry& e);
void from_json(const nlohmann::json& j, IndexEntry& e);
void to_json(nlohmann::json& j, const BoundReport& r);
void from_json(const nlohmann::json& j, BoundReport& r);

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

}  // namespace qlap
