#pragma once

// JSON persistence for worlds, requests and solutions.
//
// Instants are written twice: as "<day>T<minute-of-day>" (e.g. "3T540" is
// day 3, 09:00) and as absolute minutes since day 0, 00:00.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "medsched/datagen.hpp"
#include "medsched/fitness.hpp"
#include "medsched/metrics.hpp"

namespace medsched {

class IoError : public Error {
public:
    using Error::Error;
};

std::string format_instant(Minutes t);
Minutes parse_instant(const std::string& text);

nlohmann::json to_json(const TimeSlot& slot);
TimeSlot slot_from_json(const nlohmann::json& j);

nlohmann::json to_json(const World& world);
World world_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ScheduleRequest& request);
ScheduleRequest request_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Schedule& schedule);
nlohmann::json to_json(const PenaltyBreakdown& p);
nlohmann::json to_json(const SolutionMetrics& m);

/// Accepts a file or a directory containing world.json.
World load_world(const std::filesystem::path& path);
ScheduleRequest load_request(const std::filesystem::path& path);

nlohmann::json read_json(const std::filesystem::path& path);
/// Pretty-printed, LF-terminated. Creates parent directories.
void write_json(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace medsched
