#include "medsched/io.hpp"

#include <fstream>

namespace medsched {

using nlohmann::json;

std::string format_instant(Minutes t) {
    return std::to_string(t / kMinutesPerDay) + "T" + std::to_string(t % kMinutesPerDay);
}

Minutes parse_instant(const std::string& text) {
    const auto pos = text.find('T');
    if (pos == std::string::npos || pos == 0 || pos + 1 == text.size())
        throw IoError("malformed instant: " + text);
    try {
        return at(std::stoi(text.substr(0, pos)), std::stoll(text.substr(pos + 1)));
    } catch (const std::logic_error&) {
        throw IoError("malformed instant: " + text);
    }
}

json to_json(const TimeSlot& slot) {
    return {{"id", slot.id.value},
            {"exam", slot.exam.value},
            {"facility", slot.facility.value},
            {"room", slot.room.value},
            {"practitioner", slot.practitioner.value},
            {"start", format_instant(slot.start)},
            {"start_minute", slot.start},
            {"duration_minutes", slot.duration_minutes}};
}

TimeSlot slot_from_json(const json& j) {
    TimeSlot slot;
    slot.id = SlotId{j.at("id").get<std::int32_t>()};
    slot.exam = ExamId{j.at("exam").get<std::int32_t>()};
    slot.facility = FacilityId{j.at("facility").get<std::int32_t>()};
    slot.room = RoomId{j.at("room").get<std::int32_t>()};
    slot.practitioner = PractitionerId{j.at("practitioner").get<std::int32_t>()};
    slot.start = j.contains("start_minute") ? j.at("start_minute").get<Minutes>()
                                            : parse_instant(j.at("start").get<std::string>());
    slot.duration_minutes = j.at("duration_minutes").get<Minutes>();
    return slot;
}

namespace {

json config_to_json(const WorldConfig& c) {
    return {{"seed", c.seed},
            {"horizon_days", c.horizon_days},
            {"facilities", c.facilities},
            {"rooms_per_facility", c.rooms_per_facility},
            {"day_open", c.day_open},
            {"day_close", c.day_close},
            {"practitioner_pool", c.practitioner_pool},
            {"rule_count", c.rule_count},
            {"specialties", c.specialties},
            {"exams_per_specialty", c.exams_per_specialty},
            {"duration_choices", c.duration_choices},
            {"gap_choices", c.gap_choices}};
}

WorldConfig config_from_json(const json& j) {
    WorldConfig c;
    c.seed = j.value("seed", c.seed);
    c.horizon_days = j.value("horizon_days", c.horizon_days);
    c.facilities = j.value("facilities", c.facilities);
    c.rooms_per_facility = j.value("rooms_per_facility", c.rooms_per_facility);
    c.day_open = j.value("day_open", c.day_open);
    c.day_close = j.value("day_close", c.day_close);
    c.practitioner_pool = j.value("practitioner_pool", c.practitioner_pool);
    c.rule_count = j.value("rule_count", c.rule_count);
    c.specialties = j.value("specialties", c.specialties);
    c.exams_per_specialty = j.value("exams_per_specialty", c.exams_per_specialty);
    c.duration_choices = j.value("duration_choices", c.duration_choices);
    c.gap_choices = j.value("gap_choices", c.gap_choices);
    return c;
}

}  // namespace

json to_json(const World& world) {
    json exams = json::array();
    for (const auto& e : world.catalog)
        exams.push_back({{"id", e.id.value}, {"name", e.name}, {"specialty", to_string(e.specialty)}});
    json rules = json::array();
    for (const auto& r : world.rules)
        rules.push_back({{"first", r.first.value},
                         {"second", r.second.value},
                         {"logic", to_string(r.logic)},
                         {"gap_minutes", r.gap_minutes}});
    json facilities = json::array();
    for (const auto& f : world.facilities) {
        json rooms = json::array();
        for (auto room : f.rooms) rooms.push_back(room.value);
        facilities.push_back({{"id", f.id.value}, {"name", f.name}, {"rooms", rooms}});
    }
    json slots = json::array();
    for (const auto& s : world.slots) slots.push_back(to_json(s));
    return {{"config", config_to_json(world.config)},
            {"exams", exams},
            {"rules", rules},
            {"facilities", facilities},
            {"slots", slots}};
}

World world_from_json(const json& j) {
    try {
        World world;
        if (j.contains("config")) world.config = config_from_json(j.at("config"));
        for (const auto& e : j.at("exams"))
            world.catalog.push_back({ExamId{e.at("id").get<std::int32_t>()}, e.at("name").get<std::string>(),
                                     parse_specialty(e.at("specialty").get<std::string>())});
        for (const auto& r : j.at("rules")) {
            IncompatibilityRule rule{ExamId{r.at("first").get<std::int32_t>()},
                                     ExamId{r.at("second").get<std::int32_t>()},
                                     parse_rule_logic(r.at("logic").get<std::string>()),
                                     r.at("gap_minutes").get<Minutes>()};
            if (rule.first == rule.second) throw IoError("rule pairs an exam with itself");
            world.rules.push_back(rule);
        }
        for (const auto& f : j.at("facilities")) {
            Facility facility{FacilityId{f.at("id").get<std::int32_t>()}, f.at("name").get<std::string>(), {}};
            for (const auto& room : f.at("rooms")) facility.rooms.push_back(RoomId{room.get<std::int32_t>()});
            world.facilities.push_back(std::move(facility));
        }
        for (const auto& s : j.at("slots")) world.slots.push_back(slot_from_json(s));
        return world;
    } catch (const json::exception& e) {
        throw IoError(std::string("malformed world document: ") + e.what());
    }
}

json to_json(const ScheduleRequest& request) {
    json acts = json::array();
    for (auto a : request.acts) acts.push_back(a.value);
    json j{{"acts", acts}, {"start_date", request.start_date}};
    if (request.preferred_facilities) {
        json f = json::array();
        for (auto id : *request.preferred_facilities) f.push_back(id.value);
        j["preferred_facilities"] = f;
    }
    if (request.preferred_practitioners) {
        json p = json::array();
        for (auto id : *request.preferred_practitioners) p.push_back(id.value);
        j["preferred_practitioners"] = p;
    }
    return j;
}

ScheduleRequest request_from_json(const json& j) {
    try {
        ScheduleRequest request;
        for (const auto& a : j.at("acts")) request.acts.push_back(ExamId{a.get<std::int32_t>()});
        request.start_date = j.value("start_date", 0);
        if (j.contains("preferred_facilities")) {
            request.preferred_facilities.emplace();
            for (const auto& f : j.at("preferred_facilities"))
                request.preferred_facilities->insert(FacilityId{f.get<std::int32_t>()});
        }
        if (j.contains("preferred_practitioners")) {
            request.preferred_practitioners.emplace();
            for (const auto& p : j.at("preferred_practitioners"))
                request.preferred_practitioners->insert(PractitionerId{p.get<std::int32_t>()});
        }
        request.validate();
        return request;
    } catch (const json::exception& e) {
        throw IoError(std::string("malformed request document: ") + e.what());
    }
}

json to_json(const Schedule& schedule) {
    json out = json::array();
    for (const auto& a : schedule.assignments) out.push_back({{"act", a.act}, {"slot", to_json(a.slot)}});
    return out;
}

json to_json(const PenaltyBreakdown& p) {
    return {{"missing_slot", p.missing_slot}, {"hard_violations", p.hard_violations},
            {"trips", p.trips},               {"travel_gap", p.travel_gap},
            {"wait", p.wait},                 {"lead", p.lead},
            {"total", p.total()}};
}

json to_json(const SolutionMetrics& m) {
    return {{"itr", m.itr ? json(*m.itr) : json(nullptr)},
            {"trips", m.trips},
            {"overlap_ok", m.flags.overlap_ok},
            {"compatibility_ok", m.flags.compatibility_ok},
            {"travel_ok", m.flags.travel_ok},
            {"fully_scheduled", m.flags.fully_scheduled}};
}

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw IoError(path.string() + ": " + e.what());
    }
}

void write_json(const std::filesystem::path& path, const json& j) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) throw IoError("cannot create " + path.parent_path().string() + ": " + ec.message());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << j.dump(2) << '\n';
    if (!out) throw IoError("write failed: " + path.string());
}

World load_world(const std::filesystem::path& path) {
    const auto file = std::filesystem::is_directory(path) ? path / "world.json" : path;
    return world_from_json(read_json(file));
}

ScheduleRequest load_request(const std::filesystem::path& path) {
    return request_from_json(read_json(path));
}

}  // namespace medsched
