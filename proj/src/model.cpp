#include "medsched/model.hpp"

#include <algorithm>

namespace medsched {

std::string_view to_string(Specialty s) {
    switch (s) {
    case Specialty::Radiology: return "Radiology";
    case Specialty::Cardiology: return "Cardiology";
    case Specialty::Dermatology: return "Dermatology";
    case Specialty::GeneralPractice: return "GeneralPractice";
    case Specialty::Gastroenterology: return "Gastroenterology";
    }
    return "?";
}

Specialty parse_specialty(std::string_view text) {
    for (auto s : kAllSpecialties) {
        if (to_string(s) == text) return s;
    }
    throw Error("unknown specialty: " + std::string(text));
}

std::string_view to_string(RuleLogic logic) {
    switch (logic) {
    case RuleLogic::Before: return "before";
    case RuleLogic::After: return "after";
    case RuleLogic::Both: return "both";
    }
    return "?";
}

RuleLogic parse_rule_logic(std::string_view text) {
    if (text == "before") return RuleLogic::Before;
    if (text == "after") return RuleLogic::After;
    if (text == "both") return RuleLogic::Both;
    throw Error("unknown rule logic: " + std::string(text));
}

void ScheduleRequest::validate() const {
    if (acts.empty()) throw Error("request has no acts");
    if (start_date < 0) throw Error("request start_date must be >= 0");
}

std::vector<Assignment> Schedule::chronological() const {
    auto sorted = assignments;
    std::sort(sorted.begin(), sorted.end(), [](const Assignment& a, const Assignment& b) {
        if (a.slot.start != b.slot.start) return a.slot.start < b.slot.start;
        return a.act < b.act;
    });
    return sorted;
}

Minutes gap_minutes(const TimeSlot& earlier, const TimeSlot& later) {
    const Minutes gap = signed_gap(earlier, later);
    if (gap < 0) throw Error("gap_minutes: slots are not in chronological order");
    return gap;
}

}  // namespace medsched
