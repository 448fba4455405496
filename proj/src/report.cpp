#include "supersym/report.hpp"

namespace supersym {

void Report::fail(std::string what)
{
    if (pass) {
        first_failure = std::move(what);
    }
    pass = false;
}

void Report::merge(const Report& sub)
{
    if (!sub.pass) {
        fail(sub.check + ": " + sub.first_failure.value_or("failed"));
    }
}

nlohmann::json Report::to_json() const
{
    nlohmann::json j;
    j["check"] = check;
    j["params"] = params;
    j["pass"] = pass;
    if (first_failure) {
        j["first_failure"] = *first_failure;
    } else {
        j["first_failure"] = nullptr;
    }
    if (!notes.empty()) {
        j["notes"] = notes;
    }
    return j;
}

Report combine(std::string check, nlohmann::json params, const std::vector<Report>& parts)
{
    Report out;
    out.check = std::move(check);
    out.params = std::move(params);
    nlohmann::json subs = nlohmann::json::array();
    for (const auto& r : parts) {
        out.merge(r);
        subs.push_back({{"check", r.check}, {"pass", r.pass}});
    }
    out.notes["parts"] = std::move(subs);
    return out;
}

} // namespace supersym
