#ifndef SUPERSYM_REPORT_HPP
#define SUPERSYM_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace supersym {

// Outcome of a verification routine. Serialises as
// {"check": ..., "params": {...}, "pass": bool, "first_failure": ...}.
struct Report {
    std::string check;
    nlohmann::json params = nlohmann::json::object();
    bool pass = true;
    std::optional<std::string> first_failure;
    // Informational counters; emitted under "notes" when non-empty.
    nlohmann::json notes = nlohmann::json::object();

    // Records the first failure only; later failures are dropped.
    void fail(std::string what);
    void merge(const Report& sub);

    nlohmann::json to_json() const;
};

// Several reports folded into one.
Report combine(std::string check, nlohmann::json params, const std::vector<Report>& parts);

} // namespace supersym

#endif
