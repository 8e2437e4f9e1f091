#include "hdiff/report.hpp"

#include <json.hpp>
#include <sstream>

namespace hdiff {

std::string Report::json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["checks"] = nlohmann::ordered_json::array();
    for (auto& c : checks) {
        nlohmann::ordered_json jc;
        jc["check_id"] = c.id;
        jc["pass"] = c.pass;
        if (!c.witness.empty()) jc["witness"] = c.witness;
        if (!c.value.empty()) jc["value"] = c.value;
        j["checks"].push_back(jc);
    }
    j["exit"] = exit_code();
    return j.dump(2);
}

std::string Report::text() const {
    std::ostringstream os;
    for (auto& c : checks) {
        os << (c.pass ? "[pass] " : "[FAIL] ") << c.id;
        if (!c.value.empty()) os << " = " << c.value;
        if (!c.witness.empty()) os << "  (witness: " << c.witness << ")";
        os << "\n";
    }
    return os.str();
}

}  // namespace hdiff
