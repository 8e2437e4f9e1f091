#ifndef HDIFF_REPORT_HPP
#define HDIFF_REPORT_HPP

#include <string>
#include <vector>

namespace hdiff {

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string witness;  // first failing index/word, empty when passing
    std::string value;    // optional payload (computed element, scalar, ...)
};

struct Report {
    std::string command;
    std::vector<CheckResult> checks;

    void add(const std::string& id, bool pass, const std::string& witness = "",
             const std::string& value = "") {
        checks.push_back({id, pass, witness, value});
    }
    bool all_pass() const {
        for (auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    int exit_code() const { return all_pass() ? 0 : 1; }
    std::string json() const;
    std::string text() const;
};

}  // namespace hdiff

#endif
