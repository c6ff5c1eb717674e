#pragma once

#include <string>
#include <vector>

namespace dupcat {

/// One named verification with its outcome and, on failure, a witness.
struct Check {
    std::string name;
    bool pass = false;
    std::string witness;
};

struct Report {
    std::string title;
    std::vector<Check> checks;

    void add(Check c) { checks.push_back(std::move(c)); }
    void add(std::string name, bool pass, std::string witness = {})
    {
        checks.push_back({std::move(name), pass, std::move(witness)});
    }
    void append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
    bool ok() const;
    std::size_t failures() const;

    std::string to_text() const;
    std::string to_json() const;
};

}  // namespace dupcat
