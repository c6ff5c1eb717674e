#include "dupcat/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace dupcat {

bool Report::ok() const { return failures() == 0; }

std::size_t Report::failures() const
{
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

std::string Report::to_text() const
{
    std::ostringstream out;
    if (!title.empty())
        out << title << '\n';
    for (const auto& c : checks) {
        out << (c.pass ? "PASS  " : "FAIL  ") << c.name;
        if (!c.witness.empty())
            out << "  [" << c.witness << "]";
        out << '\n';
    }
    out << checks.size() - failures() << '/' << checks.size() << " checks passed\n";
    return out.str();
}

std::string Report::to_json() const
{
    nlohmann::json j;
    j["title"] = title;
    j["ok"] = ok();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks)
        j["checks"].push_back({{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"witness", c.witness}});
    return j.dump(2);
}

}  // namespace dupcat
