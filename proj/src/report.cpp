#include "liesym/report.hpp"

#include "json.hpp"

#include <iomanip>
#include <sstream>

namespace liesym {

ReportRecord& RunReport::add(std::string check, bool passed, std::string detail)
{
    records.push_back({std::move(check), passed, std::move(detail), {}, std::nullopt});
    return records.back();
}

bool RunReport::passed() const
{
    if (error)
        return false;
    for (const auto& r : records)
        if (!r.passed)
            return false;
    return true;
}

int RunReport::exit_code() const
{
    if (error)
        return 2;
    return passed() ? 0 : 1;
}

std::string RunReport::to_text(bool timing) const
{
    std::ostringstream out;
    out << command;
    if (!input.empty())
        out << " " << input;
    out << "\n";
    for (const auto& r : records) {
        out << (r.passed ? "PASS  " : "FAIL  ") << r.check;
        if (!r.detail.empty())
            out << "  " << r.detail;
        if (timing && r.millis)
            out << "  [" << std::fixed << std::setprecision(1) << *r.millis << " ms]";
        out << "\n";
        for (const auto& [k, v] : r.data) {
            std::istringstream lines(v);
            std::string line;
            bool first = true;
            while (std::getline(lines, line)) {
                if (first)
                    out << "      " << k << ": " << line << "\n";
                else
                    out << "      " << std::string(k.size() + 2, ' ') << line << "\n";
                first = false;
            }
            if (first)
                out << "      " << k << ":\n";
        }
    }
    if (error)
        out << "ERROR " << *error << "\n";
    out << (passed() ? "result: pass" : error ? "result: error" : "result: fail") << " (exit " << exit_code()
        << ")\n";
    return out.str();
}

std::string RunReport::to_json(bool timing) const
{
    nlohmann::ordered_json j;
    j["format"] = 1;
    j["command"] = command;
    j["input"] = input;
    j["passed"] = passed();
    j["exit_code"] = exit_code();
    if (error)
        j["error"] = *error;
    j["records"] = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json rec;
        rec["check"] = r.check;
        rec["passed"] = r.passed;
        rec["detail"] = r.detail;
        rec["data"] = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.data)
            rec["data"][k] = v;
        if (timing && r.millis)
            rec["ms"] = *r.millis;
        j["records"].push_back(std::move(rec));
    }
    return j.dump(2) + "\n";
}

}  // namespace liesym
