#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace liesym {

struct ReportRecord {
    std::string check;
    bool passed = true;
    std::string detail;
    /// Witnesses and values, serialized in the input coefficient syntax.
    std::vector<std::pair<std::string, std::string>> data;
    std::optional<double> millis;
};

struct RunReport {
    std::string command;
    std::string input;
    std::vector<ReportRecord> records;
    std::optional<std::string> error;  // input or parse error (exit code 2)

    ReportRecord& add(std::string check, bool passed, std::string detail = {});
    bool passed() const;
    /// 0 all records pass, 1 some record fails, 2 input error.
    int exit_code() const;

    std::string to_text(bool timing = false) const;
    /// Stable schema: {format, command, input, passed, exit_code, [error], records: [{check, passed, detail, data, [ms]}]}.
    std::string to_json(bool timing = false) const;
};

}  // namespace liesym
