#pragma once

#include "liesym/io.hpp"
#include "liesym/report.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liesym {

/// Bad input or unmet precondition; reported with exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using NamedText = std::pair<std::string, std::string>;  // (file name, contents)

/// The classification corpus compiled into the binary, sorted by file name.
std::vector<NamedText> bundled_corpus();
/// All *.alg files of a directory, sorted by file name.
std::vector<NamedText> read_corpus_dir(const std::string& dir);

/// Parses `name=value` items; values are rationals.
Assignment parse_assignments(const std::vector<std::string>& items);

/// Substitutes the assignment, enforcing declared exclusions and completeness.
LieAlgebra numeric_algebra(const AlgebraFile& file, const Assignment& values);

RunReport run_check(const AlgebraFile& file, const Assignment& values);
RunReport run_corpus(const std::vector<NamedText>& files, unsigned jobs = 0);

enum class SuspendVariant { contact, symplectic, two_form };
struct SuspendOptions {
    SuspendVariant variant = SuspendVariant::contact;
    std::optional<std::string> alpha;       // covector, e.g. "-e1*"
    std::optional<std::string> omega;       // 2-form
    std::optional<std::string> derivation;  // rows separated by ';'
};
RunReport run_suspend(const AlgebraFile& file, const SuspendOptions& options, const Assignment& values);

RunReport run_estructure(const AlgebraFile& file, const Assignment& values);
RunReport run_recover(const AlgebraFile& file, const Chart& chart, const Assignment& values);

/// Command-line entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace liesym
