#pragma once

#include "liesym/monge.hpp"
#include "liesym/structures.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace liesym {

class ParseError : public std::runtime_error {
public:
    ParseError(std::string source, int line, int column, const std::string& message);
    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    int line_, column_;
    std::string message_;
};

/// Polynomial in the given variables: juxtaposition or `*` for products,
/// `/` by constants, `^` for integer powers, parentheses, rationals `p/q`.
Poly parse_polynomial(const std::string& text, const std::vector<std::string>& variables);

/// Constant-coefficient or parametric form in `e1*^e2*` syntax (the star is
/// optional, `e_1` is accepted). All terms must share one degree.
KForm parse_form(const std::string& text, int dim, const std::vector<std::string>& params = {});

/// Square matrix as rows separated by ';', entries by whitespace or ','.
Matrix parse_matrix(const std::string& text, std::size_t n);

enum class Dialect { brackets, maurer_cartan };

struct AlgebraFile {
    std::string name;
    int dim = 0;
    std::vector<ParameterDecl> params;
    Dialect dialect = Dialect::brackets;
    StructureConstants constants{0};
    std::optional<std::array<int, 4>> labels;  // basis indices of P1, P2, Q1, Q2
    CorpusClaims claims;
    std::vector<Assignment> samples;
    std::string source;

    std::vector<std::string> param_names() const;
    bool operator==(const AlgebraFile& o) const;
};

/// Line-oriented `.alg` format. Throws ParseError with the position of the
/// offending token.
AlgebraFile parse_algebra(const std::string& text, const std::string& source_name = "<input>");

/// Canonical text: header, metadata, one line per nonzero bracket (or per
/// covector in the Maurer-Cartan dialect), labels, claims, samples.
std::string print_algebra(const AlgebraFile& file);

LieAlgebra to_algebra(const AlgebraFile& file, Validation validation = Validation::defer);
CorpusEntry to_corpus_entry(const AlgebraFile& file);

/// `.map` format: `y = <poly in x>` lines, then `inverse:` and `x = <poly in y>` lines.
Chart parse_chart(const std::string& text, const std::string& source_name = "<input>");
std::string print_chart(const Chart& chart);

std::string read_file(const std::string& path);

}  // namespace liesym
