#include "liesym/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

namespace liesym {

ParseError::ParseError(std::string source, int line, int column, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line), column_(column), message_(message)
{
}

namespace {

struct Token {
    enum Kind { number, ident, op, end } kind = end;
    std::string text;
    int column = 0;
    bool space_before = false;
};

std::vector<Token> tokenize(const std::string& line, const std::string& source, int line_no)
{
    std::vector<Token> out;
    std::size_t i = 0;
    bool space = true;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#')
            break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            space = true;
            ++i;
            continue;
        }
        Token t;
        t.column = static_cast<int>(i) + 1;
        t.space_before = space;
        space = false;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j])))
                ++j;
            if (j + 1 < line.size() && line[j] == '.' && std::isdigit(static_cast<unsigned char>(line[j + 1]))) {
                ++j;
                while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j])))
                    ++j;
            }
            t.kind = Token::number;
            t.text = line.substr(i, j - i);
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_'))
                ++j;
            t.kind = Token::ident;
            t.text = line.substr(i, j - i);
            i = j;
        } else if (c == '!' && i + 1 < line.size() && line[i + 1] == '=') {
            t.kind = Token::op;
            t.text = "!=";
            i += 2;
        } else if (std::string("[](),=+-*/^:;").find(c) != std::string::npos) {
            t.kind = Token::op;
            t.text = std::string(1, c);
            ++i;
        } else {
            throw ParseError(source, line_no, static_cast<int>(i) + 1, std::string("unexpected character '") + c + "'");
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.column = static_cast<int>(line.size()) + 1;
    out.push_back(end);
    return out;
}

Scalar parse_number(const std::string& text)
{
    auto dot = text.find('.');
    if (dot == std::string::npos)
        return Scalar(mpz_class(text));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    mpz_class den = 1;
    for (std::size_t k = dot + 1; k < text.size(); ++k)
        den *= 10;
    Scalar r(mpz_class(digits), den);
    r.canonicalize();
    return r;
}

// e3, e_3 -> 3; otherwise 0.
int basis_index(const std::string& ident)
{
    static const std::regex re("e_?([0-9]+)");
    std::smatch m;
    if (std::regex_match(ident, m, re))
        return std::stoi(m[1]);
    return 0;
}

// Value of an expression: words of basis indices (wedge order) with coefficients.
using Word = std::vector<int>;
using Value = std::map<Word, Poly>;

class ExprParser {
public:
    ExprParser(const std::vector<Token>& tokens, std::size_t pos, const std::string& source, int line,
               const std::set<std::string>& vars, int dim)
        : t_(tokens), pos_(pos), source_(source), line_(line), vars_(vars), dim_(dim)
    {
    }

    Value expression()
    {
        Value v;
        bool negative = false;
        if (peek_op("+") || peek_op("-"))
            negative = next().text == "-";
        v = term();
        if (negative)
            v = scale(v, Poly(-1));
        while (peek_op("+") || peek_op("-")) {
            bool minus = next().text == "-";
            Value rhs = term();
            for (const auto& [w, c] : rhs)
                add(v, w, minus ? -c : c);
        }
        return v;
    }

    std::size_t position() const { return pos_; }
    const Token& peek() const { return t_[pos_]; }

    [[noreturn]] void fail(const Token& t, const std::string& msg) const
    {
        throw ParseError(source_, line_, t.column, msg);
    }

private:
    const std::vector<Token>& t_;
    std::size_t pos_;
    const std::string& source_;
    int line_;
    const std::set<std::string>& vars_;
    int dim_;

    bool peek_op(const char* op) const { return t_[pos_].kind == Token::op && t_[pos_].text == op; }
    const Token& next() { return t_[pos_++]; }

    static void add(Value& v, const Word& w, const Poly& c)
    {
        Poly& slot = v[w];
        slot += c;
        if (slot.is_zero())
            v.erase(w);
    }

    static Value scale(const Value& v, const Poly& c)
    {
        Value out;
        for (const auto& [w, p] : v)
            add(out, w, p * c);
        return out;
    }

    bool starts_primary() const
    {
        const Token& t = peek();
        return t.kind == Token::number || t.kind == Token::ident || (t.kind == Token::op && t.text == "(");
    }

    Value multiply(const Value& a, const Value& b, const Token& at)
    {
        Value out;
        for (const auto& [wa, ca] : a)
            for (const auto& [wb, cb] : b) {
                if (!wa.empty() && !wb.empty())
                    fail(at, "product of basis elements; use ^ for the wedge product");
                Word w = wa.empty() ? wb : wa;
                add(out, w, ca * cb);
            }
        return out;
    }

    Value term()
    {
        Value v = power();
        while (true) {
            const Token& t = peek();
            if (peek_op("*")) {
                next();
                v = multiply(v, power(), t);
            } else if (peek_op("/")) {
                next();
                const Token& at = peek();
                Value d = power();
                if (d.size() != 1 || !d.begin()->first.empty() || !d.begin()->second.is_constant())
                    fail(at, "division only by nonzero constants");
                v = scale(v, Poly(1 / d.begin()->second.constant_value()));
            } else if (starts_primary()) {
                v = multiply(v, power(), t);
            } else {
                return v;
            }
        }
    }

    Value power()
    {
        Value v = primary();
        while (peek_op("^")) {
            const Token& caret = next();
            if (peek_op("*")) {  // e_3^* spelling of a covector
                next();
                continue;
            }
            bool has_basis = !v.empty() && !v.begin()->first.empty();
            if (has_basis) {
                Value rhs = primary();
                Value out;
                for (const auto& [wa, ca] : v)
                    for (const auto& [wb, cb] : rhs) {
                        if (wa.empty() || wb.empty())
                            fail(caret, "wedge needs basis elements on both sides");
                        Word w = wa;
                        w.insert(w.end(), wb.begin(), wb.end());
                        add(out, w, ca * cb);
                    }
                v = std::move(out);
            } else {
                const Token& e = next();
                if (e.kind != Token::number || e.text.find('.') != std::string::npos)
                    fail(e, "exponent must be a nonnegative integer");
                unsigned exp = static_cast<unsigned>(std::stoul(e.text));
                Value out;
                for (const auto& [w, c] : v)
                    out[w] = c;
                if (out.size() > 1)
                    fail(caret, "exponent applied to a basis combination");
                Poly base = out.empty() ? Poly() : out.begin()->second;
                v.clear();
                add(v, {}, base.pow(exp));
            }
        }
        return v;
    }

    Value primary()
    {
        const Token& t = next();
        Value v;
        if (t.kind == Token::number) {
            add(v, {}, Poly(parse_number(t.text)));
            return v;
        }
        if (t.kind == Token::op && t.text == "(") {
            v = expression();
            if (!peek_op(")"))
                fail(peek(), "expected ')'");
            next();
            return v;
        }
        if (t.kind == Token::ident) {
            if (int k = basis_index(t.text)) {
                if (dim_ == 0)
                    fail(t, "basis element '" + t.text + "' not allowed here");
                if (k > dim_)
                    fail(t, "index out of range: " + t.text + " in dimension " + std::to_string(dim_));
                if (peek_op("*") && !peek().space_before)
                    next();
                add(v, {k - 1}, Poly(1));
                return v;
            }
            if (vars_.count(t.text)) {
                add(v, {}, Poly::variable(t.text));
                return v;
            }
            fail(t, "unknown identifier '" + t.text + "'");
        }
        if (t.kind == Token::end)
            fail(t, "unexpected end of line");
        fail(t, "unexpected '" + t.text + "'");
    }
};

std::vector<std::string> split_lines(const std::string& text)
{
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

Poly require_scalar(const ExprParser& p, const Token& at, const Value& v)
{
    if (v.empty())
        return Poly();
    if (v.size() != 1 || !v.begin()->first.empty())
        p.fail(at, "expected a polynomial, found basis elements");
    return v.begin()->second;
}

KForm value_to_form(const ExprParser& p, const Token& at, const Value& v, int dim, int degree)
{
    KForm out(dim, degree);
    for (const auto& [w, c] : v) {
        if (static_cast<int>(w.size()) != degree)
            p.fail(at, "expected terms of degree " + std::to_string(degree));
        std::vector<int> sorted = w;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            continue;
        out += KForm::basis(dim, std::span<const int>(w)) * c;
    }
    return out;
}

const char* yes_no(bool b)
{
    return b ? "yes" : "no";
}

struct LineCursor {
    const std::vector<Token>& tokens;
    std::size_t pos = 0;
    const std::string& source;
    int line;

    const Token& peek() const { return tokens[pos]; }
    const Token& next() { return tokens[pos++]; }
    [[noreturn]] void fail(const Token& t, const std::string& msg) const { throw ParseError(source, line, t.column, msg); }
    bool at_op(const char* op) const { return peek().kind == Token::op && peek().text == op; }
    void expect_op(const char* op)
    {
        if (!at_op(op))
            fail(peek(), std::string("expected '") + op + "'");
        next();
    }
    void expect_end()
    {
        if (peek().kind != Token::end)
            fail(peek(), "unexpected '" + peek().text + "'");
    }
    int expect_int()
    {
        const Token& t = next();
        if (t.kind != Token::number || t.text.find('.') != std::string::npos)
            fail(t, "expected an integer");
        return std::stoi(t.text);
    }
    int expect_basis(int dim)
    {
        const Token& t = next();
        int k = t.kind == Token::ident ? basis_index(t.text) : 0;
        if (k == 0)
            fail(t, "expected a basis element like e1");
        if (k > dim)
            fail(t, "index out of range: " + t.text + " in dimension " + std::to_string(dim));
        if (at_op("*") && !peek().space_before)
            next();
        return k - 1;
    }
    bool expect_bool()
    {
        const Token& t = next();
        if (t.kind == Token::ident && (t.text == "yes" || t.text == "true"))
            return true;
        if (t.kind == Token::ident && (t.text == "no" || t.text == "false"))
            return false;
        fail(t, "expected yes or no");
    }
};

Scalar constant_expression(LineCursor& cur, const std::set<std::string>& no_vars)
{
    const Token& at = cur.peek();
    ExprParser p(cur.tokens, cur.pos, cur.source, cur.line, no_vars, 0);
    Value v = p.expression();
    cur.pos = p.position();
    Poly s = require_scalar(p, at, v);
    if (!s.is_constant() && !s.is_zero())
        cur.fail(at, "expected a rational constant");
    return s.constant_term();
}

}  // namespace

Poly parse_polynomial(const std::string& text, const std::vector<std::string>& variables)
{
    std::set<std::string> vars(variables.begin(), variables.end());
    auto tokens = tokenize(text, "<expression>", 1);
    ExprParser p(tokens, 0, "<expression>", 1, vars, 0);
    const Token& at = p.peek();
    Value v = p.expression();
    if (p.peek().kind != Token::end)
        p.fail(p.peek(), "unexpected '" + p.peek().text + "'");
    return require_scalar(p, at, v);
}

KForm parse_form(const std::string& text, int dim, const std::vector<std::string>& params)
{
    std::set<std::string> vars(params.begin(), params.end());
    auto tokens = tokenize(text, "<form>", 1);
    ExprParser p(tokens, 0, "<form>", 1, vars, dim);
    const Token& at = p.peek();
    Value v = p.expression();
    if (p.peek().kind != Token::end)
        p.fail(p.peek(), "unexpected '" + p.peek().text + "'");
    int degree = v.empty() ? 0 : static_cast<int>(v.begin()->first.size());
    return value_to_form(p, at, v, dim, degree);
}

Matrix parse_matrix(const std::string& text, std::size_t n)
{
    Matrix m(n, n);
    std::vector<std::string> rows;
    std::string row;
    std::istringstream in(text);
    while (std::getline(in, row, ';'))
        if (!trim(row).empty())
            rows.push_back(row);
    if (rows.size() != n)
        throw std::invalid_argument("matrix needs " + std::to_string(n) + " rows separated by ';'");
    for (std::size_t r = 0; r < n; ++r) {
        std::string cleaned = rows[r];
        std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
        std::istringstream entries(cleaned);
        std::string entry;
        std::size_t c = 0;
        while (entries >> entry) {
            if (c >= n)
                throw std::invalid_argument("matrix row " + std::to_string(r + 1) + " has too many entries");
            Poly v = parse_polynomial(entry, {});
            if (!v.is_zero() && !v.is_constant())
                throw std::invalid_argument("matrix entries must be rational");
            m(r, c++) = v.constant_term();
        }
        if (c != n)
            throw std::invalid_argument("matrix row " + std::to_string(r + 1) + " has " + std::to_string(c) +
                                        " entries, expected " + std::to_string(n));
    }
    return m;
}

std::vector<std::string> AlgebraFile::param_names() const
{
    std::vector<std::string> out;
    for (const auto& p : params)
        out.push_back(p.name);
    return out;
}

bool AlgebraFile::operator==(const AlgebraFile& o) const
{
    if (name != o.name || dim != o.dim || dialect != o.dialect || !(constants == o.constants) ||
        labels != o.labels || samples != o.samples || source != o.source || params.size() != o.params.size())
        return false;
    for (std::size_t i = 0; i < params.size(); ++i)
        if (params[i].name != o.params[i].name || params[i].excluded != o.params[i].excluded)
            return false;
    const auto& a = claims;
    const auto& b = o.claims;
    return a.derived_dim == b.derived_dim && a.omega == b.omega && a.omega_exact == b.omega_exact &&
           a.exact_symplectic == b.exact_symplectic && a.symplectic == b.symplectic && a.contact == b.contact &&
           a.unimodular == b.unimodular && a.cohomology == b.cohomology;
}

AlgebraFile parse_algebra(const std::string& text, const std::string& source_name)
{
    AlgebraFile file;
    std::set<std::string> params;
    std::set<std::pair<int, int>> brackets_seen;
    std::set<int> mc_seen;
    bool have_body = false;
    bool have_dim = false;
    auto lines = split_lines(text);

    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        const int line_no = static_cast<int>(ln) + 1;
        auto tokens = tokenize(lines[ln], source_name, line_no);
        LineCursor cur{tokens, 0, source_name, line_no};
        const Token& first = cur.peek();
        if (first.kind == Token::end)
            continue;
        auto need_dim = [&] {
            if (!have_dim)
                cur.fail(first, "'dim' must come before this line");
        };
        auto rest_of_line = [&] {
            const Token& t = cur.peek();
            std::string raw = t.kind == Token::end ? "" : lines[ln].substr(t.column - 1);
            auto hash = raw.find('#');
            return trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        };

        if (first.kind == Token::op && first.text == "[") {
            need_dim();
            if (have_body && file.dialect != Dialect::brackets)
                cur.fail(first, "bracket line in a Maurer-Cartan file; the two dialects cannot be mixed");
            file.dialect = Dialect::brackets;
            have_body = true;
            cur.next();
            int i = cur.expect_basis(file.dim);
            cur.expect_op(",");
            int j = cur.expect_basis(file.dim);
            cur.expect_op("]");
            cur.expect_op("=");
            if (i == j)
                cur.fail(first, "[e_i, e_i] is always zero");
            auto key = std::minmax(i, j);
            if (!brackets_seen.insert(key).second)
                cur.fail(first, "bracket [e" + std::to_string(key.first + 1) + ", e" +
                                    std::to_string(key.second + 1) + "] defined twice");
            const Token& at = cur.peek();
            ExprParser p(tokens, cur.pos, source_name, line_no, params, file.dim);
            Value v = p.expression();
            cur.pos = p.position();
            cur.expect_end();
            KForm rhs = value_to_form(p, at, v, file.dim, 1);
            for (const auto& [idx, c] : rhs.terms())
                file.constants.add(i, j, indices_of(idx)[0], c);
            continue;
        }

        if (first.kind != Token::ident)
            cur.fail(first, "unexpected '" + first.text + "'");
        const std::string& kw = first.text;

        bool mc_line = kw == "d" || (kw.size() > 1 && kw[0] == 'd' && basis_index(kw.substr(1)) > 0);
        if (mc_line) {
            need_dim();
            if (have_body && file.dialect != Dialect::maurer_cartan)
                cur.fail(first, "Maurer-Cartan line in a bracket file; the two dialects cannot be mixed");
            file.dialect = Dialect::maurer_cartan;
            have_body = true;
            int k;
            if (kw == "d") {
                cur.next();
                k = cur.expect_basis(file.dim);
            } else {
                k = basis_index(kw.substr(1));
                if (k > file.dim)
                    cur.fail(first, "index out of range: " + kw.substr(1) + " in dimension " + std::to_string(file.dim));
                --k;
                cur.next();
                if (cur.at_op("*") && !cur.peek().space_before)
                    cur.next();
            }
            if (cur.at_op("^")) {  // d e_3^*
                cur.next();
                cur.expect_op("*");
            }
            cur.expect_op("=");
            if (!mc_seen.insert(k).second)
                cur.fail(first, "d e" + std::to_string(k + 1) + "* defined twice");
            const Token& at = cur.peek();
            ExprParser p(tokens, cur.pos, source_name, line_no, params, file.dim);
            Value v = p.expression();
            cur.pos = p.position();
            cur.expect_end();
            KForm rhs = value_to_form(p, at, v, file.dim, 2);
            for (const auto& [idx, c] : rhs.terms()) {
                auto ij = indices_of(idx);
                file.constants.add(ij[0], ij[1], k, -c);
            }
            continue;
        }

        cur.next();
        if (kw == "format") {
            const Token& t = cur.peek();
            if (cur.expect_int() != 1)
                cur.fail(t, "unsupported format version");
            cur.expect_end();
        } else if (kw == "name") {
            file.name = rest_of_line();
        } else if (kw == "source") {
            file.source = rest_of_line();
        } else if (kw == "dim") {
            if (have_dim)
                cur.fail(first, "duplicate 'dim'");
            const Token& t = cur.peek();
            int n = cur.expect_int();
            if (n < 1 || n > dimension_cap())
                cur.fail(t, "dimension must lie in [1, " + std::to_string(dimension_cap()) + "]");
            cur.expect_end();
            file.dim = n;
            file.constants = StructureConstants(n);
            have_dim = true;
        } else if (kw == "param") {
            if (have_body)
                cur.fail(first, "parameters must be declared before the structure equations");
            const Token& t = cur.next();
            if (t.kind != Token::ident || basis_index(t.text) > 0)
                cur.fail(t, "expected a parameter name");
            if (!params.insert(t.text).second)
                cur.fail(t, "parameter '" + t.text + "' declared twice");
            ParameterDecl decl{t.text, {}};
            if (cur.at_op("!=")) {
                cur.next();
                decl.excluded.push_back(constant_expression(cur, {}));
                while (cur.at_op(",")) {
                    cur.next();
                    decl.excluded.push_back(constant_expression(cur, {}));
                }
            }
            cur.expect_end();
            file.params.push_back(std::move(decl));
        } else if (kw == "labels") {
            need_dim();
            if (file.dim != 4)
                cur.fail(first, "labels need a 4-dimensional algebra");
            std::array<int, 4> l{};
            for (int& x : l)
                x = cur.expect_basis(file.dim);
            cur.expect_end();
            auto sorted = l;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                cur.fail(first, "labels must name four distinct basis elements");
            file.labels = l;
        } else if (kw == "claim") {
            need_dim();
            const Token& key = cur.next();
            if (key.kind != Token::ident)
                cur.fail(key, "expected a claim name");
            auto& c = file.claims;
            static const std::regex hk("H([0-9]+)");
            std::smatch m;
            if (key.text == "derived_dim") {
                c.derived_dim = cur.expect_int();
            } else if (key.text == "omega") {
                const Token& at = cur.peek();
                ExprParser p(tokens, cur.pos, source_name, line_no, params, file.dim);
                Value v = p.expression();
                cur.pos = p.position();
                c.omega = value_to_form(p, at, v, file.dim, 2);
            } else if (key.text == "omega_exact") {
                c.omega_exact = cur.expect_bool();
            } else if (key.text == "exact_symplectic") {
                c.exact_symplectic = cur.expect_bool();
            } else if (key.text == "symplectic") {
                c.symplectic = cur.expect_bool();
            } else if (key.text == "contact") {
                c.contact = cur.expect_bool();
            } else if (key.text == "unimodular") {
                c.unimodular = cur.expect_bool();
            } else if (std::regex_match(key.text, m, hk)) {
                int k = std::stoi(m[1]);
                if (k > file.dim)
                    cur.fail(key, "cohomology degree exceeds the dimension");
                c.cohomology[k] = cur.expect_int();
            } else {
                cur.fail(key, "unknown claim '" + key.text + "'");
            }
            cur.expect_end();
        } else if (kw == "sample") {
            Assignment a;
            do {
                if (!a.empty())
                    cur.next();
                const Token& t = cur.next();
                if (t.kind != Token::ident || !params.count(t.text))
                    cur.fail(t, "expected a declared parameter");
                cur.expect_op("=");
                a[t.text] = constant_expression(cur, {});
            } while (cur.at_op(","));
            cur.expect_end();
            file.samples.push_back(std::move(a));
        } else {
            cur.fail(first, "unexpected '" + kw + "'");
        }
    }
    if (!have_dim)
        throw ParseError(source_name, 1, 1, "missing 'dim' line");
    return file;
}

std::string print_algebra(const AlgebraFile& file)
{
    std::ostringstream out;
    out << "format 1\n";
    if (!file.name.empty())
        out << "name " << file.name << "\n";
    if (!file.source.empty())
        out << "source " << file.source << "\n";
    out << "dim " << file.dim << "\n";
    for (const auto& p : file.params) {
        out << "param " << p.name;
        for (std::size_t i = 0; i < p.excluded.size(); ++i)
            out << (i == 0 ? " != " : ", ") << scalar_to_string(p.excluded[i]);
        out << "\n";
    }
    const int n = file.dim;
    const auto& c = file.constants;
    auto e = [](int i) { return "e" + std::to_string(i + 1); };
    if (file.dialect == Dialect::brackets) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                std::vector<std::pair<Poly, std::string>> parts;
                for (int k = 0; k < n; ++k)
                    parts.emplace_back(c.get(i, j, k), e(k));
                std::string rhs = format_combination(parts);
                if (rhs != "0")
                    out << "[" << e(i) << ", " << e(j) << "] = " << rhs << "\n";
            }
    } else {
        for (int k = 0; k < n; ++k) {
            std::vector<std::pair<Poly, std::string>> parts;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    parts.emplace_back(-c.get(i, j, k), e(i) + "*^" + e(j) + "*");
            out << "d " << e(k) << "* = " << format_combination(parts) << "\n";
        }
    }
    if (file.labels) {
        out << "labels";
        for (int x : *file.labels)
            out << " " << e(x);
        out << "\n";
    }
    const auto& cl = file.claims;
    if (cl.derived_dim)
        out << "claim derived_dim " << *cl.derived_dim << "\n";
    if (cl.omega)
        out << "claim omega " << cl.omega->to_string() << "\n";
    if (cl.omega_exact)
        out << "claim omega_exact " << yes_no(*cl.omega_exact) << "\n";
    if (cl.symplectic)
        out << "claim symplectic " << yes_no(*cl.symplectic) << "\n";
    if (cl.exact_symplectic)
        out << "claim exact_symplectic " << yes_no(*cl.exact_symplectic) << "\n";
    if (cl.contact)
        out << "claim contact " << yes_no(*cl.contact) << "\n";
    if (cl.unimodular)
        out << "claim unimodular " << yes_no(*cl.unimodular) << "\n";
    for (const auto& [k, d] : cl.cohomology)
        out << "claim H" << k << " " << d << "\n";
    for (const auto& s : file.samples)
        out << "sample " << format_assignment(s) << "\n";
    return out.str();
}

LieAlgebra to_algebra(const AlgebraFile& file, Validation validation)
{
    return LieAlgebra(file.constants, file.param_names(), validation);
}

CorpusEntry to_corpus_entry(const AlgebraFile& file)
{
    return CorpusEntry{file.name, to_algebra(file, Validation::defer), file.params, file.claims, file.samples,
                       file.source};
}

Chart parse_chart(const std::string& text, const std::string& source_name)
{
    struct Line {
        int number;
        std::vector<Token> tokens;
        bool inverse;
    };
    std::vector<Line> body;
    Chart chart;
    bool in_inverse = false;
    auto lines = split_lines(text);
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        const int line_no = static_cast<int>(ln) + 1;
        auto tokens = tokenize(lines[ln], source_name, line_no);
        LineCursor cur{tokens, 0, source_name, line_no};
        const Token& first = cur.peek();
        if (first.kind == Token::end)
            continue;
        if (first.kind != Token::ident)
            cur.fail(first, "unexpected '" + first.text + "'");
        if (first.text == "format") {
            cur.next();
            const Token& t = cur.peek();
            if (cur.expect_int() != 1)
                cur.fail(t, "unsupported format version");
            cur.expect_end();
            continue;
        }
        if (first.text == "inverse" && tokens[1].kind == Token::op && tokens[1].text == ":") {
            if (in_inverse)
                cur.fail(first, "duplicate 'inverse:' section");
            cur.next();
            cur.next();
            cur.expect_end();
            in_inverse = true;
            continue;
        }
        cur.next();
        cur.expect_op("=");
        auto& names = in_inverse ? chart.source : chart.target;
        if (std::find(chart.source.begin(), chart.source.end(), first.text) != chart.source.end() ||
            std::find(chart.target.begin(), chart.target.end(), first.text) != chart.target.end())
            cur.fail(first, "coordinate '" + first.text + "' defined twice");
        names.push_back(first.text);
        body.push_back({line_no, std::move(tokens), in_inverse});
    }
    if (!in_inverse)
        throw ParseError(source_name, static_cast<int>(lines.size()) + 1, 1, "missing 'inverse:' section");
    std::set<std::string> source_vars(chart.source.begin(), chart.source.end());
    std::set<std::string> target_vars(chart.target.begin(), chart.target.end());
    for (const auto& line : body) {
        const auto& vars = line.inverse ? target_vars : source_vars;
        ExprParser p(line.tokens, 2, source_name, line.number, vars, 0);
        const Token& at = p.peek();
        Value v = p.expression();
        if (p.peek().kind != Token::end)
            p.fail(p.peek(), "unexpected '" + p.peek().text + "'");
        (line.inverse ? chart.inverse : chart.forward).push_back(require_scalar(p, at, v));
    }
    return chart;
}

std::string print_chart(const Chart& chart)
{
    std::ostringstream out;
    out << "format 1\n";
    for (std::size_t i = 0; i < chart.target.size(); ++i)
        out << chart.target[i] << " = " << chart.forward[i].to_string() << "\n";
    out << "inverse:\n";
    for (std::size_t i = 0; i < chart.source.size(); ++i)
        out << chart.source[i] << " = " << chart.inverse[i].to_string() << "\n";
    return out.str();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace liesym
