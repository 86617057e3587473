#include "schurlab/presentation_dsl.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <utility>

#include "schurlab/errors.hpp"

namespace schurlab {

namespace {

// Replace the Unicode spellings of the angle form by ASCII; byte offsets shift,
// so columns refer to the normalized text.
std::string normalize_unicode(const std::string& text) {
    static const std::vector<std::pair<std::string, std::string>> table = {
        {"\xE2\x9F\xA8", "<"},   {"\xE2\x9F\xA9", ">"},   {"\xE2\x8C\xA9", "<"},
        {"\xE2\x8C\xAA", ">"},   {"\xE2\x80\xA6", "..."}, {"\xE2\x88\x92", "-"},
        {"\xE2\x80\x93", "-"},   {"\xC2\xB7", "*"},       {"\xE2\x8B\x85", "*"},
    };
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size();) {
        // subscript digits U+2080..U+2089
        if (i + 2 < text.size() && text[i] == '\xE2' && text[i + 1] == '\x82' &&
            static_cast<unsigned char>(text[i + 2]) >= 0x80 && static_cast<unsigned char>(text[i + 2]) <= 0x89) {
            out += static_cast<char>('0' + (static_cast<unsigned char>(text[i + 2]) - 0x80));
            i += 3;
            continue;
        }
        bool replaced = false;
        for (const auto& [from, to] : table) {
            if (text.compare(i, from.size(), from) == 0) {
                out += to;
                i += from.size();
                replaced = true;
                break;
            }
        }
        if (!replaced) out += text[i++];
    }
    return out;
}

class Cursor {
public:
    Cursor(const std::string& text, std::size_t line, std::size_t pos = 0, std::size_t end = std::string::npos)
        : text_(&text), line_(line), pos_(pos), end_(std::min(end, text.size())) {
        if (pos > 0) {
            const auto nl = text.rfind('\n', pos - 1);
            line_start_ = nl == std::string::npos ? 0 : nl + 1;
        }
    }

    void skip_ws() {
        while (pos_ < end_ && std::isspace(static_cast<unsigned char>((*text_)[pos_]))) {
            if ((*text_)[pos_] == '\n') {
                ++line_;
                line_start_ = pos_ + 1;
            }
            ++pos_;
        }
    }
    bool at_end() {
        skip_ws();
        return pos_ >= end_;
    }
    char peek() {
        skip_ws();
        return pos_ < end_ ? (*text_)[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'" + found());
    }
    bool accept_word(const std::string& word) {
        skip_ws();
        if (text_->compare(pos_, word.size(), word) != 0 || pos_ + word.size() > end_) return false;
        pos_ += word.size();
        return true;
    }
    std::string word() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < end_ && !std::isspace(static_cast<unsigned char>((*text_)[pos_]))) ++pos_;
        if (start == pos_) fail("expected a name" + found());
        return text_->substr(start, pos_ - start);
    }
    std::size_t integer() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < end_ && std::isdigit(static_cast<unsigned char>((*text_)[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer" + found());
        if (pos_ - start > 9) fail("integer too large");
        return std::stoul(text_->substr(start, pos_ - start));
    }
    Scalar rational() {
        const std::size_t num = integer();
        Scalar value(static_cast<unsigned long>(num));
        if (pos_ < end_ && (*text_)[pos_] == '/') {
            ++pos_;
            const std::size_t den = integer();
            if (den == 0) fail("zero denominator");
            value /= Scalar(static_cast<unsigned long>(den));
        }
        return value;
    }
    /// "x" INT, returned 1-based.
    std::size_t generator() {
        skip_ws();
        if (pos_ >= end_ || (*text_)[pos_] != 'x') fail("expected a generator x<k>" + found());
        ++pos_;
        if (pos_ >= end_ || !std::isdigit(static_cast<unsigned char>((*text_)[pos_])))
            fail("expected generator index after 'x'");
        return integer();
    }

    std::size_t line() const { return line_; }
    std::size_t column() const { return pos_ - line_start_ + 1; }
    std::size_t pos() const { return pos_; }

    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(line_, column(), what); }

private:
    std::string found() const {
        if (pos_ >= end_) return ", found end of input";
        return std::string(", found '") + (*text_)[pos_] + "'";
    }

    const std::string* text_;
    std::size_t line_;
    std::size_t pos_;
    std::size_t end_;
    std::size_t line_start_ = 0;
};

class StatementParser {
public:
    explicit StatementParser(PresentationAst& ast) : ast_(ast) {}

    // Parses "[xi,xj] = combo" and stops before `stop` (or end of cursor range).
    void parse(Cursor& in, char stop = '\0') {
        const std::size_t line = in.line();
        in.skip_ws();
        const std::size_t column = in.column();
        in.expect('[');
        const std::size_t a = checked(in, in.generator());
        in.expect(',');
        const std::size_t b = checked(in, in.generator());
        in.expect(']');
        in.expect('=');

        std::vector<SparseVector::Entry> terms;
        bool first = true;
        while (true) {
            Scalar sign = 1;
            if (in.accept('-')) sign = -1;
            else if (!first && !in.accept('+')) break;
            else if (first) in.accept('+');

            Scalar coeff = 1;
            if (std::isdigit(static_cast<unsigned char>(in.peek()))) {
                coeff = in.rational();
                if (!in.accept('*')) {
                    if (first && coeff == 0 && sign > 0) {
                        break;
                    }
                    in.fail("expected '*' after coefficient");
                }
            }
            const std::size_t k = checked(in, in.generator());
            terms.emplace_back(k, sign * coeff);
            first = false;
        }
        if (!in.at_end() && in.peek() != stop) in.fail("unexpected trailing text");

        SparseVector rhs = SparseVector::from_terms(std::move(terms));
        if (a == b) {
            if (!rhs.empty()) throw SyntaxError(line, column, "[x" + std::to_string(a + 1) + ",x" +
                                                                 std::to_string(a + 1) + "] must be 0 by antisymmetry");
            return;
        }
        std::size_t i = a, j = b;
        if (i > j) {
            std::swap(i, j);
            rhs = -rhs;
        }
        auto key = std::make_pair(i, j);
        auto it = seen_.find(key);
        if (it != seen_.end()) {
            const auto& prior = ast_.statements[it->second];
            if (!(prior.rhs == rhs))
                throw DuplicateInconsistentBracket("line " + std::to_string(line) + ": [x" + std::to_string(i + 1) +
                                                   ",x" + std::to_string(j + 1) + "] already defined on line " +
                                                   std::to_string(prior.line) + " with a different value");
            return;
        }
        seen_.emplace(key, ast_.statements.size());
        ast_.statements.push_back({i, j, std::move(rhs), line, column});
    }

private:
    std::size_t checked(const Cursor& in, std::size_t k) const {
        if (k == 0 || k > ast_.dim)
            throw UnknownGenerator("line " + std::to_string(in.line()) + ", column " + std::to_string(in.column()) +
                                   ": x" + std::to_string(k) + " is not a generator of a " +
                                   std::to_string(ast_.dim) + "-dimensional algebra");
        return k - 1;
    }

    PresentationAst& ast_;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen_;
};

std::string strip_comments(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    bool in_comment = false;
    for (char ch : text) {
        if (ch == '#') in_comment = true;
        if (ch == '\n') in_comment = false;
        out += in_comment ? ' ' : ch;
    }
    return out;
}

PresentationAst parse_normative(const std::string& text) {
    PresentationAst ast;
    std::istringstream lines(text);
    std::string raw;
    std::size_t line_no = 0;
    bool header_done = false;
    StatementParser statements(ast);
    while (std::getline(lines, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        Cursor in(raw, line_no);
        if (in.at_end()) continue;
        if (!header_done) {
            if (!in.accept_word("algebra")) in.fail("expected 'algebra NAME dim INT'");
            if (!std::isspace(static_cast<unsigned char>(raw[in.pos()]))) in.fail("expected whitespace after 'algebra'");
            ast.name = in.word();
            if (!in.accept_word("dim")) in.fail("expected 'dim'");
            ast.dim = in.integer();
            if (!in.at_end()) in.fail("unexpected trailing text after header");
            header_done = true;
            continue;
        }
        statements.parse(in);
    }
    if (!header_done) throw SyntaxError(line_no == 0 ? 1 : line_no, 1, "missing 'algebra NAME dim INT' header");
    return ast;
}

PresentationAst parse_angle(const std::string& text) {
    PresentationAst ast;
    Cursor in(text, 1);
    in.skip_ws();
    // optional name before '<'
    if (in.peek() != '<') {
        const std::size_t start = in.pos();
        std::size_t p = start;
        while (p < text.size() && text[p] != '<' && text[p] != '=' ) ++p;
        std::string name = text.substr(start, p - start);
        while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
        ast.name = name;
        in = Cursor(text, 1, p);
        in.accept('=');
    }
    in.expect('<');

    std::size_t max_index = 0;
    std::size_t expected_next = 1;
    while (true) {
        if (in.accept_word("...")) {
            expected_next = 0;
            in.expect(',');
            continue;
        }
        const std::size_t k = in.generator();
        if (expected_next != 0 && k != expected_next) in.fail("generators must be listed as x1, x2, ...");
        max_index = std::max(max_index, k);
        expected_next = k + 1;
        if (in.accept(',')) continue;
        break;
    }
    ast.dim = max_index;
    StatementParser statements(ast);
    if (in.accept('|')) {
        if (in.peek() != '>') {
            while (true) {
                // statement runs until the next top-level ',' or '>'
                std::size_t p = in.pos();
                int depth = 0;
                while (p < text.size()) {
                    if (text[p] == '[') ++depth;
                    else if (text[p] == ']') --depth;
                    else if (depth == 0 && (text[p] == ',' || text[p] == '>')) break;
                    ++p;
                }
                Cursor stmt(text, in.line(), in.pos(), p);
                statements.parse(stmt);
                in = Cursor(text, stmt.line(), p);
                if (in.accept(',')) continue;
                break;
            }
        }
    }
    in.expect('>');
    if (!in.at_end()) in.fail("unexpected text after '>'");
    if (ast.name.empty()) ast.name = "L";
    return ast;
}

} // namespace

PresentationAst parse_presentation_ast(const std::string& text) {
    const std::string clean = strip_comments(normalize_unicode(text));
    const auto first = clean.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && clean.compare(first, 7, "algebra") != 0 &&
        clean.find('<') != std::string::npos)
        return parse_angle(clean);
    return parse_normative(clean);
}

LieAlgebra build_algebra(const PresentationAst& ast) {
    std::vector<BracketRule> rules;
    rules.reserve(ast.statements.size());
    for (const auto& s : ast.statements) rules.push_back({s.i, s.j, s.rhs});
    LieAlgebra algebra = LieAlgebra::from_rules(ast.dim, rules, ast.name);
    validate(algebra);
    series(algebra);
    return algebra;
}

LieAlgebra parse_presentation(const std::string& text) { return build_algebra(parse_presentation_ast(text)); }

std::string serialize_presentation(const LieAlgebra& algebra) {
    std::string name = algebra.name().empty() ? "L" : algebra.name();
    for (auto& ch : name)
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == '#') ch = '_';
    std::string out = "algebra " + name + " dim " + std::to_string(algebra.dim()) + "\n";
    for (const auto& rule : algebra.rules()) {
        out += "[x" + std::to_string(rule.i + 1) + ",x" + std::to_string(rule.j + 1) + "] = ";
        bool first = true;
        for (const auto& [k, q] : rule.rhs.entries()) {
            Scalar mag = abs(q);
            if (q < 0) out += first ? "-" : " - ";
            else if (!first) out += " + ";
            if (mag != 1) out += to_string(mag) + "*";
            out += "x" + std::to_string(k + 1);
            first = false;
        }
        out += "\n";
    }
    return out;
}

} // namespace schurlab
