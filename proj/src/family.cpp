#include "ellsurf/family.hpp"

#include <cctype>
#include <sstream>

#include "ellsurf/errors.hpp"

namespace ellsurf {

namespace {

struct Token {
    enum Kind { Number, Ident, Op, End } kind;
    std::string text;
    int column; // 1-based
};

class ExprParser {
public:
    ExprParser(const std::string& text, const std::string& variable, int line, int col0)
        : variable_(variable), line_(line) {
        size_t i = 0;
        while (i < text.size()) {
            if (std::isspace(static_cast<unsigned char>(text[i]))) {
                ++i;
                continue;
            }
            int col = col0 + static_cast<int>(i);
            char c = text[i];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                size_t j = i;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                tokens_.push_back({Token::Number, text.substr(i, j - i), col});
                i = j;
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                size_t j = i;
                while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                           text[j] == '_'))
                    ++j;
                tokens_.push_back({Token::Ident, text.substr(i, j - i), col});
                i = j;
            } else if (std::string("+-*/^()").find(c) != std::string::npos) {
                tokens_.push_back({Token::Op, std::string(1, c), col});
                ++i;
            } else {
                throw ParseError(std::string("unexpected character '") + c + "'", line, col);
            }
        }
        tokens_.push_back({Token::End, "", col0 + static_cast<int>(text.size())});
    }

    RatFunc parse() {
        RatFunc f = expression();
        if (peek().kind != Token::End) fail("trailing input after expression");
        return f;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    Token next() { return tokens_[pos_++]; }
    bool accept(const std::string& op) {
        if (peek().kind == Token::Op && peek().text == op) {
            ++pos_;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line_, peek().column);
    }

    RatFunc expression() {
        RatFunc f = peek().kind == Token::Op && (peek().text == "-" || peek().text == "+")
                        ? RatFunc::zero()
                        : term();
        for (;;) {
            if (accept("+"))
                f += term();
            else if (accept("-"))
                f -= term();
            else
                return f;
        }
    }

    RatFunc term() {
        RatFunc f = factor();
        for (;;) {
            if (accept("*")) {
                f *= factor();
            } else if (accept("/")) {
                RatFunc d = factor();
                if (d.is_zero()) fail("division by zero");
                f /= d;
            } else {
                return f;
            }
        }
    }

    RatFunc factor() {
        if (accept("-")) return -factor();
        if (accept("+")) return factor();
        RatFunc base = atom();
        if (accept("^")) {
            bool neg = accept("-");
            if (peek().kind != Token::Number) fail("exponent must be an integer");
            long e = std::stol(next().text);
            if (neg && base.is_zero()) fail("division by zero");
            return base.pow(static_cast<int>(neg ? -e : e));
        }
        return base;
    }

    RatFunc atom() {
        const Token& t = peek();
        switch (t.kind) {
        case Token::Number:
            return RatFunc(Rat(mpz_class(next().text)));
        case Token::Ident:
            if (t.text != variable_)
                fail("unknown identifier '" + t.text + "' (the variable is '" + variable_ + "')");
            ++pos_;
            return RatFunc::variable();
        case Token::Op:
            if (t.text == "(") {
                ++pos_;
                RatFunc f = expression();
                if (!accept(")")) fail("expected ')'");
                return f;
            }
            [[fallthrough]];
        default:
            fail("expected a number, the variable, or '('");
        }
    }

    std::string variable_;
    int line_;
    std::vector<Token> tokens_;
    size_t pos_ = 0;
};

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    size_t b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

struct Line {
    int number;
    std::string key;
    std::string value;
    int value_column; // 1-based column where the value starts
};

std::vector<Line> key_value_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::string line = raw;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        if (trim(line).empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected 'key = value'", number,
                             static_cast<int>(line.find_first_not_of(" \t")) + 1);
        std::string key = trim(line.substr(0, eq));
        if (key.empty()) throw ParseError("missing key before '='", number, 1);
        size_t vstart = line.find_first_not_of(" \t", eq + 1);
        if (vstart == std::string::npos)
            throw ParseError("missing value for '" + key + "'", number,
                             static_cast<int>(eq) + 2);
        out.push_back({number, key, trim(line.substr(vstart)),
                       static_cast<int>(vstart) + 1});
    }
    return out;
}

bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

// "( X-expr , Y-expr )" with the comma at parenthesis depth zero
std::pair<std::string, std::string> split_section(const Line& ln) {
    const std::string& v = ln.value;
    if (v.empty() || v.front() != '(' || v.back() != ')')
        throw ParseError("section must be written as (X, Y)", ln.number, ln.value_column);
    int depth = 0;
    for (size_t i = 1; i + 1 < v.size(); ++i) {
        if (v[i] == '(') ++depth;
        if (v[i] == ')') --depth;
        if (v[i] == ',' && depth == 0)
            return {v.substr(1, i - 1), v.substr(i + 1, v.size() - i - 2)};
    }
    throw ParseError("section must be written as (X, Y)", ln.number, ln.value_column);
}

} // namespace

RatFunc parse_ratfunc(const std::string& text, const std::string& variable) {
    return ExprParser(text, variable, 1, 1).parse();
}

FamilySpec parse_family(const std::string& text) {
    auto lines = key_value_lines(text);
    FamilySpec spec;
    for (const Line& ln : lines) {
        if (ln.key != "variable") continue;
        if (!is_identifier(ln.value))
            throw ParseError("variable must be an identifier", ln.number, ln.value_column);
        spec.variable = ln.value;
    }

    auto expr = [&](const Line& ln) {
        return ExprParser(ln.value, spec.variable, ln.number, ln.value_column).parse();
    };
    for (const Line& ln : lines) {
        if (ln.key == "variable") continue;
        if (ln.key == "name") {
            spec.name = ln.value;
        } else if (ln.key == "a1") {
            spec.model.a1 = expr(ln);
        } else if (ln.key == "a2") {
            spec.model.a2 = expr(ln);
        } else if (ln.key == "a3") {
            spec.model.a3 = expr(ln);
        } else if (ln.key == "a4") {
            spec.model.a4 = expr(ln);
        } else if (ln.key == "a6") {
            spec.model.a6 = expr(ln);
        } else if (ln.key == "section") {
            auto [xs, ys] = split_section(ln);
            RatFunc X = ExprParser(xs, spec.variable, ln.number, ln.value_column + 1).parse();
            RatFunc Y = ExprParser(ys, spec.variable, ln.number,
                                   ln.value_column + 1 + static_cast<int>(xs.size()) + 1)
                            .parse();
            spec.sections.push_back(Section::affine(X, Y));
        } else {
            throw ParseError("unknown key '" + ln.key + "'", ln.number, 1);
        }
    }
    for (const Section& s : spec.sections)
        if (!section_on_curve(spec.model, s)) throw SectionNotOnCurve();
    return spec;
}

} // namespace ellsurf
