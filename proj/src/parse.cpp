#include "dimlaw/parse.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <utility>

#include "dimlaw/errors.hpp"

namespace dimlaw {

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class DimExprParser {
public:
    DimExprParser(std::string_view text, const DimensionSystem& system)
        : text_(text), system_(system) {}

    DimVector parse() {
        skip_ws();
        if (done()) throw MalformedExpression("empty dimension expression", pos_);

        RatVec exponents(system_.size(), Rational(0));
        if (peek() == '1') {
            ++pos_;
            skip_ws();
            if (!done())
                throw MalformedExpression(trailing_message(), pos_);
            return DimVector(std::move(exponents));
        }

        parse_term(exponents);
        skip_ws();
        while (!done()) {
            expect('*');
            skip_ws();
            parse_term(exponents);
            skip_ws();
        }
        return DimVector(std::move(exponents));
    }

private:
    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    void expect(char c) {
        if (done() || peek() != c)
            throw MalformedExpression(std::string("expected '") + c + "' at position " +
                                          std::to_string(pos_),
                                      pos_);
        ++pos_;
    }

    std::string trailing_message() const {
        return "unexpected character '" + std::string(1, peek()) + "' at position " +
               std::to_string(pos_);
    }

    BigInt parse_int() {
        bool negative = false;
        if (!done() && (peek() == '-' || peek() == '+')) {
            negative = peek() == '-';
            ++pos_;
        }
        if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw MalformedExpression("expected integer at position " + std::to_string(pos_), pos_);
        BigInt value = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (peek() - '0');
            ++pos_;
        }
        return negative ? -value : value;
    }

    void parse_term(RatVec& exponents) {
        if (done() || !is_name_start(peek()))
            throw MalformedExpression("expected dimension name at position " + std::to_string(pos_),
                                      pos_);
        const std::size_t start = pos_;
        while (!done() && is_name_char(peek())) ++pos_;
        const std::string name(text_.substr(start, pos_ - start));

        const auto index = system_.index_of(name);
        if (!index)
            throw UnknownDimension("unknown dimension '" + name + "'", name);

        Rational exponent = 1;
        skip_ws();
        if (!done() && peek() == '^') {
            ++pos_;
            skip_ws();
            exponent = parse_exponent();
        }
        exponents[*index] += exponent;
    }

    Rational parse_exponent() {
        if (!done() && peek() == '(') {
            ++pos_;
            skip_ws();
            const BigInt num = parse_int();
            BigInt den = 1;
            skip_ws();
            if (!done() && peek() == '/') {
                ++pos_;
                skip_ws();
                const std::size_t den_pos = pos_;
                den = parse_int();
                if (den == 0)
                    throw ZeroDenominatorExponent(
                        "zero denominator in exponent at position " + std::to_string(den_pos),
                        den_pos);
            }
            skip_ws();
            expect(')');
            return Rational(num, den);
        }
        return Rational(parse_int());
    }

    std::string_view text_;
    const DimensionSystem& system_;
    std::size_t pos_ = 0;
};

std::string format_exponent(const Rational& e) {
    if (denominator(e) == 1) return "^" + to_string(e);
    return "^(" + to_string(e) + ")";
}

// One logical line of a problem file, with its 1-based number.
struct Line {
    std::size_t number;
    std::string text;
};

std::vector<Line> significant_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t line_no = 0;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        std::size_t end = text.find('\n', begin);
        if (end == std::string_view::npos) end = text.size();
        ++line_no;
        std::string line(text.substr(begin, end - begin));
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first != std::string::npos) {
            const auto last = line.find_last_not_of(" \t\r");
            out.push_back({line_no, line.substr(first, last - first + 1)});
        }
        if (end == text.size()) break;
        begin = end + 1;
    }
    return out;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string token;
    while (is >> token) out.push_back(token);
    return out;
}

[[noreturn]] void rethrow_with_line(const ParseError& e, std::size_t line) {
    const std::string message = "line " + std::to_string(line) + ": " + e.what();
    if (const auto* u = dynamic_cast<const UnknownDimension*>(&e))
        throw UnknownDimension(message, u->name);
    if (const auto* m = dynamic_cast<const MalformedExpression*>(&e))
        throw MalformedExpression(message, m->position);
    if (const auto* z = dynamic_cast<const ZeroDenominatorExponent*>(&e))
        throw ZeroDenominatorExponent(message, z->position);
    throw FormatError(message, line);
}

}  // namespace

DimVector parse_dim_expr(std::string_view text, const DimensionSystem& system) {
    return DimExprParser(text, system).parse();
}

std::string render_dim_expr(const DimVector& dim, const DimensionSystem& system) {
    if (dim.size() != system.size())
        throw LengthMismatch("dimension vector does not match the system");
    std::string out;
    for (std::size_t i = 0; i < dim.size(); ++i) {
        if (dim[i] == 0) continue;
        if (!out.empty()) out += " * ";
        out += system.names()[i];
        if (dim[i] != 1) out += format_exponent(dim[i]);
    }
    return out.empty() ? "1" : out;
}

Problem parse_problem(std::string_view text) {
    const auto lines = significant_lines(text);
    if (lines.empty()) throw FormatError("empty problem file", 1);

    const auto& head = lines.front();
    constexpr std::string_view kDimensionsKey = "dimensions:";
    auto head_tokens = split_ws(head.text);
    if (head_tokens.empty() || head_tokens.front() != kDimensionsKey)
        throw FormatError("line " + std::to_string(head.number) +
                              ": expected 'dimensions: NAME NAME ...'",
                          head.number);
    head_tokens.erase(head_tokens.begin());
    if (head_tokens.empty())
        throw FormatError("line " + std::to_string(head.number) + ": no dimensions declared",
                          head.number);

    DimensionSystem system = [&] {
        try {
            return DimensionSystem(std::move(head_tokens));
        } catch (const Error& e) {
            throw FormatError("line " + std::to_string(head.number) + ": " + e.what(),
                              head.number);
        }
    }();

    std::vector<Quantity> explanatory;
    std::optional<Quantity> target;
    std::size_t target_line = 0;

    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto& [line_no, line] = lines[li];
        const auto colon = line.find(':');
        if (colon == std::string::npos)
            throw FormatError("line " + std::to_string(line_no) + ": expected ':' in declaration",
                              line_no);

        const auto head_tokens2 = split_ws(line.substr(0, colon));
        if (head_tokens2.size() != 2 ||
            (head_tokens2[0] != "quantity" && head_tokens2[0] != "target"))
            throw FormatError("line " + std::to_string(line_no) +
                                  ": expected 'quantity NAME : DIMEXPR' or 'target NAME : DIMEXPR'",
                              line_no);

        const std::string& name = head_tokens2[1];
        for (char c : name)
            if (!is_name_char(c))
                throw FormatError("line " + std::to_string(line_no) + ": invalid quantity name '" +
                                      name + "'",
                                  line_no);
        if (!is_name_start(name.front()))
            throw FormatError("line " + std::to_string(line_no) + ": invalid quantity name '" +
                                  name + "'",
                              line_no);

        DimVector dim = [&] {
            try {
                return parse_dim_expr(line.substr(colon + 1), system);
            } catch (const ParseError& e) {
                rethrow_with_line(e, line_no);
            }
        }();

        const bool duplicate =
            (target && target->name == name) ||
            std::any_of(explanatory.begin(), explanatory.end(),
                        [&](const Quantity& q) { return q.name == name; });
        if (duplicate)
            throw DuplicateQuantity("line " + std::to_string(line_no) + ": duplicate quantity '" +
                                        name + "'",
                                    name);

        if (head_tokens2[0] == "target") {
            if (target)
                throw MultipleTargets("line " + std::to_string(line_no) +
                                      ": target already declared on line " +
                                      std::to_string(target_line));
            target = Quantity{name, std::move(dim)};
            target_line = line_no;
        } else {
            explanatory.push_back(Quantity{name, std::move(dim)});
        }
    }

    if (!target) throw MissingTarget("no target declared");
    if (explanatory.empty())
        throw FormatError("no explanatory quantities declared", lines.back().number);

    return Problem(std::move(system), std::move(explanatory), std::move(*target));
}

Problem parse_problem_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_problem(buffer.str());
}

std::string render_problem(const Problem& problem) {
    std::string out = "dimensions:";
    for (const auto& name : problem.system().names()) out += " " + name;
    out += "\n";
    for (const auto& q : problem.explanatory())
        out += "quantity " + q.name + " : " + render_dim_expr(q.dim, problem.system()) + "\n";
    out += "target " + problem.target().name + " : " +
           render_dim_expr(problem.target().dim, problem.system()) + "\n";
    return out;
}

}  // namespace dimlaw
