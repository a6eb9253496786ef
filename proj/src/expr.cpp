#include "demazure/expr.hpp"

#include <cctype>

#include "demazure/basis.hpp"
#include "demazure/errors.hpp"
#include "demazure/shape.hpp"

namespace demazure {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    Polynomial parse() {
        Polynomial result = expression();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("trailing input in expression: " + text_.substr(pos_));
        return result;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    long long number() {
        skip_ws();
        if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("number expected in expression");
        long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            v = v * 10 + (text_[pos_++] - '0');
        return v;
    }

    WeakComposition composition() {
        skip_ws();
        if (!eat('(')) throw ParseError("'(' expected before composition");
        std::vector<int> parts;
        while (true) {
            parts.push_back(static_cast<int>(number()));
            if (eat(',')) continue;
            if (eat(')')) break;
            throw ParseError("',' or ')' expected in composition");
        }
        return WeakComposition(std::move(parts));
    }

    std::vector<int> operator_word() {
        if (!eat(':')) throw ParseError("operator word expected, e.g. pi:121");
        skip_ws();
        std::vector<int> letters;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            letters.push_back(text_[pos_++] - '0');
        if (letters.empty()) throw ParseError("empty operator word");
        return letters;
    }

    Polynomial expression() {
        Polynomial result;
        bool negate = false;
        if (eat('-')) negate = true;
        else eat('+');
        result = term();
        if (negate) result = -result;
        while (true) {
            if (eat('+')) result += term();
            else if (eat('-')) result -= term();
            else break;
        }
        return result;
    }

    Polynomial term() {
        Polynomial result = factor();
        while (eat('*')) result = result * factor();
        return result;
    }

    Polynomial factor() {
        Polynomial base = atom_factor();
        if (eat('^')) {
            long long e = number();
            Polynomial power(1);
            for (long long i = 0; i < e; ++i) power = power * base;
            return power;
        }
        return base;
    }

    Polynomial atom_factor() {
        skip_ws();
        const char c = peek();
        if (c == '(') {
            eat('(');
            Polynomial inner = expression();
            if (!eat(')')) throw ParseError("')' expected");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Polynomial(number());
        std::string name;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            name.push_back(text_[pos_++]);
        if (name == "x") {
            // x3 or x3^2 is a variable, x (1,0,3) a monomial
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                const int idx = static_cast<int>(number());
                if (idx < 1) throw ParseError("variable index must be >= 1");
                Exponents e(static_cast<std::size_t>(idx), 0);
                e[static_cast<std::size_t>(idx - 1)] = 1;
                return Polynomial::monomial(e);
            }
            return Polynomial::monomial(composition());
        }
        if (name == "atom") return atom_polynomial(composition());
        if (name == "key") return key_polynomial(composition());
        if (name == "pi" || name == "theta") {
            const std::vector<int> word = operator_word();
            const Polynomial arg = Polynomial::monomial(composition());
            return apply_word_letters(
                name == "pi" ? OperatorKind::pi : OperatorKind::theta, word, arg);
        }
        throw ParseError("unknown name in expression: '" + name + "'");
    }
};

} // namespace

Polynomial eval_expression(const std::string& text) {
    return Parser(text).parse();
}

} // namespace demazure
