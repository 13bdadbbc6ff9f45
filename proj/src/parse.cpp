#include <cctype>

#include "quot/polynomial.hpp"

namespace quot {

namespace {

class Scanner {
public:
    Scanner(const std::string& text, const Ring& ring) : s_(text), ring_(ring) {}

    Polynomial parse() {
        skip_ws();
        Polynomial p = Polynomial::zero(ring_);
        bool negative = eat('-');
        p += parse_term(negative);
        skip_ws();
        while (!done()) {
            char op = peek();
            if (op != '+' && op != '-')
                throw ParseError("expected '+' or '-'", pos_);
            ++pos_;
            skip_ws();
            p += parse_term(op == '-');
            skip_ws();
        }
        return p;
    }

private:
    bool done() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        if (!done() && s_[pos_] == c) {
            ++pos_;
            skip_ws();
            return true;
        }
        return false;
    }

    Polynomial parse_term(bool negative) {
        skip_ws();
        if (done()) throw ParseError("expected a term", pos_);
        Scalar coeff = Scalar::one(ring_->field());
        bool have_coeff = false;
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            coeff = parse_coeff();
            have_coeff = true;
        }
        Monomial mono = Monomial::one(ring_->nvars());
        bool have_vars = false;
        if (!have_coeff) {
            mono = parse_factors();
            have_vars = true;
        } else {
            skip_ws();
            std::size_t save = pos_;
            if (eat('*')) {
                if (!done() && is_var_start(peek())) {
                    mono = parse_factors();
                    have_vars = true;
                } else {
                    pos_ = save;  // '*' belongs to an outer context; reject below
                    throw ParseError("expected a variable after '*'", save);
                }
            }
        }
        if (!have_coeff && !have_vars) throw ParseError("empty term", pos_);
        if (negative) coeff = -coeff;
        Polynomial p(ring_);
        return Polynomial::from_terms(ring_, {{coeff, mono}});
    }

    static bool is_var_start(char c) {
        return c == 'x' || c == 'y' || c == 'T' || c == 'z' || c == 'u' || c == 'w';
    }

    Scalar parse_coeff() {
        std::size_t start = pos_;
        if (!done() && peek() == '-') ++pos_;
        std::string num = read_digits("integer");
        std::string text = (s_[start] == '-' ? "-" : "") + num;
        skip_ws();
        if (!done() && peek() == '/') {
            ++pos_;
            skip_ws();
            text += "/" + read_digits("denominator");
        }
        try {
            return Scalar::parse(ring_->field(), text);
        } catch (const ParseError&) {
            throw ParseError("bad coefficient '" + text + "'", start);
        }
    }

    std::string read_digits(const char* what) {
        skip_ws();
        std::size_t start = pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) throw ParseError(std::string("expected ") + what, start);
        return s_.substr(start, pos_ - start);
    }

    Monomial parse_factors() {
        Monomial m = parse_factor();
        skip_ws();
        while (!done() && peek() == '*') {
            std::size_t save = pos_;
            ++pos_;
            skip_ws();
            if (done() || !is_var_start(peek())) {
                pos_ = save;
                throw ParseError("expected a variable after '*'", save);
            }
            m = m * parse_factor();
            skip_ws();
        }
        return m;
    }

    Monomial parse_factor() {
        std::size_t start = pos_;
        std::string name = read_var_name();
        auto idx = ring_->find(name);
        if (!idx) throw ParseError("unknown variable '" + name + "'", start);
        std::uint32_t e = 1;
        skip_ws();
        if (!done() && peek() == '^') {
            ++pos_;
            skip_ws();
            std::string d = read_digits("exponent");
            unsigned long v = std::stoul(d);
            if (v > 1u << 20) throw ParseError("exponent too large", start);
            e = static_cast<std::uint32_t>(v);
        }
        return Monomial::var(ring_->nvars(), *idx, e);
    }

    std::string read_var_name() {
        std::size_t start = pos_;
        char c = peek();
        if (c == 'w') {
            ++pos_;
            auto index_part = [&]() {
                if (done() || peek() != '_') throw ParseError("malformed w-variable", start);
                ++pos_;
                return read_digits("index");
            };
            std::string h = index_part();
            std::string m = index_part();
            return "w_" + h + "_" + m;
        }
        if (is_var_start(c)) {
            ++pos_;
            return std::string(1, c);
        }
        throw ParseError("expected a variable", start);
    }

    const std::string& s_;
    Ring ring_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(const std::string& text, const Ring& ring) {
    return Scanner(text, ring).parse();
}

}  // namespace quot
