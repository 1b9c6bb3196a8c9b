#include "defw/text.hpp"

#include <cctype>

namespace defw {

std::string to_text(const Generator& g) {
    return std::string(g.kind == Kind::H ? "h[" : "c[") + std::to_string(g.index) + "," +
           std::to_string(g.order) + "]";
}

std::string to_text(const Monomial& m) {
    if (m.is_unit()) return "1";
    std::string s;
    for (const auto& g : m.factors()) {
        if (!s.empty()) s += "*";
        s += to_text(g);
    }
    return s;
}

std::string to_text(const Element& x) {
    if (x.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, v] : x.terms()) {
        Rational a = abs(v);
        if (first)
            s += v < 0 ? "-" : "";
        else
            s += v < 0 ? " - " : " + ";
        first = false;
        if (m.is_unit())
            s += to_string(a);
        else if (a == 1)
            s += to_text(m);
        else
            s += to_string(a) + "*" + to_text(m);
    }
    return s;
}

namespace {

class Parser {
public:
    Parser(const AlgebraContext& ctx, std::string_view t) : ctx_(ctx), t_(t) {}

    Element run() {
        Element out(ctx_);
        skip();
        if (at_end()) throw ParseError("empty element");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1 : 1;
                skip();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [coeff, mono_sign, mono] = term();
            if (mono_sign != 0) out.add_term(mono, Rational(sign * mono_sign) * coeff);
            skip();
        }
        return out;
    }

private:
    bool at_end() const { return pos_ >= t_.size(); }
    char peek() const { return at_end() ? '\0' : t_[pos_]; }
    char get() { return t_[pos_++]; }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError(why + " at offset " + std::to_string(pos_));
    }
    void expect(char ch) {
        skip();
        if (peek() != ch) fail(std::string("expected '") + ch + "'");
        ++pos_;
    }
    int integer() {
        skip();
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::stoi(std::string(t_.substr(start, pos_ - start)));
    }
    Rational number() {
        skip();
        std::size_t start = pos_;
        if (peek() == '-' || peek() == '+') ++pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        skip();
        if (peek() == '/') {
            ++pos_;
            skip();
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        }
        return parse_rational(t_.substr(start, pos_ - start));
    }

    std::tuple<Rational, int, Monomial> term() {
        Rational coeff = 1;
        bool have_coeff = false;
        skip();
        if (peek() == '(') {
            ++pos_;
            coeff = number();
            expect(')');
            have_coeff = true;
        } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = number();
            have_coeff = true;
        }
        skip();
        bool need_factor = false;
        if (have_coeff && peek() == '*') {
            ++pos_;
            skip();
            need_factor = true;
        }
        std::vector<Generator> seq;
        while (peek() == 'h' || peek() == 'c') {
            need_factor = false;
            Kind k = get() == 'h' ? Kind::H : Kind::C;
            expect('[');
            int i = integer();
            expect(',');
            int a = integer();
            expect(']');
            Generator g = make_generator(ctx_, k, i, a);
            int times = 1;
            skip();
            if (peek() == '^') {
                ++pos_;
                times = integer();
                skip();
            }
            for (int n = 0; n < times; ++n) seq.push_back(g);
            if (peek() != '*') break;
            ++pos_;
            skip();
            need_factor = true;
        }
        if (need_factor) fail("expected a factor after '*'");
        if (seq.empty() && !have_coeff) fail("expected a term");
        auto [s, m] = Monomial::from_factors(seq);
        return {coeff, s, m};
    }

    AlgebraContext ctx_;
    std::string_view t_;
    std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(const AlgebraContext& ctx, std::string_view text) {
    return Parser(ctx, text).run();
}

}  // namespace defw
