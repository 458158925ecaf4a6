#include "smw/text.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace smw {

namespace {

std::string monomial_text(const Monomial& m, const GeneratorSet& gs) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m.exp(i) == 0) continue;
        if (!s.empty()) s += "*";
        s += gs[i].name;
        if (m.exp(i) > 1) s += "^" + std::to_string(m.exp(i));
    }
    return s;
}

struct Cursor {
    std::string_view s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() { return s[i]; }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
};

bool is_name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string parse_name(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.i;
    if (c.i >= c.s.size() || !is_name_start(c.s[c.i]))
        throw Error("expected generator name at position " + std::to_string(c.i));
    ++c.i;
    while (c.i < c.s.size() && is_name_char(c.s[c.i])) ++c.i;
    if (c.i < c.s.size() && c.s[c.i] == '{') {
        ++c.i;
        while (c.i < c.s.size() && c.s[c.i] != '}') ++c.i;
        if (c.i >= c.s.size()) throw Error("unterminated '{' in generator name");
        ++c.i;
    }
    return std::string(c.s.substr(start, c.i - start));
}

unsigned parse_uint(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == start) throw Error("expected integer at position " + std::to_string(start));
    unsigned v = 0;
    for (std::size_t k = start; k < c.i; ++k) v = v * 10 + static_cast<unsigned>(c.s[k] - '0');
    return v;
}

}  // namespace

std::string to_text(const Polynomial& p, const MonomialOrder& order) {
    if (p.is_zero()) return "0";
    std::vector<const Monomial*> ms;
    ms.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) {
        (void)c;
        ms.push_back(&m);
    }
    std::sort(ms.begin(), ms.end(), [&](const Monomial* a, const Monomial* b) {
        return order.greater(*a, *b);
    });

    std::string out;
    bool first = true;
    for (const Monomial* m : ms) {
        Rational c = p.terms().at(*m);
        bool neg = c < 0;
        Rational abs = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono = monomial_text(*m, *p.genset());
        if (mono.empty()) {
            out += to_string(abs);
        } else if (abs == 1) {
            out += mono;
        } else {
            out += to_string(abs) + "*" + mono;
        }
    }
    return out;
}

std::string to_text(const Polynomial& p) {
    return to_text(p, MonomialOrder::grevlex(p.genset()));
}

Polynomial parse_polynomial(std::string_view text, GenSetPtr gs) {
    Polynomial result(gs);
    Cursor c{text};
    if (c.done()) throw Error("empty polynomial text");

    bool first = true;
    while (!c.done()) {
        int sign = 1;
        c.skip_ws();
        if (c.eat('-')) {
            sign = -1;
        } else if (c.eat('+')) {
            sign = 1;
        } else if (!first) {
            throw Error("expected '+' or '-' at position " + std::to_string(c.i));
        }
        first = false;
        c.skip_ws();
        if (c.i >= c.s.size()) throw Error("dangling sign in polynomial text");

        Rational coeff(sign);
        Monomial mono = Monomial::one(gs->size());
        bool saw_factor = false;

        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            unsigned num = parse_uint(c);
            Rational q(num);
            if (c.eat('/')) {
                unsigned den = parse_uint(c);
                if (den == 0) throw Error("zero denominator in coefficient");
                q = Rational(Integer(num), Integer(den));
            }
            coeff *= q;
            saw_factor = true;
            if (!c.eat('*')) {
                result.add_term(mono, coeff);
                continue;
            }
            saw_factor = false;
        }

        // generator factors joined by '*'
        while (true) {
            std::string name = parse_name(c);
            auto idx = gs->index_of(name);
            if (!idx) throw Error("unknown generator in polynomial text: " + name);
            unsigned e = 1;
            if (c.eat('^')) e = parse_uint(c);
            mono = mono * Monomial::var(gs->size(), *idx, e);
            saw_factor = true;
            if (!c.eat('*')) break;
        }
        if (!saw_factor) throw Error("empty term in polynomial text");
        result.add_term(mono, coeff);
    }
    return result;
}

}  // namespace smw
