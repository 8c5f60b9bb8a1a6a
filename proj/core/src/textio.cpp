#include "polyz/textio.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace polyz {

namespace {

void render_term(std::ostream& os, const Int& c, long e, bool first) {
    Int a = abs(c);
    if (first) {
        if (c < 0) os << "-";
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    if (e == 0) {
        os << a.get_str();
        return;
    }
    if (a != 1) os << a.get_str() << "*";
    os << "t";
    if (e != 1) os << "^" << e;
}

} // namespace

std::string render_laurent(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const IntPoly& q = p.poly();
    for (long i = 0; i <= q.degree(); ++i) {
        const Int& c = q.coeff(i);
        if (c == 0) continue;
        render_term(os, c, i + p.shift(), first);
        first = false;
    }
    return os.str();
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw error("parse_laurent: " + what + " at position " + std::to_string(i));
    }
    Int read_integer() {
        skip_ws();
        std::size_t start = i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        std::size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits) fail("expected integer");
        return Int(s.substr(start, i - start));
    }
};

} // namespace

LaurentPoly parse_laurent(const std::string& text) {
    Cursor c{text};
    LaurentPoly result;
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            sign = (ch == '-') ? -1 : 1;
            ++c.i;
        } else if (!first) {
            c.fail("expected '+' or '-' between terms");
        }
        Int coeff = 1;
        bool saw_coeff = false;
        ch = c.peek();
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            coeff = c.read_integer();
            saw_coeff = true;
            if (c.peek() == '*') ++c.i;
        }
        long exp = 0;
        if (c.peek() == 't') {
            ++c.i;
            exp = 1;
            if (c.peek() == '^') {
                ++c.i;
                Int e = c.read_integer();
                if (!e.fits_slong_p()) c.fail("exponent out of range");
                exp = e.get_si();
            }
        } else if (!saw_coeff) {
            c.fail("expected term");
        }
        result = result + LaurentPoly(IntPoly::constant(sign * coeff), exp);
        first = false;
    }
    if (first) throw error("parse_laurent: empty input");
    return result;
}

std::string render_word(const Word& w, const std::vector<std::string>& names) {
    Word n = word_normalized(w);
    if (n.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const Syllable& s : n) {
        if (s.gen >= names.size()) throw error("render_word: generator index out of range");
        if (!first) os << " ";
        os << names[s.gen];
        if (s.exp != 1) os << "^" << s.exp.get_str();
        first = false;
    }
    return os.str();
}

Word parse_word(const std::string& text, const std::vector<std::string>& names) {
    Word w;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok == "1" && w.empty() && is.peek() == EOF) break;
        std::string name = tok;
        Int exp = 1;
        if (auto caret = tok.find('^'); caret != std::string::npos) {
            name = tok.substr(0, caret);
            std::string e = tok.substr(caret + 1);
            if (e.empty() || (!std::isdigit(static_cast<unsigned char>(e[0])) && e[0] != '-' &&
                              e[0] != '+'))
                throw error("parse_word: bad exponent in '" + tok + "'");
            try {
                exp = Int(e);
            } catch (const std::invalid_argument&) {
                throw error("parse_word: bad exponent in '" + tok + "'");
            }
        }
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) throw error("parse_word: unknown generator '" + name + "'");
        w.push_back({static_cast<std::size_t>(it - names.begin()), exp});
    }
    return word_normalized(w);
}

std::string render_presentation(const Presentation& p) {
    std::ostringstream os;
    os << "<";
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
        if (i) os << ", ";
        os << p.generators[i];
    }
    os << " | ";
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        if (i) os << ", ";
        os << render_word(p.relators[i], p.generators);
    }
    os << ">";
    return os.str();
}

} // namespace polyz
