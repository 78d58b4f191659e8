#include "deutsch/format.hpp"

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>

namespace deutsch {

namespace {

[[noreturn]] void fail(std::string_view text) {
    throw std::invalid_argument("malformed exact-number literal: '" + std::string(text) + "'");
}

struct Cursor {
    std::string_view rest;
    std::string_view whole;

    bool done() const { return rest.empty(); }

    bool eat(char c) {
        if (rest.empty() || rest.front() != c)
            return false;
        rest.remove_prefix(1);
        return true;
    }

    bool eat(std::string_view prefix) {
        if (!rest.starts_with(prefix))
            return false;
        rest.remove_prefix(prefix.size());
        return true;
    }

    // -1 or +1; a sign character is optional
    std::int64_t sign() {
        if (eat('-'))
            return -1;
        eat('+');
        return 1;
    }

    std::int64_t digits() {
        if (rest.empty() || !std::isdigit(static_cast<unsigned char>(rest.front())))
            fail(whole);
        std::int64_t v = 0;
        while (!rest.empty() && std::isdigit(static_cast<unsigned char>(rest.front()))) {
            v = checked_add(checked_mul(v, 10), rest.front() - '0');
            rest.remove_prefix(1);
        }
        return v;
    }

    std::int64_t integer() { return sign() * digits(); }

    Rat rational() {
        std::int64_t n = integer();
        if (eat('/'))
            return Rat(n, digits());
        return Rat(n);
    }

    // Magnitude of one "b" coefficient: digits, digits/digits, or empty
    // (meaning 1) when the unit marker follows immediately.
    Rat coefficient(std::string_view unit) {
        if (rest.starts_with(unit))
            return Rat(1);
        std::int64_t n = digits();
        if (eat('/'))
            return Rat(n, digits());
        return Rat(n);
    }
};

}  // namespace

Rat parse_rat(std::string_view text) {
    Cursor c{text, text};
    Rat r = c.rational();
    if (!c.done())
        fail(text);
    return r;
}

namespace {

// Shared shape of "a", "bu", "a+bu", "a-bu" with unit marker u ("i" or
// "√2"). Returns the two components; either may be zero.
std::pair<Rat, Rat> parse_two_part(std::string_view text, std::string_view unit) {
    Cursor c{text, text};
    std::int64_t s1 = c.sign();
    Rat first = c.coefficient(unit);
    if (c.eat(unit)) {  // pure second component, e.g. "2i", "-√2"
        if (!c.done())
            fail(text);
        return {Rat(0), Rat(s1) * first};
    }
    Rat re = Rat(s1) * first;
    if (c.done())
        return {re, Rat(0)};
    std::int64_t s2 = c.eat('-') ? -1 : (c.eat('+') ? 1 : 0);
    if (s2 == 0)
        fail(text);
    Rat second = c.coefficient(unit);
    if (!c.eat(unit) || !c.done())
        fail(text);
    return {re, Rat(s2) * second};
}

}  // namespace

GaussRat parse_gauss(std::string_view text) {
    auto [re, im] = parse_two_part(text, "i");
    return {re, im};
}

Surd2 parse_surd(std::string_view text) {
    auto [a, b] = parse_two_part(text, "√2");
    if (!a.is_integer() || !b.is_integer())
        fail(text);
    return {a.num(), b.num()};
}

Distribution4 parse_distribution(std::string_view text) {
    Cursor c{text, text};
    if (!c.eat('('))
        fail(text);
    Distribution4 d;
    for (std::size_t k = 0; k < 4; ++k) {
        if (k && !c.eat(','))
            fail(text);
        d.p[k] = c.rational();
    }
    if (!c.eat(')') || !c.done())
        fail(text);
    return d;
}

}  // namespace deutsch
