#include "sphspec/specstring.hpp"

#include <cctype>

#include "sphspec/errors.hpp"

namespace sphspec {

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return done() ? '\0' : s[pos]; }
    void skip_spaces() {
        while (!done() && s[pos] == ' ') ++pos;
    }
    bool eat(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", pos);
    }
    bool eat_word(const std::string& w) {
        if (s.compare(pos, w.size(), w) != 0) return false;
        pos += w.size();
        return true;
    }
    unsigned long number() {
        skip_spaces();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected a number", pos);
        unsigned long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<unsigned long>(peek() - '0');
            if (v > 1000000000UL) throw ParseError("number too large", pos);
            ++pos;
        }
        return v;
    }
    long signed_number() {
        skip_spaces();
        bool neg = eat('-');
        long v = static_cast<long>(number());
        return neg ? -v : v;
    }
    void key(const std::string& k) {
        if (!eat_word(k)) throw ParseError("expected \"" + k + "\"", pos);
    }
    void end() {
        skip_spaces();
        if (!done()) throw ParseError("trailing characters", pos);
    }
};

LensParams parse_lens(Cursor& c) {
    c.key("L");
    bool has_d = c.eat('_');
    unsigned long d = has_d ? c.number() : 0;
    c.expect('(');
    unsigned long q = c.number();
    c.skip_spaces();
    c.expect(';');
    std::vector<long> s;
    do {
        long v = c.signed_number();
        unsigned long mult = 1;
        c.skip_spaces();
        if (c.eat('^')) mult = c.number();
        for (unsigned long i = 0; i < mult; ++i) s.push_back(v);
        c.skip_spaces();
    } while (c.eat(','));
    c.expect(')');
    if (!has_d) d = 2 * s.size() - 1;
    return validate_lens(static_cast<unsigned>(d), static_cast<unsigned>(q), s);
}

SmallGroupClass parse_orbifold(Cursor& c) {
    c.key("orbifold:");
    SmallGroupClass cls;
    if (c.eat_word("klein4")) {
        cls.kind = GroupKind::klein_four;
        cls.order = 4;
    } else if (c.eat_word("sym3")) {
        cls.kind = GroupKind::sym3;
        cls.order = 6;
    } else if (c.eat_word("cyclic")) {
        cls.kind = GroupKind::cyclic;
        cls.order = static_cast<unsigned>(c.number());
        if (cls.order < 1 || cls.order > 7) throw ParseError("cyclic order must be 1..7", c.pos);
    } else {
        throw ParseError("unknown orbifold kind", c.pos);
    }
    c.key(":d=");
    cls.d = static_cast<unsigned>(c.number());
    c.expect(':');
    do {
        cls.mult.push_back(static_cast<unsigned>(c.number()));
        c.skip_spaces();
    } while (c.eat(','));
    size_t want = cls.kind == GroupKind::cyclic  ? cls.order / 2 + 1
                  : cls.kind == GroupKind::sym3 ? 2
                                                : 3;
    if (cls.mult.size() != want)
        throw ParseError("expected " + std::to_string(want) + " multiplicities", c.pos);
    try {
        class_to_group(cls); // full structural validation
    } catch (const Error& e) {
        throw ParseError(e.what(), c.pos);
    }
    return cls;
}

FpfGroupSpec parse_spaceform(Cursor& c) {
    c.key("spaceform:");
    FpfGroupSpec sp;
    if (c.eat_word("Q8")) sp.name = FpfName::Q8;
    else if (c.eat_word("P12")) sp.name = FpfName::P12;
    else if (c.eat_word("Q16")) sp.name = FpfName::Q16;
    else if (c.eat_word("P20")) sp.name = FpfName::P20;
    else throw ParseError("unknown space form group", c.pos);
    c.key(":m=");
    sp.m = static_cast<unsigned>(c.number());
    if (c.eat(':')) {
        c.key("h=");
        sp.h = static_cast<unsigned>(c.number());
    }
    size_t at = c.pos;
    try {
        roster(sp);
    } catch (const Error& e) {
        throw ParseError(e.what(), at);
    }
    return sp;
}

} // namespace

ParsedSpec parse_spec(const std::string& text) {
    Cursor c{text};
    c.skip_spaces();
    ParsedSpec out;
    if (c.peek() == 'L') out = parse_lens(c);
    else if (c.peek() == 'o') out = parse_orbifold(c);
    else if (c.peek() == 's') out = parse_spaceform(c);
    else throw ParseError("expected a lens, orbifold, or spaceform spec", c.pos);
    c.end();
    return out;
}

std::string print_spec(const ParsedSpec& spec) {
    if (const auto* l = std::get_if<LensParams>(&spec)) return to_string(*l);
    if (const auto* o = std::get_if<SmallGroupClass>(&spec)) return "orbifold:" + to_string(*o);
    const auto& s = std::get<FpfGroupSpec>(spec);
    return "spaceform:" + to_string(s.name) + ":m=" + std::to_string(s.m) +
           ":h=" + std::to_string(s.h);
}

} // namespace sphspec
