#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sphspec/errors.hpp"
#include "sphspec/specstring.hpp"

using namespace sphspec;

TEST_CASE("lens round trips") {
    ParsedSpec p = parse_spec("L(11;1,2,3)");
    const auto& l = std::get<LensParams>(p);
    CHECK(l.d == 5);
    CHECK(l.q == 11);
    CHECK(l.s == std::vector<unsigned>({1, 2, 3}));
    CHECK(print_spec(p) == "L(11;1,2,3)");

    CHECK(print_spec(parse_spec("L_4(5;1,2)")) == "L_4(5;1,2)");
    CHECK(print_spec(parse_spec(" L( 11 ; 1 , 2 , 3 ) ")) == "L(11;1,2,3)");
}

TEST_CASE("lens item sugar") {
    // repetition and negatives fold into the representative range
    auto a = std::get<LensParams>(parse_spec("L(11;1^2,2)"));
    CHECK(a.s == std::vector<unsigned>({1, 1, 2}));
    auto b = std::get<LensParams>(parse_spec("L(11;-1,2,3)"));
    CHECK(b.s == std::vector<unsigned>({1, 2, 3}));
    auto c = std::get<LensParams>(parse_spec("L(11;1,9,3)"));
    CHECK(c.s == std::vector<unsigned>({1, 2, 3}));
}

TEST_CASE("orbifold round trips") {
    ParsedSpec p = parse_spec("orbifold:cyclic5:d=5:2,1,1");
    const auto& c = std::get<SmallGroupClass>(p);
    CHECK(c.kind == GroupKind::cyclic);
    CHECK(c.order == 5);
    CHECK(c.d == 5);
    CHECK(c.mult == std::vector<unsigned>({2, 1, 1}));
    CHECK(print_spec(p) == "orbifold:cyclic5:d=5:2,1,1");

    CHECK(print_spec(parse_spec("orbifold:klein4:d=5:2,2,2")) == "orbifold:klein4:d=5:2,2,2");
    CHECK(print_spec(parse_spec("orbifold:sym3:d=5:1,2")) == "orbifold:sym3:d=5:1,2");
}

TEST_CASE("spaceform round trips") {
    ParsedSpec p = parse_spec("spaceform:Q16:m=3:h=1");
    const auto& s = std::get<FpfGroupSpec>(p);
    CHECK(s.name == FpfName::Q16);
    CHECK(s.m == 3);
    CHECK(s.h == 1);
    CHECK(print_spec(p) == "spaceform:Q16:m=3:h=1");
    CHECK(print_spec(parse_spec("spaceform:Q8:m=2")) == "spaceform:Q8:m=2:h=0");
}

TEST_CASE("errors carry positions") {
    auto offset_of = [](const std::string& text) -> size_t {
        try {
            parse_spec(text);
        } catch (const ParseError& e) {
            return e.offset;
        }
        return static_cast<size_t>(-1);
    };
    CHECK(offset_of("L(11;1,2") == 8);       // missing ')'
    CHECK(offset_of("L(11 1,2)") == 5);      // missing ';'
    CHECK(offset_of("X(11;1)") == 0);
    CHECK(offset_of("L(11;1,2,3)x") == 11);  // trailing garbage
    CHECK_THROWS_AS(parse_spec("orbifold:dihedral:d=3:1"), ParseError);
    CHECK_THROWS_AS(parse_spec("orbifold:cyclic9:d=3:1,1,1,1,1"), ParseError);
    CHECK_THROWS_AS(parse_spec("orbifold:klein4:d=3:1,1"), ParseError);     // wrong count
    CHECK_THROWS_AS(parse_spec("orbifold:cyclic4:d=3:4,0,0"), ParseError);  // order not exact
    CHECK_THROWS_AS(parse_spec("spaceform:Q9:m=1"), ParseError);
    CHECK_THROWS_AS(parse_spec("spaceform:Q8:m=1:h=1"), ParseError);       // h forced to 0
    CHECK_THROWS_AS(parse_spec("L(6;2,4)"), Error);                        // gcd violation
}
