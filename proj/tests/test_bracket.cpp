#include "doctest.h"

#include <cstdlib>
#include <string>

#include "vlink/bracket.hpp"
#include "vlink/codec.hpp"
#include "vlink/search.hpp"

using namespace vlink;

namespace {

SignedChordDiagram parse_d(const std::string& text) {
    auto r = codec::parse(text);
    REQUIRE(r.ok());
    return r.document->diagram;
}

std::string br(const std::string& text) { return kauffman_bracket(parse_d(text)).text(); }

}  // namespace

TEST_CASE("bracket fixtures") {
    CHECK(kauffman_bracket(SignedChordDiagram{}).text() == "1");
    CHECK(br("circle:") == "-A^2-A^-2");
    CHECK(br("circle:\ncircle:") == "A^4+2+A^-4");
    CHECK(br("circle: 1+ 1") == "A^5+A");
    CHECK(br("circle: 1- 1") == "A^-1+A^-5");
    CHECK(br("circle: 1+ 2+\ncircle: 1 2") == "A^6+A^2+A^-2+A^-6");
    CHECK(br("circle: 1- 2-\ncircle: 1 2") == "A^6+A^2+A^-2+A^-6");
    CHECK(br("circle: 1+ 2+ 1 2") == "-A^4-A^2-1+A^-6");
    CHECK(br("circle: 1+ 2- 1 2") == "-A^2-A^-2");
    CHECK(br("circle: 1- 2+ 1 2") == "-A^2-A^-2");
    CHECK(br("circle: 1- 2- 1 2") == "A^6-1-A^-2-A^-4");
    CHECK(br("circle: 1+ 2+ 3+ 1 2 3") == "A^7+A^3+A^-1-A^-9");
    CHECK(br("circle: 1- 2- 3- 1 2 3") == "-A^9+A+A^-3+A^-7");
}

TEST_CASE("jones f fixtures") {
    CHECK(jones_f(SignedChordDiagram{}).text() == "1");
    CHECK(jones_f(parse_d("circle:")).text() == "-A^2-A^-2");
    // both kinks normalize to the unknot value
    CHECK(jones_f(parse_d("circle: 1+ 1")).text() == "-A^2-A^-2");
    CHECK(jones_f(parse_d("circle: 1- 1")).text() == "-A^2-A^-2");
    CHECK(jones_f(parse_d("circle: 1+ 2+ 3+ 1 2 3")).text() ==
          "-A^-2-A^-6-A^-10+A^-18");
    CHECK(jones_f(parse_d("circle: 1- 2- 3- 1 2 3")).text() ==
          "A^18-A^10-A^6-A^2");
}

TEST_CASE("bracket mirror relation") {
    for (const auto& e : enumerate_diagrams(3, 2)) {
        std::vector<int> flipped;
        for (int s : e.diagram.signs()) flipped.push_back(-s);
        SignedChordDiagram m(e.diagram.circles(), flipped);
        CHECK(kauffman_bracket(m) == kauffman_bracket(e.diagram).mirror());
        CHECK(jones_f(m) == jones_f(e.diagram).mirror());
    }
}

TEST_CASE("bracket of disjoint union gains a loop factor") {
    for (const auto& e : enumerate_slice(3, 1)) {
        auto circles = e.diagram.circles();
        circles.push_back({});
        SignedChordDiagram u(circles, e.diagram.signs());
        CHECK(kauffman_bracket(u) == kauffman_bracket(e.diagram) * LaurentPoly::loop_value());
    }
}

TEST_CASE("bracket mod4 fixtures") {
    auto m4 = [](const std::string& t) {
        return mod4_text(mod4_class(kauffman_bracket(codec::parse(t).document->diagram)));
    };
    CHECK(m4("circle: 1+ 2+ 3+ 1 2 3") == "uniform 3");
    CHECK(m4("circle: 1+ 2+\ncircle: 1 2") == "uniform 2");
    CHECK(m4("circle: 1+ 2+ 1 2") == "mixed");
    CHECK(m4("circle: 1- 2- 1 2") == "mixed");
}

TEST_CASE("bracket threading is deterministic") {
    // 14 chords crosses the worker threshold; seven kinks of each sign chain
    // up to a plain unknot bracket
    std::string text = "circle:";
    for (int k = 1; k <= 14; ++k) {
        std::string lbl = std::to_string(k);
        text += " " + lbl + (k % 2 ? "+" : "-") + " " + lbl;
    }
    auto d = parse_d(text);
    REQUIRE(d.num_chords() == 14);
    auto got = kauffman_bracket(d);
    CHECK(got.text() == "-A^2-A^-2");

    // serial state-sum reference
    LaurentPoly ref = LaurentPoly::zero();
    ComponentCounter cc(d);
    for (State s = 0; s < (1u << 14); ++s) {
        auto t = LaurentPoly::loop_value().pow(cc.count(s));
        t.mul_monomial(1, 14 - 2 * count_negative(s));
        ref += t;
    }
    CHECK(got == ref);
    CHECK(kauffman_bracket(d) == got);
}

TEST_CASE("bracket caps") {
    auto tre = parse_d("circle: 1+ 2+ 3+ 1 2 3");
    CHECK_THROWS_AS(kauffman_bracket(tre, 2), CapError);
    CHECK_NOTHROW(kauffman_bracket(tre, 3));
    CHECK_THROWS_AS(kauffman_bracket(tre, 31), CapError);
    CHECK_THROWS_WITH(kauffman_bracket(tre, 2),
                      "bracket: 3 chords exceeds the cap of 2");
    CHECK_THROWS_WITH(kauffman_bracket(tre, 40),
                      "bracket: chord caps above 30 are not supported");

    CHECK(bracket_chord_cap() == 24);
    setenv("VLINK_BRACKET_CHORD_CAP", "2", 1);
    CHECK(bracket_chord_cap() == 2);
    CHECK_THROWS_AS(kauffman_bracket(tre), CapError);
    CHECK_NOTHROW(kauffman_bracket(tre, 5));
    setenv("VLINK_BRACKET_CHORD_CAP", "junk", 1);
    CHECK(bracket_chord_cap() == 24);
    unsetenv("VLINK_BRACKET_CHORD_CAP");
    CHECK(bracket_chord_cap() == 24);
}
