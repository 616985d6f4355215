#include "doctest.h"

#include "vlink/codec.hpp"
#include "vlink/diagram.hpp"
#include "vlink/search.hpp"

using namespace vlink;

namespace {

Document parse_doc(const std::string& text) {
    auto r = codec::parse(text);
    REQUIRE(r.ok());
    return *r.document;
}

SignedChordDiagram parse_d(const std::string& text) { return parse_doc(text).diagram; }

}  // namespace

TEST_CASE("diagram accessors") {
    auto d = parse_d("circle: 1+ 2- 1 2");
    CHECK(d.num_chords() == 2);
    CHECK(d.num_circles() == 1);
    CHECK(d.circle_size(0) == 4);
    CHECK(d.sign(0) == 1);
    CHECK(d.sign(1) == -1);
    CHECK(d.writhe() == 0);
    CHECK(d.ends(0)[0] == EndpointPos{0, 0});
    CHECK(d.ends(0)[1] == EndpointPos{0, 2});
    CHECK(d.ends(1)[0] == EndpointPos{0, 1});
    CHECK(d.ends(1)[1] == EndpointPos{0, 3});

    CHECK(d.arc_count() == 4);
    CHECK(d.arc_id(0, 2) == 2);
    CHECK(d.out_arc({0, 0}) == 0);
    CHECK(d.in_arc({0, 0}) == 3);
    CHECK(d.arc_start(3) == EndpointPos{0, 3});
}

TEST_CASE("diagram arcs across circles") {
    auto d = parse_d("circle: 1+ 2+\ncircle: 1 2\ncircle:\n");
    CHECK(d.num_circles() == 3);
    CHECK(d.arc_count() == 5);  // 2 + 2 + one closed arc
    CHECK(d.arc_id(1, 0) == 2);
    CHECK(d.arc_id(2, 0) == 4);
    CHECK(d.in_arc({1, 0}) == 3);
    CHECK(d.writhe() == 2);
}

TEST_CASE("validate catches bad raw input") {
    auto single = [](RawCircle c) {
        RawDiagram raw;
        raw.circles.push_back(std::move(c));
        return validate(raw);
    };

    auto r = single({{{1, 1, 0}}, {}});
    REQUIRE_FALSE(r.ok());
    CHECK(r.errors[0].message == "chord 1 has 1 endpoints");

    r = single({{{1, 1, 0}, {1, 0, 0}, {1, 0, 0}}, {}});
    CHECK(r.errors[0].message == "chord 1 has 3 endpoints");

    r = single({{{1, 0, 0}, {2, 1, 0}, {1, 0, 0}, {2, 0, 0}}, {}});
    REQUIRE_FALSE(r.ok());
    CHECK(r.errors[0].message == "missing sign: chord 1");
    CHECK(r.errors[0].circle == 0);
    CHECK(r.errors[0].position == 0);

    r = single({{{1, 1, 0}, {1, -1, 0}}, {}});
    CHECK(r.errors[0].message == "conflicting signs: chord 1");
    CHECK(r.errors[0].position == 1);

    // tags are all-or-nothing across the whole diagram
    r = single({{{1, 1, 1}, {2, 1, 0}, {1, 0, 2}, {2, 0, 0}}, {}});
    REQUIRE_FALSE(r.ok());
    CHECK(r.errors[0].message == "mixed tagged and untagged endpoints");

    r = single({{{1, 1, 1}, {1, 0, 1}}, {}});
    CHECK(r.errors[0].message == "chord 1 must have one over and one under endpoint");

    r = single({{{1, 1, 0}, {1, 0, 0}}, {5}});
    CHECK(r.errors[0].message == "mark position out of range");
}

TEST_CASE("validate renumbers labels by first occurrence") {
    RawDiagram raw;
    raw.circles.push_back({{{9, -1, 0}, {4, 1, 0}, {9, 0, 0}, {4, 0, 0}}, {}});
    auto r = validate(raw);
    REQUIRE(r.ok());
    CHECK(r.document->diagram.sign(0) == -1);
    CHECK(r.document->diagram.sign(1) == 1);
}

TEST_CASE("document levels") {
    CHECK(level_text(parse_doc("circle: 1+ 2- 1 2").level()) == "signed");
    CHECK(level_text(parse_doc("circle: O1+ U1").level()) == "gauss");
    CHECK(level_text(parse_doc("circle: 1+ * 1").level()) == "twisted-signed");
    CHECK(level_text(parse_doc("circle: O1+ * U1").level()) == "twisted-gauss");
    // no endpoints at all: arrow data holds vacuously
    CHECK(level_text(parse_doc("circle:").level()) == "gauss");
    CHECK(level_text(parse_doc("circle: *").level()) == "twisted-gauss");

    CHECK_THROWS_AS(parse_doc("circle: 1+ 2- 1 2").gauss(), DomainError);
    CHECK_NOTHROW(parse_doc("circle: O1+ U1").gauss());
}

TEST_CASE("blunt and forget_marks strip structure") {
    auto doc = parse_doc("diagram t\ncircle: O1+ * U2- U1 O2 *");
    REQUIRE(doc.arrows);
    auto g = doc.gauss();
    CHECK(blunt(g) == doc.diagram);
    TwistedGaussDiagram tw{g, doc.marks};
    CHECK(forget_marks(tw).diagram == doc.diagram);
    CHECK(forget_marks(tw).arrows == *doc.arrows);
}

TEST_CASE("gauss over and under ends") {
    auto g = parse_doc("circle: O1+ U2+ U1 O2").gauss();
    CHECK(g.over_end(0) == EndpointPos{0, 0});
    CHECK(g.under_end(0) == EndpointPos{0, 2});
    CHECK(g.over_end(1) == EndpointPos{0, 3});
    CHECK(g.under_end(1) == EndpointPos{0, 1});
}

TEST_CASE("marks bookkeeping") {
    auto doc = parse_doc("circle: * 1+ * 1 *");
    CHECK(doc.marks.any());
    // trailing marks wrap around to gap 0
    CHECK(doc.marks.gap_counts[0][0] == 2);
    CHECK(doc.marks.gap_counts[0][1] == 1);
    CHECK(doc.marks.total() == 3);
    CHECK_FALSE(parse_doc("circle: 1+ 1").marks.any());
}

TEST_CASE("state markers") {
    CHECK(marker(0b01, 0) == -1);
    CHECK(marker(0b01, 1) == 1);
    CHECK(count_negative(0b1011) == 3);
}

TEST_CASE("resolve frozen component tables") {
    auto d = parse_d("circle: 1+ 2- 1 2");
    int table[] = {1, 2, 1, 1};
    for (State s = 0; s < 4; ++s) CHECK(resolve(d, s).count() == table[s]);

    auto h = parse_d("circle: 1+ 2+\ncircle: 1 2");
    int htable[] = {2, 1, 1, 2};
    for (State s = 0; s < 4; ++s) CHECK(resolve(h, s).count() == htable[s]);
}

TEST_CASE("resolve structure is a partition of arcs") {
    auto d = parse_d("circle: 1+ 2+ 3+ 1 2 3\ncircle:\n");
    for (State s = 0; s < 8; ++s) {
        auto r = resolve(d, s);
        std::vector<int> seen(d.arc_count(), 0);
        int smallest_prev = -1;
        for (size_t c = 0; c < r.components.size(); ++c) {
            REQUIRE_FALSE(r.components[c].empty());
            int smallest = d.arc_count();
            for (auto [arc, dir] : r.components[c]) {
                seen[arc]++;
                smallest = std::min(smallest, arc);
                CHECK(r.comp_of_arc[arc] == static_cast<int>(c));
                CHECK((dir == 1 || dir == -1));
            }
            // components come sorted by smallest arc and start there, forward
            CHECK(smallest > smallest_prev);
            CHECK(r.components[c][0] == std::pair<int, int>{smallest, 1});
            smallest_prev = smallest;
        }
        for (int k : seen) CHECK(k == 1);
    }
}

TEST_CASE("component counter agrees with resolve") {
    for (const auto& e : enumerate_diagrams(4, 2)) {
        ComponentCounter cc(e.diagram);
        for (State s = 0; s < (1u << e.diagram.num_chords()); ++s)
            CHECK(cc.count(s) == resolve(e.diagram, s).count());
    }
}
