#include <polyz/report.hpp>
#include <polyz/textio.hpp>

#include <doctest.h>

#include <random>

using namespace polyz;

TEST_CASE("laurent rendering on fixed examples") {
    CHECK(render_laurent(LaurentPoly()) == "0");
    CHECK(render_laurent(LaurentPoly::one()) == "1");
    CHECK(render_laurent(LaurentPoly::t_power(-1)) == "t^-1");
    LaurentPoly p = LaurentPoly::t_power(-1) - LaurentPoly::constant(2) +
                    LaurentPoly(IntPoly::constant(3), 2);
    CHECK(render_laurent(p) == "t^-1 - 2 + 3*t^2");
    CHECK(parse_laurent("t^-1 - 2 + 3*t^2") == p);
    CHECK(parse_laurent("-2+t^-1+3*t^2") == p);
    CHECK(parse_laurent("3 t^2 - 2 + t^-1") == p); // '*' optional
}

TEST_CASE("laurent render/parse round trip on random values") {
    std::mt19937 rng(601);
    std::uniform_int_distribution<int> dc(-9, 9), dd(0, 4), ds(-3, 3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Int> c(dd(rng) + 1);
        for (auto& e : c) e = dc(rng);
        LaurentPoly p(IntPoly(std::move(c)), ds(rng));
        CHECK(parse_laurent(render_laurent(p)) == p);
    }
}

TEST_CASE("malformed laurent input is rejected") {
    CHECK_THROWS_AS(parse_laurent(""), error);
    CHECK_THROWS_AS(parse_laurent("t^"), error);
    CHECK_THROWS_AS(parse_laurent("2 3"), error);
    CHECK_THROWS_AS(parse_laurent("x + 1"), error);
    CHECK_THROWS_AS(parse_laurent("+"), error);
}

TEST_CASE("word rendering and parsing") {
    std::vector<std::string> names = {"t", "x", "y"};
    Word w = {{0, 1}, {1, 1}, {0, -1}, {2, -5}};
    CHECK(render_word(w, names) == "t x t^-1 y^-5");
    CHECK(parse_word("t x t^-1 y^-5", names) == w);
    CHECK(render_word({}, names) == "1");
    CHECK(parse_word("1", names).empty());
    CHECK_THROWS_AS(parse_word("z", names), error);
    CHECK_THROWS_AS(parse_word("t^b", names), error);

    Presentation p;
    p.generators = names;
    p.relators = {w};
    CHECK(render_presentation(p) == "<t, x, y | t x t^-1 y^-5>");
}

TEST_CASE("report JSON round trip with deterministic key order") {
    DefReport r;
    r.group_id = "Z4";
    r.lo = -2;
    r.hi = -2;
    r.exact = true;
    r.hirsch = 4;
    r.orientable = true;
    r.beta_q = 4;
    r.beta_f2 = 4;
    DefBound b;
    b.dir = BoundDir::Upper;
    b.value = -2;
    b.rule = "lemma1_upper";
    b.citation = "def <= 2 - beta_1 over R for an R-orientable PD4 group with chi = 0";
    b.inputs = "beta_1(Q) = 4";
    r.bounds.push_back(b);

    ReportOptions opts;
    opts.timestamp = false;
    Json j = report_to_json(r, opts);
    DefReport back = report_from_json(j);
    CHECK(back.group_id == r.group_id);
    CHECK(back.lo == r.lo);
    CHECK(back.hi == r.hi);
    CHECK(back.exact == r.exact);
    CHECK(back.hirsch == r.hirsch);
    CHECK(back.orientable == r.orientable);
    CHECK(back.beta_q == r.beta_q);
    CHECK(back.beta_f2 == r.beta_f2);
    CHECK_FALSE(back.beta_f3.has_value());
    REQUIRE(back.bounds.size() == 1);
    CHECK(back.bounds[0].rule == b.rule);
    CHECK(back.bounds[0].value == b.value);
    CHECK(back.bounds[0].dir == b.dir);

    // identical input => byte-identical output without the timestamp
    CHECK(report_to_string(r, opts) == report_to_string(back, opts));
    // timestamped output differs only by the generated_at field
    Json jt = report_to_json(r, ReportOptions{});
    CHECK(jt.contains("generated_at"));
    jt.erase("generated_at");
    CHECK(jt == j);
}

TEST_CASE("report parser rejects missing fields and empty citations") {
    DefReport r;
    r.group_id = "x";
    ReportOptions opts;
    opts.timestamp = false;
    Json j = report_to_json(r, opts);
    Json broken = j;
    broken.erase("deficiency");
    CHECK_THROWS_AS(report_from_json(broken), error);
    Json bad_citation = j;
    Json jb;
    jb["rule"] = "r";
    jb["direction"] = "lower";
    jb["value"] = 0;
    jb["citation"] = "";
    jb["inputs"] = "";
    bad_citation["deficiency"]["justifications"].push_back(jb);
    CHECK_THROWS_AS(report_from_json(bad_citation), error);
}
