#include <vector>

#include "doctest.h"
#include "tclo/report.hpp"

using namespace tclo;

namespace {

IdealGens squares(const CurveRing& ring) {
    const FieldSpec& fs = ring.field();
    return IdealGens::make(ring, {parse_poly("x^2", fs), parse_poly("y^2", fs),
                                  parse_poly("z^2", fs)});
}

std::vector<std::string> keys_of(const Json& j) {
    std::vector<std::string> out;
    for (auto it = j.begin(); it != j.end(); ++it) out.push_back(it.key());
    return out;
}

} // namespace

TEST_CASE("analysis reports carry exactly the core keys in order") {
    FieldSpec fs(5);
    CurveRing ring = smooth_plane_curve(fs, "x^3+y^3+z^3");
    IdealContext ctx = build_context(squares(ring), 7);
    Json j = analyze_json(ctx, 0, 6);

    auto keys = keys_of(j);
    REQUIRE(keys.size() == 11);
    // Fixed order, fixed names; no decision key on an ideal-level report.
    std::vector<std::string> expect = {"curve",       "char",         "delta",
                                       "genus",       "ideal",        "syzygy_table",
                                       "certificates", "degree_table", "oracle",
                                       "seed",        "version"};
    CHECK(keys == expect);
    CHECK(!j.contains("decision"));

    CHECK(j["char"] == 5);
    CHECK(j["delta"] == 3);
    CHECK(j["genus"] == 1);
    CHECK(j["seed"] == 7);
    CHECK(j["version"] == kVersion);
    CHECK(j["oracle"].is_null());
    CHECK(j["degree_table"].size() == 7);
    CHECK(j["syzygy_table"]["minimal_degree"] == 3);
    CHECK(j["ideal"].size() == 3);
    CHECK(!j["certificates"].empty());
}

TEST_CASE("decision reports add the element verdict and the oracle") {
    FieldSpec fs(5);
    CurveRing ring = smooth_plane_curve(fs, "x^3+y^3+z^3");
    IdealContext ctx = build_context(squares(ring), 7);
    HomPoly el = parse_poly("x*y*z", fs);
    Decision d = decide_element(ctx, el);
    Json j = decide_json(ctx, el, d, 0, 6);

    REQUIRE(j.contains("decision"));
    const Json& dec = j["decision"];
    CHECK(dec["verdict"] == "InClosure");
    CHECK(dec["rule"] == "primary-syzygy-inclusion");
    CHECK(dec["degree"] == 3);
    CHECK(dec["caveat"] == "AlsoPlusClosure");
    CHECK(dec["caveat_phrase"] == caveat_phrase(Caveat::AlsoPlusClosure, fs));

    REQUIRE(j["oracle"].is_object());
    CHECK(j["oracle"]["in_frobenius_closure"] == true);
    CHECK(j["oracle"]["e"] == 1);
    CHECK(j["oracle"]["q"] == 5);
    CHECK(!j["oracle"]["witnesses"].empty());
}

TEST_CASE("reports are byte-identical across independent rebuilds") {
    auto make = [] {
        FieldSpec fs(7);
        CurveRing ring = smooth_plane_curve(fs, "x^3+y^3+z^3");
        IdealContext ctx = build_context(squares(ring), 11);
        return analyze_json(ctx, 0, 6).dump(2);
    };
    CHECK(make() == make());

    auto make_decide = [] {
        FieldSpec fs(7);
        CurveRing ring = smooth_plane_curve(fs, "x^3+y^3+z^3");
        IdealContext ctx = build_context(squares(ring), 11);
        HomPoly el = parse_poly("x*y*z", fs);
        Decision d = decide_element(ctx, el);
        return decide_json(ctx, el, d, 0, 6).dump(2);
    };
    CHECK(make_decide() == make_decide());
}

TEST_CASE("caveat phrases spell out the validity domain") {
    FieldSpec fp(7), f0;
    CHECK(caveat_phrase(Caveat::DefiniteForGivenP, fp) == "valid at this p");
    CHECK(caveat_phrase(Caveat::DefiniteForGivenP, f0) == "valid in characteristic zero");
    CHECK(caveat_phrase(Caveat::Char0OrLargeP, fp) == "char 0 or p >> 0");
    CHECK(caveat_phrase(Caveat::Char0Only, fp) == "characteristic zero only");
    CHECK(caveat_phrase(Caveat::AlsoPlusClosure, fp) ==
          "valid at this p; in the graded plus closure");
    CHECK(caveat_phrase(Caveat::FrobeniusClosure, fp) ==
          "valid at this p; Frobenius closure");
}

TEST_CASE("scan rows carry the cell coordinates and the tables") {
    FieldSpec fs(5);
    CurveRing ring = smooth_plane_curve(fs, "x^3+y^3+z^3");
    IdealContext ctx = build_context(squares(ring), 3);
    auto rows = degree_profile(ctx, 0, 6);
    Json j = scan_row_json(5, 3, 2, ctx, rows, 17);

    auto keys = keys_of(j);
    std::vector<std::string> expect = {"p", "delta", "a", "degree_table", "certificates",
                                       "seed", "ms"};
    CHECK(keys == expect);
    CHECK(j["p"] == 5);
    CHECK(j["delta"] == 3);
    CHECK(j["a"] == 2);
    CHECK(j["ms"] == 17);
    CHECK(j["seed"] == 3);
    CHECK(j["degree_table"].size() == 7);
}

TEST_CASE("text renderers spell out the verdicts and phrases") {
    FieldSpec fs(5);
    CurveRing ring = smooth_plane_curve(fs, "x^3+y^3+z^3");
    IdealContext ctx = build_context(squares(ring), 7);
    HomPoly el = parse_poly("x*y*z", fs);
    Decision d = decide_element(ctx, el);

    std::string at = analyze_text(ctx, 0, 6);
    CHECK(at.find("x^3+y^3+z^3") != std::string::npos);
    CHECK(at.find("delta") != std::string::npos);

    std::string dt = decide_text(ctx, el, d, 0, 6);
    CHECK(dt.find("InClosure") != std::string::npos);
    CHECK(dt.find("valid at this p") != std::string::npos);
    CHECK(dt.find("x*y*z") != std::string::npos);
}

TEST_CASE("syzygy listings and probe reports have their own shapes") {
    FieldSpec fs(5);
    CurveRing ring = smooth_plane_curve(fs, "x^3+y^3+z^3");
    IdealGens I = squares(ring);

    Json sj = syzygies_json(I, 2, 6);
    REQUIRE(sj["table"].size() == 5);
    CHECK(sj["table"][0]["k"] == 2);
    CHECK(sj["table"][0]["dim"] == 0);
    CHECK(sj["table"][1]["k"] == 3);
    CHECK(sj["table"][1]["dim"] == 1);
    std::string st = syzygies_text(I, 2, 6);
    CHECK(st.find("3") != std::string::npos);

    HomPoly el = parse_poly("x*y*z", fs);
    OracleReport rep = frobenius_closure_probe(I, el);
    Json fj = frobtest_json(I, el, rep);
    CHECK(fj["oracle"]["in_frobenius_closure"] == true);
    CHECK(fj["oracle"]["q"] == 5);
    CHECK(fj["oracle"]["e"] == 1);
    CHECK(fj["version"] == kVersion);
    std::string ft = frobtest_text(I, el, rep);
    CHECK(ft.find("q=5") != std::string::npos);
}
