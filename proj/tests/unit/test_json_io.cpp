#include <doctest.h>

#include "hyperforge/errors.hpp"
#include "hyperforge/json_io.hpp"

using namespace hyperforge;
using io::Json;

namespace {

bool same_tables(const FiniteHyperfield& a, const FiniteHyperfield& b) {
    if (a.size() != b.size() || a.one() != b.one()) return false;
    for (int x = 0; x < a.size(); ++x) {
        if (a.neg(x) != b.neg(x)) return false;
        for (int y = 0; y < a.size(); ++y) {
            if (a.mul(x, y) != b.mul(x, y) || a.add(x, y) != b.add(x, y)) return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("hyperfield JSON round trip") {
    for (const auto& h : {krasner_quotient(make_finite_field(9), 2), from_group(FiniteAbelianGroup({2, 2})),
                          krasner_quotient(make_finite_field(16), 3), from_group(FiniteAbelianGroup())}) {
        const Json j = io::to_json(h);
        CHECK(j.at("n") == h.size());
        CHECK(same_tables(io::hyperfield_from_json(j), h));
        CHECK(same_tables(io::hyperfield_from_json(Json::parse(j.dump())), h));
    }
    const Json k = io::to_json(from_group(FiniteAbelianGroup()));
    CHECK(k.at("hyperadd")[1][1] == Json({0, 1}));
}

TEST_CASE("malformed hyperfield JSON is rejected") {
    const Json good = io::to_json(krasner_quotient(make_finite_field(5), 2));
    auto without = [&](const char* key) {
        Json j = good;
        j.erase(key);
        return j;
    };
    for (const char* key : {"n", "one", "mul", "neg", "hyperadd"}) CHECK_THROWS_AS(io::hyperfield_from_json(without(key)), MalformedError);

    Json j = good;
    j["mul"][1][1] = 7;
    CHECK_THROWS_AS(io::hyperfield_from_json(j), MalformedError);
    j = good;
    j["hyperadd"][1][2] = Json::array();
    CHECK_THROWS_AS(io::hyperfield_from_json(j), MalformedError);
    j = good;
    j["hyperadd"].erase(0);
    CHECK_THROWS_AS(io::hyperfield_from_json(j), MalformedError);
    j = good;
    j["mul"][1][2] = 0;
    CHECK_THROWS_AS(io::hyperfield_from_json(j), MalformedError);
    CHECK_THROWS_AS(io::hyperfield_from_json(Json::array()), MalformedError);
}

TEST_CASE("reports serialize with named axioms and no clock") {
    const auto bad = from_group(FiniteAbelianGroup::cyclic(2));
    const Json r = io::to_json(verify_axioms(bad));
    CHECK(r.at("all_pass") == false);
    CHECK(r.at("axioms").size() == 6);
    CHECK(r.at("axioms")[1].at("name") == "associativity");
    CHECK(r.at("axioms")[1].at("counterexample").is_array());
    CHECK(r.at("axioms")[0].at("counterexample").is_null());

    const auto fam = build_witness_family(CaseTag::gauss(), 3);
    const Json c = io::certificate_json(fam, independence_certificate(fam), 2, std::nullopt);
    CHECK(c.at("case") == "gauss");
    CHECK(c.at("k") == 3);
    CHECK(c.at("rank") == 3);
    CHECK(c.at("oracle").at("relation").is_null());
    CHECK_FALSE(c.contains("timestamp"));
    CHECK(c.dump() == io::certificate_json(fam, independence_certificate(fam), 2, std::nullopt).dump());

    const auto g = geometry_of(extension_quotient(2, 3));
    const auto back = io::geometry_from_json(io::to_json(g));
    CHECK(back.points == 7);
    CHECK(back.lines == g.lines);
}
