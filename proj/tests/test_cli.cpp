#include <catch2/catch_amalgamated.hpp>

#include "obst/cli.hpp"
#include "oracles.hpp"

using namespace obst;

namespace {

json pts(std::initializer_list<std::array<const char*, 2>> coords) {
    json a = json::array();
    for (const auto& c : coords) a.push_back(json::array({c[0], c[1]}));
    return a;
}

json triangle_plus_vertex() {
    json j;
    j["n"] = 4;
    j["edges"] = {{1, 2}, {2, 3}, {1, 3}};
    j["points"] = pts({{"12", "10"}, {"5", "1"}, {"4", "2"}, {"10", "5"}});
    return j;
}

} // namespace

TEST_CASE("rational string round trip") {
    CHECK(to_string(parse_rational("3/6")) == "1/2");
    CHECK(to_string(parse_rational("-14/7")) == "-2");
    CHECK(to_string(parse_rational("5")) == "5");
    CHECK(to_string(parse_rational("+9/12")) == "3/4");
    CHECK_THROWS_AS(parse_rational("1/0"), SchemaError);
    CHECK_THROWS_AS(parse_rational("a/2"), SchemaError);
    CHECK_THROWS_AS(parse_rational(""), SchemaError);
    CHECK_THROWS_AS(parse_rational("1/+2"), SchemaError);
}

TEST_CASE("rational round trip is exact on random values") {
    Rng rng(12001);
    for (int i = 0; i < 200; ++i) {
        const Rat v = oracle::random_rational(rng, 1000000, 999983);
        CHECK(parse_rational(to_string(v)) == v);
    }
}

TEST_CASE("instance parsing and validation") {
    const Instance inst = parse_instance(triangle_plus_vertex());
    CHECK(inst.graph.n == 4);
    CHECK(inst.graph.edges.size() == 3);
    CHECK(inst.graph.has_edge(0, 1));
    REQUIRE(inst.points);
    CHECK((*inst.points)[0] == Point{Rat(12), Rat(10)});

    json bad = triangle_plus_vertex();
    bad["edges"].push_back({4, 5});
    CHECK_THROWS_AS(parse_instance(bad), SchemaError);
    bad = triangle_plus_vertex();
    bad["edges"].push_back({2, 2});
    CHECK_THROWS_AS(parse_instance(bad), SchemaError);
    bad = triangle_plus_vertex();
    bad["points"][1] = {"5", "1/0"};
    CHECK_THROWS_AS(parse_instance(bad), SchemaError);
    bad = triangle_plus_vertex();
    bad["points"][1] = bad["points"][0];
    CHECK_THROWS_AS(parse_instance(bad), SchemaError);
    bad = triangle_plus_vertex();
    bad.erase("n");
    CHECK_THROWS_AS(parse_instance(bad), SchemaError);
}

TEST_CASE("instance serialization round trip") {
    json j = triangle_plus_vertex();
    j["obstacles"] = json::array();
    j["obstacles"].push_back({{"type", "point"}, {"at", {"7/2", "1/3"}}});
    json poly;
    poly["type"] = "polygon";
    poly["vertices"] = pts({{"0", "0"}, {"1", "0"}, {"1", "1"}});
    j["obstacles"].push_back(poly);
    j["obstacles"].push_back({{"type", "face"}, {"id", 0}});
    const Instance inst = parse_instance(j);
    const Instance again = parse_instance(instance_to_json(inst));
    CHECK(again.graph == inst.graph);
    CHECK(*again.points == *inst.points);
    REQUIRE(again.obstacles.size() == 3);
    CHECK(std::get<PointObstacle>(again.obstacles[0]).at ==
          std::get<PointObstacle>(inst.obstacles[0]).at);
}

TEST_CASE("verify command") {
    json j = triangle_plus_vertex();
    j["obstacles"] = json::array({json{{"type", "face"}, {"id", 0}}});
    const cli::CommandOutput out = cli::cmd_verify(parse_instance(j));
    CHECK(out.report["results"]["valid"] == true);
    CHECK(out.report["results"]["pairs"].size() == 6);

    // A non-complete graph with no obstacles is invalid.
    const cli::CommandOutput bad = cli::cmd_verify(parse_instance(triangle_plus_vertex()));
    CHECK(bad.report["results"]["valid"] == false);
    CHECK(bad.report["results"]["violations"].size() == 3);
}

TEST_CASE("minimize command with a certificate that re-verifies") {
    const cli::CommandOutput out =
        cli::cmd_minimize(parse_instance(triangle_plus_vertex()), "faces", 0, true);
    CHECK(out.report["results"]["count"] == 1);
    // Round-trip the certificate through verify.
    const Instance cert = parse_instance(out.report["results"]["certificate"]);
    const cli::CommandOutput check = cli::cmd_verify(cert);
    CHECK(check.report["results"]["valid"] == true);
    REQUIRE(out.svg);
    CHECK(out.svg->find("<svg") != std::string::npos);
}

TEST_CASE("minimize rejects non-simple instances with exit-code semantics") {
    json j;
    j["n"] = 3;
    j["edges"] = {{1, 2}};
    j["points"] = pts({{"0", "0"}, {"2", "0"}, {"4", "0"}});
    CHECK_THROWS_AS(cli::cmd_minimize(parse_instance(j), "faces", 0, false),
                    PreconditionError);
}

TEST_CASE("sot command compares two instances") {
    json a = triangle_plus_vertex();
    json b = triangle_plus_vertex();
    // Translate: identical super-order type.
    b["points"] = pts({{"13", "3"}, {"6", "-6"}, {"5", "-5"}, {"11", "-2"}});
    const cli::CommandOutput out =
        cli::cmd_sot(parse_instance(a), parse_instance(b));
    CHECK(out.report["results"]["equal"] == true);
    CHECK(out.report["results"]["a"]["simple"] == true);
    CHECK(out.report["results"]["a"]["pstar_sign"] != 0);
    CHECK(out.report["results"]["a"]["r"] == 96);

    // A genuinely different placement: the report names the first
    // differing sextuple.
    json c = triangle_plus_vertex();
    c["points"] = pts({{"0", "7"}, {"3", "1"}, {"9", "2"}, {"5", "9"}});
    const cli::CommandOutput diff =
        cli::cmd_sot(parse_instance(a), parse_instance(c));
    if (diff.report["results"]["equal"] == false)
        CHECK(diff.report["results"].contains("first_difference"));
}

TEST_CASE("perturb command rewrites the instance") {
    json j;
    j["n"] = 4;
    j["edges"] = json::array();
    j["points"] = pts({{"0", "0"}, {"2", "0"}, {"4", "0"}, {"1", "3"}});
    const cli::CommandOutput out = cli::cmd_perturb(parse_instance(j), 21);
    REQUIRE(out.instance);
    const Instance moved = parse_instance(*out.instance);
    CHECK(is_simple(*moved.points));
    CHECK(out.report["results"]["changed"] == true);
}

TEST_CASE("slab command") {
    Rng rng(12002);
    json j;
    j["n"] = 6;
    j["edges"] = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}};
    PointSequence points;
    do {
        points = random_integer_points(6, 1296, rng);
    } while (!is_simple(points));
    j["points"] = json::array();
    for (const Point& p : points)
        j["points"].push_back({to_string(p.x), to_string(p.y)});
    const cli::CommandOutput out = cli::cmd_slab(parse_instance(j), 3);
    CHECK(out.report["results"]["m"] == 2);
    for (const json& slab : out.report["results"]["slabs"])
        CHECK(slab["min_count"].get<int>() <=
              out.report["results"]["whole_count"].get<int>());
}

TEST_CASE("census command saturates quickly at n = 3") {
    const cli::CommandOutput out = cli::cmd_census(3, 60, 9);
    const auto distinct = out.report["results"]["distinct_types"].get<std::size_t>();
    const auto r = out.report["results"]["r"].get<std::size_t>();
    CHECK(r == 6);
    CHECK(distinct >= 1);
    CHECK(distinct <= 64); // never exceeds 2^r
    // Saturation: the second half of the samples reveals nothing new.
    for (const json& idx : out.report["results"]["new_type_at_sample"])
        CHECK(idx.get<int>() < 30);
}

TEST_CASE("bounds command echoes defaults and flags") {
    const cli::CommandOutput out = cli::cmd_bounds(1024, 1.0, 0.01, 1.0);
    CHECK(out.report["log_convention"].get<std::string>().find("log2") == 0);
    CHECK(out.report["results"]["slab_chain"]["k"] == 10);
    CHECK(out.report["results"]["hhat"]["h"] == 2); // 1024/(4*100) = 2.56
}

TEST_CASE("ordertype-gap command always emits a report") {
    const cli::CommandOutput out = cli::cmd_ordertype_gap(4, 3, 123);
    CHECK(out.report["results"].contains("found"));
    if (out.report["results"]["found"] == true) {
        const json& pair = out.report["results"]["pair"];
        CHECK(pair["order_type_equal"] == true);
        CHECK(pair["super_order_equal"] == false);
        CHECK(pair["count_a"] != pair["count_b"]);
    }
}

TEST_CASE("every command is byte-deterministic") {
    auto dump_twice = [](auto&& run) {
        const std::string first = dump_json(run().report);
        const std::string second = dump_json(run().report);
        CHECK(first == second);
        return first;
    };
    json cert = triangle_plus_vertex();
    cert["obstacles"] = json::array({json{{"type", "face"}, {"id", 0}}});
    dump_twice([&] { return cli::cmd_verify(parse_instance(cert)); });
    dump_twice([&] {
        return cli::cmd_minimize(parse_instance(triangle_plus_vertex()), "faces", 0, false);
    });
    dump_twice([&] {
        return cli::cmd_search(parse_instance(triangle_plus_vertex()), 30, 7, false);
    });
    dump_twice([&] { return cli::cmd_sot(parse_instance(triangle_plus_vertex()), {}); });
    json pert;
    pert["n"] = 3;
    pert["edges"] = json::array();
    pert["points"] = pts({{"0", "0"}, {"2", "0"}, {"4", "0"}});
    dump_twice([&] { return cli::cmd_perturb(parse_instance(pert), 5); });
    dump_twice([&] { return cli::cmd_census(3, 20, 11); });
    dump_twice([&] { return cli::cmd_bounds(4096, 1.0, 0.01, 1.0); });
    dump_twice([&] { return cli::cmd_ordertype_gap(4, 2, 3); });
}
