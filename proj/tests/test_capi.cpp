#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include <bmp.h>
#include <json.hpp>

using nlohmann::json;

namespace {

struct GraphHandle {
    bmp_graph* g = nullptr;
    ~GraphHandle() { bmp_graph_free(g); }
};

struct StringOut {
    char* s = nullptr;
    ~StringOut() { bmp_string_free(s); }
    json parsed() const { return json::parse(s); }
};

} // namespace

TEST_CASE("construction and accessors") {
    GraphHandle h;
    REQUIRE(bmp_graph_generate("cycle:5", &h.g) == BMP_OK);
    CHECK(bmp_graph_order(h.g) == 5);
    CHECK(bmp_graph_edge_count(h.g) == 5);
    CHECK(bmp_graph_component_count(h.g) == 1);

    GraphHandle e;
    REQUIRE(bmp_graph_from_edgelist("0 1\n1 2\n\n# done\n", &e.g) == BMP_OK);
    CHECK(bmp_graph_order(e.g) == 3);

    int endpoints[] = {0, 1, 1, 2, 2, 3, 3, 0};
    GraphHandle c;
    REQUIRE(bmp_graph_create(4, endpoints, 4, &c.g) == BMP_OK);
    CHECK(bmp_graph_edge_count(c.g) == 4);
    CHECK(bmp_graph_component_count(c.g) == 1);
}

TEST_CASE("graph6 round trip through the C surface") {
    GraphHandle h;
    REQUIRE(bmp_graph_from_graph6("D?{", &h.g) == BMP_OK);
    CHECK(bmp_graph_order(h.g) == 5);
    CHECK(bmp_graph_edge_count(h.g) == 4);

    StringOut s;
    REQUIRE(bmp_graph_to_graph6(h.g, &s.s) == BMP_OK);
    CHECK(std::string(s.s) == "D?{");

    StringOut el;
    REQUIRE(bmp_graph_to_edgelist(h.g, &el.s) == BMP_OK);
    GraphHandle back;
    REQUIRE(bmp_graph_from_edgelist(el.s, &back.g) == BMP_OK);
    CHECK(bmp_graph_order(back.g) == 5);
    CHECK(bmp_graph_edge_count(back.g) == 4);
}

TEST_CASE("error codes and last_error") {
    bmp_graph* out = nullptr;
    CHECK(bmp_graph_from_edgelist("0 x", &out) == BMP_ERR_PARSE);
    CHECK(std::strlen(bmp_last_error()) > 0);
    CHECK(out == nullptr);

    CHECK(bmp_graph_from_graph6("D\x1f{", &out) == BMP_ERR_FORMAT);
    CHECK(bmp_graph_from_edgelist("0 0", &out) == BMP_ERR_INVALID);
    CHECK(bmp_graph_generate("nope:3", &out) == BMP_ERR_PARSE);
    CHECK(bmp_graph_from_edgelist(nullptr, &out) == BMP_ERR_NULL);
    CHECK(bmp_graph_from_edgelist("0 1", nullptr) == BMP_ERR_NULL);

    int endpoints[] = {0, 9};
    CHECK(bmp_graph_create(3, endpoints, 1, &out) == BMP_ERR_INDEX);

    GraphHandle h;
    REQUIRE(bmp_graph_generate("path:3", &h.g) == BMP_OK);
    int row[3];
    CHECK(bmp_graph_distances(h.g, 7, row) == BMP_ERR_INDEX);
    CHECK(bmp_solve_mp(nullptr, 0, nullptr) == BMP_ERR_NULL);
}

TEST_CASE("distances and metrics") {
    GraphHandle h;
    REQUIRE(bmp_graph_generate("path:7", &h.g) == BMP_OK);
    int row[7];
    REQUIRE(bmp_graph_distances(h.g, 0, row) == BMP_OK);
    for (int i = 0; i < 7; ++i) CHECK(row[i] == i);

    int radius = -1, diameter = -1, center = -1, du = -1, dv = -1;
    REQUIRE(bmp_graph_metrics(h.g, &radius, &diameter, &center, &du, &dv) == BMP_OK);
    CHECK(radius == 3);
    CHECK(diameter == 6);
    CHECK(center == 3);
    CHECK(du == 0);
    CHECK(dv == 6);
    REQUIRE(bmp_graph_metrics(h.g, nullptr, &diameter, nullptr, nullptr, nullptr) == BMP_OK);

    GraphHandle disc;
    REQUIRE(bmp_graph_from_edgelist("0 1\n2 3", &disc.g) == BMP_OK);
    CHECK(bmp_graph_metrics(disc.g, &radius, nullptr, nullptr, nullptr, nullptr) ==
          BMP_ERR_DISCONNECTED);

    GraphHandle unreach;
    REQUIRE(bmp_graph_from_edgelist("n 3\n0 1", &unreach.g) == BMP_OK);
    int r3[3];
    REQUIRE(bmp_graph_distances(unreach.g, 0, r3) == BMP_OK);
    CHECK(r3[2] == -1);
}

TEST_CASE("solvers") {
    GraphHandle h;
    REQUIRE(bmp_graph_generate("fig3b", &h.g) == BMP_OK);

    StringOut mp;
    REQUIRE(bmp_solve_mp(h.g, 0, &mp.s) == BMP_OK);
    json jm = mp.parsed();
    CHECK(jm["parameter"] == "mp");
    CHECK(jm["value"] == 2);
    CHECK(jm["witness"].size() == 2);
    CHECK(jm["nodes"].get<long long>() > 0);
    CHECK(jm["millis"].get<long long>() >= 0);

    StringOut gb;
    REQUIRE(bmp_solve_gb(h.g, 0, &gb.s) == BMP_OK);
    json jb = gb.parsed();
    CHECK(jb["parameter"] == "gb");
    CHECK(jb["value"] == 4);
    int cost = 0;
    for (auto& [v, p] : jb["witness"].items()) cost += p.get<int>();
    CHECK(cost == 4);

    GraphHandle big;
    REQUIRE(bmp_graph_generate("cycle:30", &big.g) == BMP_OK);
    char* unused = nullptr;
    CHECK(bmp_solve_mp(big.g, 0, &unused) == BMP_ERR_CAP);
    CHECK(unused == nullptr);
    StringOut raised;
    CHECK(bmp_solve_mp(big.g, 30, &raised.s) == BMP_OK);
    CHECK(raised.parsed()["value"].get<int>() >= 1);
}

TEST_CASE("approximation") {
    GraphHandle h;
    REQUIRE(bmp_graph_generate("path:13", &h.g) == BMP_OK);
    StringOut out;
    REQUIRE(bmp_approx_multipacking(h.g, &out.s) == BMP_OK);
    json j = out.parsed();
    CHECK(j["size"] == 5);
    CHECK(j["multipacking"].size() == 5);
    CHECK(j["verified"] == true);
    CHECK(j["trace"]["k"] == 2);
    CHECK(j["trace"]["guarantee"] == 3);
    CHECK(j["trace"]["fallback"] == false);

    GraphHandle disc;
    REQUIRE(bmp_graph_from_edgelist("0 1\n2 3", &disc.g) == BMP_OK);
    char* unused = nullptr;
    CHECK(bmp_approx_multipacking(disc.g, &unused) == BMP_ERR_DISCONNECTED);
}

TEST_CASE("certificate verification") {
    GraphHandle h;
    REQUIRE(bmp_graph_generate("cycle:4", &h.g) == BMP_OK);

    StringOut ok;
    REQUIRE(bmp_verify(h.g, R"({"multipacking":[0]})", &ok.s) == BMP_OK);
    CHECK(ok.parsed()["ok"] == true);

    StringOut bad;
    REQUIRE(bmp_verify(h.g, R"({"multipacking":[0,2]})", &bad.s) == BMP_OK);
    json j = bad.parsed();
    CHECK(j["ok"] == false);
    CHECK(j["violation"]["kind"] == "ball-overfull");
    CHECK(j["violation"]["center"] == 1);

    StringOut bcast;
    REQUIRE(bmp_verify(h.g, R"({"broadcast":{"0":2}})", &bcast.s) == BMP_OK);
    CHECK(bcast.parsed()["ok"] == true);

    StringOut miss;
    REQUIRE(bmp_verify(h.g, R"({"broadcast":{"0":1}})", &miss.s) == BMP_OK);
    json jm = miss.parsed();
    CHECK(jm["ok"] == false);
    CHECK(jm["violation"]["kind"] == "uncovered");
    CHECK(jm["violation"]["witness"] == json::array({2}));

    char* unused = nullptr;
    CHECK(bmp_verify(h.g, "{not json", &unused) == BMP_ERR_PARSE);
    CHECK(bmp_verify(h.g, R"({"neither":1})", &unused) == BMP_ERR_PARSE);
    CHECK(bmp_verify(h.g, R"({"broadcast":{"0":0}})", &unused) == BMP_ERR_INVALID);
    CHECK(bmp_verify(h.g, R"({"multipacking":[9]})", &unused) == BMP_ERR_INDEX);
}
