#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "bicubic/cli.hpp"

using namespace bicubic;

TEST_CASE("count-points report carries both counts and they agree") {
    RunConfig cfg;
    cfg.subcommand = "count-points";
    cfg.height_bound = 300;
    cfg.method = "both";
    auto doc = run(cfg);
    auto bytes = serialize(cfg, doc);
    CHECK(bytes.find("\"count_direct\":") != std::string::npos);
    CHECK(bytes.find("\"count_torsor\":") != std::string::npos);
    CHECK(bytes.find("\"methods_agree\":true") != std::string::npos);
    CHECK(bytes.find("\"raw_torsor_tuples\":") != std::string::npos);
}

TEST_CASE("identical configs serialize to identical bytes") {
    RunConfig cfg;
    cfg.subcommand = "boxcount";
    cfg.r = {1, 1, 1};
    cfg.box = {8, 8, 8, 8, 8, 8};
    auto a = serialize(cfg, run(cfg));
    auto b = serialize(cfg, run(cfg));
    CHECK(a == b);
    CHECK(a.find("\"exact_count\":") != std::string::npos);
}

TEST_CASE("constant report lists the factor 39/256 at p = 2") {
    RunConfig cfg;
    cfg.subcommand = "constant";
    cfg.prime_cutoff = 100;
    auto bytes = serialize(cfg, run(cfg));
    CHECK(bytes.find("{\"p\":2,\"value\":\"39/256\"}") != std::string::npos);
    CHECK(bytes.find("\"tail_bound\":") != std::string::npos);
}

TEST_CASE("full constant breakdown carries every field") {
    RunConfig cfg;
    cfg.subcommand = "constant";
    cfg.full_constant = true;
    cfg.prime_cutoff = 60;
    auto bytes = serialize(cfg, run(cfg));
    for (const char* key :
         {"\"alpha\":\"1/576\"", "\"mu_inf_closed\":", "\"mu_inf_quadrature\":", "\"mu_p\":",
          "\"tau_h\":", "\"theta_h\":", "\"theorem1_coeff\":", "\"reconciliation_delta\":"})
        CHECK(bytes.find(key) != std::string::npos);
}

TEST_CASE("trend emits csv rows") {
    RunConfig cfg;
    cfg.subcommand = "trend";
    cfg.height_bounds = {10, 100};
    cfg.output_format = "csv";
    auto doc = run(cfg);
    auto bytes = serialize(cfg, doc);
    CHECK(bytes.rfind("B,N,ratio\n", 0) == 0);
    CHECK(bytes.find("\n10,") != std::string::npos);
    CHECK(bytes.find("\n100,") != std::string::npos);
}

TEST_CASE("csv point dump is available under the retain cap") {
    RunConfig cfg;
    cfg.subcommand = "count-points";
    cfg.height_bound = 10;
    cfg.method = "direct";
    cfg.output_format = "csv";
    auto doc = run(cfg);
    auto bytes = serialize(cfg, doc);
    CHECK(bytes.rfind("x1,x2,x3,y1,y2,y3,height\n", 0) == 0);
}

TEST_CASE("expsums verify suite emits the audit payload") {
    RunConfig cfg;
    cfg.subcommand = "verify";
    cfg.suite = "expsums";
    auto doc = run(cfg);
    CHECK(doc.all_passed);
    auto bytes = serialize(cfg, doc);
    for (const char* key : {"\"grid\":", "\"max_ratio_01\":", "\"max_ratio_10\":",
                            "\"max_ratio_11\":", "\"mismatches\":[]"})
        CHECK(bytes.find(key) != std::string::npos);
}

TEST_CASE("config files expand to flags") {
    const char* path = "bicubic_test_config.txt";
    {
        std::ofstream out(path);
        out << "# sample\nheight-bound = 25\nmethod = direct\n";
    }
    auto args = config_file_args(path);
    REQUIRE(args.size() == 4);
    CHECK(args[0] == "--height-bound");
    CHECK(args[1] == "25");
    CHECK(args[2] == "--method");
    CHECK(args[3] == "direct");
    std::remove(path);
    CHECK_THROWS_AS(config_file_args("missing_config_file.txt"), std::invalid_argument);
}

TEST_CASE("usage errors surface as invalid_argument") {
    RunConfig cfg;
    cfg.subcommand = "count-points";
    cfg.height_bound = 0;
    CHECK_THROWS_AS(run(cfg), std::invalid_argument);
    cfg.subcommand = "nonsense";
    CHECK_THROWS_AS(run(cfg), std::invalid_argument);
}

TEST_CASE("cost caps surface as cost_cap_error") {
    RunConfig cfg;
    cfg.subcommand = "boxcount";
    cfg.r = {1, 1, 1};
    cfg.box = {200'000, 200'000, 1, 200'000, 200'000, 1};
    CHECK_THROWS_AS(run(cfg), cost_cap_error);
}

TEST_CASE("rationals serialize exactly, floats at fifteen digits") {
    CHECK(format_double(1.0 / 3.0) == "0.333333333333333");
    CHECK(Json::rational(Rat(39, 256)).dump() == "\"39/256\"");
    Json j = Json::object();
    j.set("a", Json::num(2.0)).set("b", Json::integer(-7)).set("c", Json::boolean(false));
    CHECK(j.dump() == "{\"a\":2,\"b\":-7,\"c\":false}");
}
