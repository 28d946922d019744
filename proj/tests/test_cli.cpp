#include "doctest.h"

#include "cli.hpp"
#include "json.hpp"

#include <sstream>
#include <vector>

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "d4grad");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = d4::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

const std::string rank8p = R"({"r":8,"group":{"free_rank":0,"torsion":[3]},"h":[1],"t":"p"})";
const std::string rank8o = R"({"r":8,"group":{"free_rank":0,"torsion":[3]},"h":[1],"t":"o"})";

}  // namespace

TEST_CASE("similar on rank 8 para-Cayley vs Okubo")
{
    Run r = run({"similar", rank8p, rank8o});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["result"]["similar"] == false);
    CHECK(j["status"] == "pass");
    CHECK(j["conductor"] == 12);
    CHECK(j.contains("version"));
    Run s = run({"similar", rank8p, rank8p});
    CHECK(nlohmann::json::parse(s.out)["result"]["similar"] == true);
}

TEST_CASE("usage and parameter errors exit with 2")
{
    CHECK(run({"similar", "{\"r\":8", rank8p}).code == 2);
    CHECK(run({"similar", R"({"r":3,"group":{"free_rank":0,"torsion":[3]},"h":[1]})", rank8p}).code == 2);
    CHECK(run({"similar", R"({"r":8,"group":{"free_rank":0,"torsion":[3]},"h":[0],"t":"p"})", rank8p}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"catalog", "other"}).code == 2);
    CHECK(run({"--field-conductor", "4", "catalog", "fine-typeIII"}).code == 2);
    CHECK(run({"verify", "grading"}).code == 2);
    CHECK(run({"build", "typeIII", "/nonexistent.json"}).code == 2);
}

TEST_CASE("catalog of fine Type III gradings")
{
    Run r = run({"catalog", "fine-typeIII"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    const auto& rows = j["result"]["rows"];
    REQUIRE(rows.size() == 3);
    CHECK(rows[0]["universal_group"]["name"] == "Z^2 x Z_3");
    // Z_2^3 x Z_3 has invariant factors 2, 2, 6
    CHECK(rows[1]["universal_group"]["invariants"] == nlohmann::json({2, 2, 6}));
    CHECK(rows[1]["universal_group"]["free_rank"] == 0);
    CHECK(rows[2]["universal_group"]["name"] == "Z_3 x Z_3 x Z_3");
    CHECK(rows[0]["rank"] == 2);
    CHECK(rows[1]["rank"] == 1);
    CHECK(rows[2]["rank"] == 0);
}

TEST_CASE("commands are deterministic and honour the seed")
{
    const std::vector<std::string> cmd{"--seed", "3", "verify", "jordan"};
    Run a = run(cmd), b = run(cmd);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::parse(a.out)["seed"] == 3);
    Run c = run({"invariants", R"({"kind":"okubo"})"});
    CHECK(c.code == 0);
    CHECK(nlohmann::json::parse(c.out)["result"]["rank"] == 0);
    Run d = run({"brauer", R"({"kind":"z2cubed"})"});
    CHECK(d.code == 0);
    for (const auto& f : nlohmann::json::parse(d.out)["result"]["factors"]) CHECK(f["trivial"] == true);
}
