#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "fibtree/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args)
{
    args.insert(args.begin(), "fibtree");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = fibtree::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) {
        v.push_back(l);
    }
    return v;
}

}  // namespace

TEST_CASE("seq tables")
{
    Result s = call({"seq", "S", "1", "4"});
    CHECK(s.code == 0);
    CHECK(lines(s.out) == std::vector<std::string>{"name,n,value", "S,1,5", "S,2,2", "S,3,7", "S,4,30"});

    Result d = call({"seq", "D", "0", "2"});
    CHECK(lines(d.out) == std::vector<std::string>{"name,n,value", "D,0,-3", "D,1,-13", "D,2,-64"});

    Result a = call({"seq", "Ak", "1", "1", "--k", "4"});
    CHECK(lines(a.out).at(1) == "A4,1,1");

    Result big = call({"seq", "A11", "300", "300"});
    const std::string value = lines(big.out).at(1).substr(8);
    CHECK(value.find_first_not_of("0123456789") == std::string::npos);
    CHECK(value.size() > 200);
}

TEST_CASE("json output")
{
    Result r = call({"seq", "A11", "0", "3", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["command"] == "seq");
    CHECK(j["parameters"]["name"] == "A11");
    REQUIRE(j["rows"].size() == 4);
    CHECK(j["rows"][3]["value"] == "152");
    CHECK(j.dump(2) + "\n" == r.out);
}

TEST_CASE("count and sw")
{
    CHECK(lines(call({"count", "1", "2", "1"}).out).at(1) == "1,2,1,1,4,6");
    Result o = call({"count", "2", "1", "1", "--oracle"});
    CHECK(o.code == 0);
    CHECK(lines(o.out).at(1) == "2,1,1,2,5,7,7,true");
    CHECK(lines(call({"count", "4", "7", "0"}).out).at(1) == "4,7,0,5,2,0");

    CHECK(lines(call({"sw", "3", "5"}).out).at(1) == "3,5,3,RRR,3/5;2/3;1/2;1/1,1;1;2;3;5");
    CHECK(lines(call({"sw", "1", "1"}).out).at(1) == "1,1,0,-,1/1,1;1");
    CHECK(lines(call({"sw", "2", "3"}).out).at(1).rfind("2,3,2,", 0) == 0);
}

TEST_CASE("certify exit codes")
{
    Result ok = call({"certify", "cn10000"});
    CHECK(ok.code == 0);
    auto rows = lines(ok.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[1].rfind("cn10000.lower,10000,holds,", 0) == 0);
    CHECK(rows[2].rfind("cn10000.upper,10000,holds,", 0) == 0);

    CHECK(call({"certify", "binom3n", "1", "50"}).code == 0);
    CHECK(call({"certify", "a12", "1311", "1311"}).code == 2);
    CHECK(call({"certify", "nope"}).code == 1);
    CHECK(call({"certify", "thmA", "5", "10"}).code == 1);
}

TEST_CASE("walkprob")
{
    Result r = call({"walkprob", "0.5"});
    CHECK(lines(r.out).at(1).rfind("0.5,0.309016994374947", 0) == 0);
    CHECK(lines(call({"walkprob", "0.3333333"}).out).at(1).rfind("0.3333333,0,1,1", 0) == 0);

    Result s = call({"walkprob", "0.5", "--simulate", "2000", "100", "42"});
    CHECK(s.code == 0);
    CHECK(lines(s.out).at(0) == "p,escape,r1,absorption_2,estimate,half_width,trials,horizon,seed,rng");
    Result again = call({"walkprob", "0.5", "--simulate", "2000", "100", "42"});
    CHECK(again.out == s.out);
    Result seeded = call({"--seed", "7", "walkprob", "0.5", "--simulate", "2000", "100"});
    CHECK(lines(seeded.out).at(1).find(",7,mt19937_64") != std::string::npos);
    CHECK(call({"walkprob", "1.5"}).code == 1);
}

TEST_CASE("oracle and identities commands")
{
    Result o = call({"oracle", "5"});
    CHECK(o.code == 0);
    CHECK(o.out.find("false") == std::string::npos);
    CHECK(lines(o.out).size() == 1 + 3 * 6);

    Result p = call({"oracle", "--pairs", "4", "--depth-cap", "15"});
    CHECK(p.code == 0);
    CHECK(p.out.find("false") == std::string::npos);

    Result ids = call({"identities", "0", "20"});
    CHECK(ids.code == 0);
    CHECK(ids.out.find("false") == std::string::npos);
    CHECK(call({"identities", "0", "5", "--name", "lemma61"}).out.find("lemma61,5,true") != std::string::npos);
}

TEST_CASE("usage errors")
{
    CHECK(call({}).code == 1);
    CHECK(call({"seq", "Ak", "0", "3"}).code == 1);
    CHECK(call({"seq", "S", "4", "1"}).code == 1);
    CHECK(call({"seq", "Q", "0", "1"}).code == 1);
    CHECK(call({"count", "2", "4", "1"}).code == 1);
    CHECK(call({"count", "1", "1", "9", "--oracle", "--depth-cap", "12"}).code == 1);
    CHECK(call({"sw", "0", "1"}).code == 1);
    CHECK(call({"--format", "xml", "seq", "S", "0", "1"}).code == 1);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("environment overrides and flag precedence")
{
    setenv("FIBTREE_DEPTH_CAP", "6", 1);
    CHECK(call({"count", "1", "1", "3", "--oracle"}).code == 1);
    CHECK(call({"count", "1", "1", "3", "--oracle", "--depth-cap", "9"}).code == 0);
    unsetenv("FIBTREE_DEPTH_CAP");
    CHECK(call({"count", "1", "1", "3", "--oracle"}).code == 0);
}

TEST_CASE("sequence cache file")
{
    const auto path = std::filesystem::temp_directory_path() / "fibtree_cli_cache_test.bin";
    std::filesystem::remove(path);
    Result first = call({"seq", "A11", "0", "80", "--cache", path.string()});
    CHECK(first.code == 0);
    CHECK(std::filesystem::exists(path));
    Result second = call({"seq", "A11", "0", "80", "--cache", path.string()});
    CHECK(second.out == first.out);

    {
        std::FILE* f = std::fopen(path.string().c_str(), "r+b");
        REQUIRE(f != nullptr);
        std::fseek(f, 40, SEEK_SET);
        std::fputc(0x5a, f);
        std::fclose(f);
    }
    Result damaged = call({"seq", "A11", "0", "80", "--cache", path.string()});
    CHECK(damaged.code == 0);
    CHECK(damaged.out == first.out);
    CHECK(damaged.err.find("ignoring cache") != std::string::npos);
    std::filesystem::remove(path);
}
