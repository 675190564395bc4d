#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "sidon/cli.hpp"
#include "sidon/json_io.hpp"

using sidon::json::Json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = sidon::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "sidon_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

void write(const std::filesystem::path& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("verify reports a verdict") {
    const auto yes = run({"verify", "--h", "2", "--json", R"(["1","2","4","8"])"});
    CHECK(yes.code == 0);
    const Json doc = Json::parse(yes.out);
    CHECK(doc["is_sidon"] == true);
    CHECK(doc["request"]["points"].dump() == R"(["1","2","4","8"])");
    CHECK(doc["request"]["h"] == 2);

    const auto no = run({"verify", "--h", "3", "--json", R"(["1","2","4"])"});
    CHECK(no.code == 0);
    const Json verdict = Json::parse(no.out);
    CHECK(verdict["is_sidon"] == false);
    CHECK(verdict["witness"].dump() == R"({"u":{"1":2,"3":1},"v":{"2":3}})");
    CHECK(verdict["collision_sum"] == "6");

    const auto both = run({"verify", "--h", "2", "--method", "both", "--json", R"(["0","1","2"])"});
    CHECK(Json::parse(both.out)["agree"] == true);
    CHECK(Json::parse(both.out)["cross_check"]["weight"]["coeffs"].dump() == R"({"1":1,"2":-2,"3":1})");
}

TEST_CASE("verify report round trips through the library") {
    const auto first = run({"verify", "--h", "3", "--json", R"(["0","3","7","8"])"});
    const Json doc = Json::parse(first.out);
    const auto verdict = sidon::json::verdict_from_json(doc);
    const auto again = run({"verify", "--h", std::to_string(verdict.h), "--json", doc["request"]["points"].dump()});
    CHECK(Json::parse(again.out)["is_sidon"] == doc["is_sidon"]);
    CHECK(again.out == first.out);
}

TEST_CASE("malformed input exits 2 with a diagnostic") {
    const auto dup = run({"verify", "--h", "2", "--json", R"(["1","1"])"});
    CHECK(dup.code == 2);
    CHECK(dup.err.find("duplicate") != std::string::npos);

    const auto bad = run({"verify", "--h", "2", "--json", R"(["1","x/2"])"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("x/2") != std::string::npos);

    CHECK(run({"verify", "--json", R"(["1"])"}).code == 2);                 // missing --h
    CHECK(run({"verify", "--h", "0", "--json", R"(["1"])"}).code == 2);     // h < 1
    CHECK(run({"verify", "--h", "2", "--json", "[]"}).code == 2);           // empty
    CHECK(run({"verify", "--h", "2", "--in", "/nonexistent/x.json"}).code == 2);
    CHECK(run({"verify", "--h", "2", "--abs", "p-adic", "--p", "6", "--json", R"(["1"])"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"perturb", "--h", "2", "--eps", "1/0", "--json", R"(["0"])"}).code == 2);
}

TEST_CASE("domain errors exit 1") {
    CHECK(run({"perturb", "--h", "2", "--eps", "-1/10", "--json", R"(["0","1"])"}).code == 1);
    CHECK(run({"density", "--k", "10", "--h", "2", "--sampler", "grid:40", "--exact", "--budget", "5"}).code == 1);
    CHECK(run({"density", "--k", "5", "--h", "2", "--trials", "3", "--sampler", "grid:3"}).code == 1);
    CHECK(run({"sumset", "--op", "shifted", "--b", "1", "--r", "3", "--h", "2", "--json", R"(["0"])"}).code == 1);
}

TEST_CASE("perturb") {
    const auto out = run({"perturb", "--h", "2", "--eps", "1/10", "--json", R"(["0","1","2"])"});
    CHECK(out.code == 0);
    const Json doc = Json::parse(out.out);
    CHECK(doc["beta"].dump() == R"(["0","21/20","41/20"])");
    CHECK(doc["request"]["epsilons"].dump() == R"(["1/10","1/10","1/10"])");

    const auto object = run({"perturb", "--json",
                             R"({"alpha":["0","1","2"],"epsilons":["1/10","1/10","1/10"],"h":2,"abs":{"kind":"archimedean"}})"});
    CHECK(Json::parse(object.out)["beta"] == doc["beta"]);

    const auto eps_path = scratch("eps.json");
    write(eps_path, R"(["1","1/2","1/3"])");
    const auto from_file = run({"perturb", "--h", "2", "--eps-file", eps_path.string(), "--json", R"(["0","1","2"])"});
    CHECK(from_file.code == 0);

    const auto padic = run({"perturb", "--h", "2", "--eps", "1/10", "--abs", "p-adic", "--p", "3", "--json", R"(["0","1","2"])"});
    CHECK(padic.code == 0);
    CHECK(Json::parse(padic.out)["request"]["abs"].dump() == R"({"kind":"p-adic","p":3})");

    CHECK(run({"perturb", "--h", "2", "--json", R"(["0","1"])"}).code == 2);  // no eps
    CHECK(run({"perturb", "--h", "2", "--eps", "1/10", "--json", R"(["0","0"])"}).code == 2);
    CHECK(run({"perturb", "--h", "2", "--eps", "1/10", "--allow-duplicates", "--json", R"(["0","0"])"}).code == 0);
}

TEST_CASE("perturb stream emits JSON lines") {
    const auto out = run({"perturb", "--stream", "--count", "3", "--h", "2", "--eps-harmonic"});
    CHECK(out.code == 0);
    std::istringstream lines(out.out);
    std::string line;
    std::vector<Json> docs;
    while (std::getline(lines, line)) docs.push_back(Json::parse(line));
    REQUIRE(docs.size() == 4);
    CHECK(docs[0]["command"] == "perturb");
    CHECK(docs[1]["b"] == "0");
    CHECK(docs[3]["i"] == 3);

    const auto batch = run({"perturb", "--h", "2", "--eps-file", scratch("eps.json").string(), "--json", R"(["0","1","2"])"});
    const Json batch_doc = Json::parse(batch.out);
    for (std::size_t i = 0; i < 3; ++i) CHECK(docs[i + 1]["b"] == batch_doc["beta"][i]);
}

TEST_CASE("weights") {
    const auto out = run({"weights", "--k", "2", "--h", "2"});
    const Json doc = Json::parse(out.out);
    CHECK(doc["count"] == 4);
    const auto canon = run({"weights", "--k", "3", "--h", "2", "--canonical"});
    const Json cdoc = Json::parse(canon.out);
    CHECK(cdoc["weights"][0].dump() == R"({"k":3,"h":2,"coeffs":{"2":1,"3":-1}})");
}

TEST_CASE("sumset operations") {
    auto result = [](std::vector<std::string> args) { return Json::parse(run(args).out)["result"].dump(); };
    CHECK(result({"sumset", "--op", "hsum", "--h", "2", "--json", R"(["1","2","4"])"}) ==
          R"(["2","3","4","5","6","8"])");
    CHECK(result({"sumset", "--op", "translate", "--c", "-1", "--json", R"(["1","2","4"])"}) == R"(["0","1","3"])");
    CHECK(result({"sumset", "--op", "dilate", "--c", "1/2", "--json", R"(["2","4"])"}) == R"(["1","2"])");
    CHECK(result({"sumset", "--op", "rs-diff", "--r", "2", "--s", "1", "--json", R"(["0","1"])"}) ==
          R"(["-1","0","1","2"])");
    CHECK(result({"sumset", "--op", "shifted", "--b", "5", "--r", "1", "--h", "2", "--json", R"(["0","1"])"}) ==
          R"(["5","6"])");
    CHECK(result({"sumset", "--op", "forbidden", "--a-star", "2", "--h", "2", "--json", R"(["0","21/20"])"}) ==
          R"(["-61/20","-2","-59/40","-19/20","1/10"])");
    CHECK(run({"sumset", "--op", "hsum", "--json", R"(["1"])"}).code == 2);
    CHECK(run({"sumset", "--op", "cube", "--json", R"(["1"])"}).code == 2);
}

TEST_CASE("density") {
    const auto exact = run({"density", "--k", "3", "--h", "2", "--sampler", "grid:4", "--exact"});
    CHECK(Json::parse(exact.out)["fraction"] == "1/2");
    const auto csv = run({"density", "--k", "3", "--h", "2", "--sampler", "grid:4", "--exact", "--format", "csv"});
    CHECK(csv.out == "k,h,trials,sidon_count,fraction,seed,sampler,exhaustive\n3,2,4,2,1/2,0,grid:4,true\n");
    const auto sampled = run({"density", "--k", "4", "--h", "2", "--trials", "50", "--sampler", "rational:100", "--seed", "3"});
    CHECK(sampled.code == 0);
    CHECK(Json::parse(sampled.out)["request"]["seed"] == 3);
}

TEST_CASE("identical runs give identical bytes and --out writes the same report") {
    const std::vector<std::string> args{"density", "--k", "5", "--h", "2", "--trials", "40", "--sampler",
                                        "rational:1000", "--seed", "77"};
    CHECK(run(args).out == run(args).out);

    const auto path = scratch("report.json");
    std::filesystem::remove(path);
    auto with_out = args;
    with_out.insert(with_out.end(), {"--out", path.string()});
    CHECK(run(with_out).code == 0);
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str() == run(args).out);
    CHECK_FALSE(std::filesystem::exists(path.string() + ".partial"));
}

TEST_CASE("help exits 0") {
    const auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("verify") != std::string::npos);
}
