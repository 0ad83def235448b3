#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "milnorforge/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = milnorforge::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(const std::vector<std::string>& args) {
  const auto r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return nlohmann::json::parse(r.out);
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("milnorforge_cli_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"milnor", "--catalog", "nope"}).code, 2);
  EXPECT_EQ(run({"milnor", "--catalog", "B3", "--weights", "1,2"}).code, 2);
  EXPECT_EQ(run({"torsion", "--catalog", "deletedB3"}).code, 2);
  EXPECT_EQ(run({"milnor", "--input", "/nonexistent/a.json"}).code, 2);

  const auto bad_prime = run({"torsion", "--catalog", "deletedB3", "--weights",
                              "2,1,3,3,2,2,1,1", "--prime", "3"});
  EXPECT_EQ(bad_prime.code, 1);
  EXPECT_NE(bad_prime.err.find("hypothesis"), std::string::npos);
  EXPECT_TRUE(bad_prime.out.empty());
  EXPECT_EQ(run({"milnor", "--catalog", "monomial(3)"}).code, 1);
}

TEST(Cli, EnvelopeFields) {
  const auto j = run_json({"charpoly", "--catalog", "B3"});
  EXPECT_EQ(j["schemaVersion"], 1);
  EXPECT_EQ(j["command"], "charpoly");
  EXPECT_EQ(j["characteristicPolynomial"]["coefficients"], nlohmann::json({-15, 23, -9, 1}));
}

TEST(Cli, CatalogRoundTripThroughInput) {
  const auto path = temp_file("deletedB3.json");
  ASSERT_EQ(run({"catalog", "deletedB3", "--output", path.string()}).code, 0);
  const auto from_file = run_json({"milnor", "--input", path.string(), "--weights",
                                   "2,1,3,3,2,2,1,1", "--primes", "2"});
  const auto from_catalog = run_json({"milnor", "--catalog", "deletedB3", "--weights",
                                      "2,1,3,3,2,2,1,1", "--primes", "2"});
  EXPECT_EQ(from_file, from_catalog);
  EXPECT_EQ(from_file["torsion"], nlohmann::json({2, 2}));
  std::filesystem::remove(path);
}

TEST(Cli, OutputOptionWritesFile) {
  const auto path = temp_file("charpoly.json");
  const auto r = run({"charpoly", "--catalog", "A3", "--output", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(nlohmann::json::parse(slurp(path))["characteristicPolynomial"]["coefficients"],
            nlohmann::json({-6, 11, -6, 1}));
  std::filesystem::remove(path);
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> args = {"milnor", "--catalog", "deletedB3", "--weights",
                                         "2,1,3,3,2,2,1,1", "--primes", "2"};
  const auto a = run(args);
  auto threaded = args;
  threaded.insert(threaded.end(), {"--threads", "3"});
  const auto b = run(threaded);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run({"multinet", "search", "--catalog", "B3", "--k", "3", "--max-mult", "2"}).out,
            run({"multinet", "search", "--catalog", "B3", "--k", "3", "--max-mult", "2"}).out);
}

TEST(Cli, MultinetVerifyRoundTrip) {
  const auto found = run_json({"multinet", "search", "--catalog", "B3", "--k", "3", "--max-mult", "2"});
  ASSERT_EQ(found["count"], 1);
  const auto path = temp_file("b3_multinet.json");
  {
    std::ofstream f(path);
    f << found["multinets"][0].dump();
  }
  const auto v = run_json({"multinet", "verify", "--catalog", "B3", "--multinet", path.string()});
  EXPECT_EQ(v["ok"], true);
  const auto p = run_json({"pointed", "--catalog", "B3", "--multinet", path.string()});
  EXPECT_EQ(p["multinets"][0]["certificates"].size(), 3u);
  std::filesystem::remove(path);
}

TEST(Cli, VerboseProgressGoesToStderr) {
  const auto r = run({"milnor", "--catalog", "pencil(3)", "-v"});
  EXPECT_EQ(r.code, 0);
  EXPECT_FALSE(r.err.empty());
  EXPECT_NO_THROW(nlohmann::json::parse(r.out));
}

TEST(Cli, ConnectAndPresentation) {
  const auto c = run_json({"connect", "--left", "pencil(2)", "--left-base", "x", "--right",
                           "pencil(2)", "--right-base", "x"});
  std::vector<std::string> labels;
  for (const auto& h : c["hyperplanes"]) labels.push_back(h["label"]);
  EXPECT_EQ(labels, (std::vector<std::string>{"x", "y", "y'"}));
  const auto p = run_json({"presentation", "--catalog", "A3"});
  EXPECT_EQ(p["generators"].size(), 5u);
  const auto cv = run_json({"cover", "--catalog", "A3"});
  EXPECT_EQ(cv["betti"], 7);
}
