#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "cli.hpp"
#include "fbc/automorphism_text.hpp"
#include "fixtures.hpp"

namespace fbc::cli {
namespace {

using nlohmann::json;

struct Outcome {
  int code;
  std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "fbc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string value_of(const std::string& human, const std::string& key) {
  std::istringstream in(human);
  for (std::string line; std::getline(in, line);) {
    if (line.rfind(key + ": ", 0) == 0) return line.substr(key.size() + 2);
  }
  return "<missing " + key + ">";
}

TEST(Cli, ExitCodeMatrix) {
  const std::string psi = testing::kPsiText;
  const std::string bad = testing::kNonAutomorphismText;
  const struct {
    std::vector<std::string> args;
    int code;
  } cases[] = {
      {{"parse", "--map", psi}, kOk},
      {{"invert", "--map", psi}, kOk},
      {{"b1", "--map", psi}, kOk},
      {{"h1", "--presentation", "gens: a t; rel: Tata"}, kOk},
      {{"compose", "--map1", psi, "--map2", testing::kPsiInverseText}, kOk},
      {{"invert", "--map", bad}, kNotAutomorphism},
      {{"stretch", "--map", bad}, kNotAutomorphism},
      {{"atoroidal", "--map", bad, "--max-len", "2"}, kNotAutomorphism},
      {{"parse", "--map", "a->b; a->c"}, kUsage},
      {{"parse", "--map", "a->b"}, kUsage},
      {{"parse", "--map", "a->%"}, kUsage},
      {{"parse"}, kUsage},
      {{"b1", "--map", psi, "--presentation", "gens: a"}, kUsage},
      {{"invert", "--map", psi, "--map2", psi}, kUsage},
      {{"frobnicate", "--map", psi}, kUsage},
      {{"stretch", "--map", psi, "--depth", "0"}, kUsage},
      {{"stretch", "--map", psi, "--depth", "many"}, kUsage},
      {{"compose", "--map1", psi, "--map2", "a->b; b->a"}, kUsage},
      {{"invert", "--map", "a->aaaa", "--rank", "1"}, kNotAutomorphism},
  };
  for (const auto& c : cases) {
    const Outcome o = invoke(c.args);
    std::string joined;
    for (const auto& a : c.args) joined += a + " ";
    EXPECT_EQ(o.code, c.code) << joined << "\n" << o.err;
    if (c.code != kOk) {
      EXPECT_FALSE(o.err.empty()) << joined;
    }
  }
}

TEST(Cli, OrderCapIsAResourceError) {
  const auto dir = std::filesystem::temp_directory_path() / "fbc_cli_tests";
  std::filesystem::create_directories(dir);
  const auto path = dir / "S7.txt";
  std::ofstream(path) << "(1 2 3 4 5 6 7)\n(1 2)\n";
  const Outcome o = invoke({"fingerprint", "--map", "a->b; b->a", "--group-file", path.string()});
  EXPECT_EQ(o.code, kCapHit) << o.err;
}

TEST(Cli, B1OnPsi) {
  const Outcome o = invoke({"b1", "--map", testing::kPsiText});
  ASSERT_EQ(o.code, kOk);
  EXPECT_EQ(value_of(o.out, "betti"), "1");
  EXPECT_EQ(value_of(o.out, "torsion"), "none");
}

TEST(Cli, JsonDocumentShape) {
  const Outcome o = invoke({"h1", "--map", testing::kPsiText, "--json"});
  ASSERT_EQ(o.code, kOk);
  const json doc = json::parse(o.out);
  for (const char* key : {"command", "inputs", "results", "diagnostics", "versions"}) {
    EXPECT_TRUE(doc.contains(key)) << key;
  }
  EXPECT_EQ(doc["command"], "h1");
  EXPECT_EQ(doc["results"]["betti"], 1);
  EXPECT_EQ(doc["results"]["det_a_minus_i"], -1);
  EXPECT_TRUE(doc["results"]["torsion"].empty());
}

TEST(Cli, JsonErrorDocument) {
  const Outcome o = invoke({"invert", "--map", testing::kNonAutomorphismText, "--json"});
  EXPECT_EQ(o.code, kNotAutomorphism);
  const json doc = json::parse(o.out);
  EXPECT_EQ(doc["error"]["kind"], "NotAutomorphism");
  EXPECT_EQ(doc["error"]["exit_code"], kNotAutomorphism);
}

TEST(Cli, EchoedInputsRoundTrip) {
  for (const char* text : {testing::kPsiText, "b->a\na->b^2 A", "a->Cb; b->a; c->b"}) {
    const Outcome o = invoke({"parse", "--map", text, "--json"});
    ASSERT_EQ(o.code, kOk) << o.err;
    const json doc = json::parse(o.out);
    EXPECT_EQ(parse_automorphism(doc["inputs"]["map"].get<std::string>()), parse_automorphism(text));
  }
  const Outcome c = invoke({"compose", "--map1", testing::kPsiText, "--map2", testing::kPsiText, "--json"});
  const json doc = json::parse(c.out);
  EXPECT_EQ(parse_automorphism(doc["inputs"]["map1"].get<std::string>()), testing::psi());
  EXPECT_EQ(doc["results"]["composite"], "a->c; b->cA; c->cAB");
}

TEST(Cli, InvertPsi) {
  const Outcome o = invoke({"invert", "--map", testing::kPsiText});
  ASSERT_EQ(o.code, kOk);
  EXPECT_EQ(value_of(o.out, "inverse"), testing::kPsiInverseText);
}

TEST(Cli, HumanAndJsonStretchAgree) {
  const std::vector<std::string> args{"stretch", "--map", testing::kPsiText, "--depth", "40", "--workers", "1"};
  const Outcome human = invoke(args);
  auto json_args = args;
  json_args.push_back("--json");
  const Outcome structured = invoke(json_args);
  ASSERT_EQ(human.code, kOk);
  ASSERT_EQ(structured.code, kOk);
  const json doc = json::parse(structured.out);
  for (const char* key : {"lambda_plus", "lambda_minus", "min", "max"}) {
    EXPECT_EQ(std::stod(value_of(human.out, key)), doc["results"][key].get<double>()) << key;
  }
  EXPECT_EQ(doc["inputs"]["depth"], 40);
}

TEST(Cli, HumanAndJsonFingerprintAgree) {
  const std::vector<std::string> args{"fingerprint", "--map", testing::kPsiText};
  const Outcome human = invoke(args);
  const Outcome structured = invoke({"fingerprint", "--map", testing::kPsiText, "--json"});
  ASSERT_EQ(human.code, kOk);
  const json doc = json::parse(structured.out);
  std::istringstream in(human.out);
  std::string line;
  std::getline(in, line);  // hash
  EXPECT_EQ(line, "hash: " + doc["results"]["hash"].get<std::string>());
  for (const auto& e : doc["results"]["entries"]) {
    ASSERT_TRUE(std::getline(in, line));
    EXPECT_EQ(line, e["label"].get<std::string>() + " order " + std::to_string(e["order"].get<int>()) +
                        " homs " + std::to_string(e["homs"].get<std::uint64_t>()) + " epis " +
                        std::to_string(e["epis"].get<std::uint64_t>()));
  }
}

TEST(Cli, AtoroidalSwapFindsFixedClass) {
  const Outcome o = invoke({"atoroidal", "--map", testing::kSwapText, "--max-len", "1", "--max-period", "1",
                            "--json"});
  ASSERT_EQ(o.code, kOk);
  const json doc = json::parse(o.out);
  const json expected = json::array({{{"rep", "c"}, {"period", 1}}, {{"rep", "C"}, {"period", 1}}});
  EXPECT_EQ(doc["results"]["orbits"], expected);
}

TEST(Cli, CompareSeparatesPsiFromSwap) {
  const Outcome o = invoke({"compare", "--map1", testing::kPsiText, "--map2", testing::kSwapText, "--depth", "30"});
  ASSERT_EQ(o.code, kOk) << o.err;
  EXPECT_EQ(value_of(o.out, "fingerprint"), "DIFFER at Z2: homs 2 vs 8, epis 1 vs 7");
  EXPECT_EQ(value_of(o.out, "verdict"), "distinguished");
}

TEST(Cli, ComparePsiWithItsInverse) {
  const Outcome o = invoke({"compare", "--map1", testing::kPsiText, "--map2", testing::kPsiInverseText, "--json"});
  ASSERT_EQ(o.code, kOk) << o.err;
  const json doc = json::parse(o.out);
  EXPECT_FALSE(doc["results"]["distinguished"].get<bool>());
  EXPECT_TRUE(doc["results"]["checks"]["fingerprint"]["same"].get<bool>());
  EXPECT_TRUE(doc["results"]["checks"]["stretch"]["same"].get<bool>());
}

TEST(Cli, CacheFileIsWrittenAndReused) {
  const auto dir = std::filesystem::temp_directory_path() / "fbc_cli_tests";
  std::filesystem::create_directories(dir);
  const auto path = dir / "cache.tsv";
  std::filesystem::remove(path);
  const std::vector<std::string> args{"fingerprint", "--map", testing::kPsiText, "--cache-file", path.string(), "--json"};
  const Outcome first = invoke(args);
  ASSERT_EQ(first.code, kOk);
  EXPECT_EQ(json::parse(first.out)["diagnostics"]["cache"]["hits"], 0);
  const Outcome second = invoke(args);
  EXPECT_EQ(json::parse(second.out)["diagnostics"]["cache"]["hits"], 18);
  EXPECT_EQ(json::parse(first.out)["results"], json::parse(second.out)["results"]);

  auto no_cache = args;
  no_cache.push_back("--no-cache");
  EXPECT_FALSE(json::parse(invoke(no_cache).out)["diagnostics"].contains("cache"));
}

TEST(Cli, ReadsMapFromFile) {
  const auto dir = std::filesystem::temp_directory_path() / "fbc_cli_tests";
  std::filesystem::create_directories(dir);
  const auto path = dir / "psi.aut";
  std::ofstream(path) << "a->b\nb->c\nc->cA\n";
  const Outcome o = invoke({"parse", "--map", path.string()});
  ASSERT_EQ(o.code, kOk) << o.err;
  EXPECT_EQ(value_of(o.out, "map"), testing::kPsiText);
}

TEST(Cli, FormatDoubleRoundTrips) {
  for (double x : {1.0, 1.1666666666666667, 0.1, 1e-300, 1.3247179572447458}) {
    EXPECT_EQ(std::stod(format_double(x)), x);
  }
  EXPECT_EQ(format_double(2.0), "2");
}

TEST(Cli, ExecutableHonoursEnvironment) {
  const std::string cmd = std::string("FBC_MAP='") + testing::kPsiText + "' " + FBC_EXECUTABLE + " b1 > /dev/null";
  const int status = std::system(cmd.c_str());
  ASSERT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), kOk);
  const std::string bad = std::string(FBC_EXECUTABLE) + " invert --map 'a->a; b->a' 2> /dev/null";
  const int bad_status = std::system(bad.c_str());
  ASSERT_TRUE(WIFEXITED(bad_status));
  EXPECT_EQ(WEXITSTATUS(bad_status), kNotAutomorphism);
}

}  // namespace
}  // namespace fbc::cli
