#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mediagame/cli.hpp"

using mediagame::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "mediagame");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::vector<std::string> kCanonical{"--sigma", "0.05", "--pi", "0.5", "--q", "0.7",
                                          "--k",     "0.1",  "--s",  "1",   "--uc", "0.4"};

std::vector<std::string> cmd(std::string name, std::vector<std::string> extra) {
  std::vector<std::string> args{std::move(name)};
  args.insert(args.end(), kCanonical.begin(), kCanonical.end());
  args.insert(args.end(), extra.begin(), extra.end());
  return args;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("classify") {
  const Result a = invoke(cmd("classify", {"--phi", "0.3"}));
  CHECK(a.code == 0);
  CHECK(a.out.find("regime: AccountabilityListenBoth") != std::string::npos);
  CHECK(a.out.find("phi_v") != std::string::npos);

  const Result b = invoke(cmd("classify", {"--phi", "0.6"}));
  CHECK(b.code == 0);
  CHECK(b.out.find("regime: NoAccountabilitySelectOnAlt") != std::string::npos);

  const Result bad = invoke({"classify", "--q", "0.4"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("--q") != std::string::npos);

  const Result csv = invoke(cmd("classify", {"--phi", "0.3", "--format", "csv"}));
  CHECK(lines(csv.out).size() == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"bogus"}).code == 2);
  CHECK(invoke({"classify", "--sigma", "abc"}).code == 2);
  CHECK(invoke({"classify", "--format", "xml"}).code == 2);
  CHECK(invoke({"classify", "--uc", "-3"}).code == 2);
}

TEST_CASE("sweep") {
  const Result r = invoke(cmd("sweep", {"--steps", "101"}));
  CHECK(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 102);
  CHECK(rows[0] ==
        "phi,regime,phi_e,phi_v,phi_a,u_lo,u_hi,u_hi2,p_high_retained,p_low_retained,"
        "p_subversive_retained,welfare");
  CHECK(rows[1].rfind("0,AccountabilityListenBoth,0.5,0.669856459,0.736842105,0.375,", 0) == 0);
  CHECK(rows[51].find("AccountabilityListenBoth") != std::string::npos);
  CHECK(rows[52].find("NoAccountabilitySelectOnAlt") != std::string::npos);
  CHECK(rows[67].find("NoAccountabilitySelectOnAlt") != std::string::npos);
  CHECK(rows[68].find("AccountabilityMainstreamOnly") != std::string::npos);
  CHECK(lines(r.err).size() == 2);

  const Result one = invoke(cmd("sweep", {"--steps", "1"}));
  CHECK(lines(one.out).size() == 2);

  const Result fig1 = invoke(cmd("sweep", {"--k", "0.01", "--steps", "101"}));
  CHECK(fig1.code == 0);
  CHECK(lines(fig1.err).size() == 1);

  CHECK(invoke(cmd("sweep", {"--steps", "0"})).code == 2);
  CHECK(invoke(cmd("sweep", {"--from", "0.8", "--to", "0.2"})).code == 2);
  CHECK(invoke(cmd("sweep", {"--from", "0", "--to", "1.5"})).code == 2);
  CHECK(invoke(cmd("sweep", {"--vary", "k"})).code == 2);
  CHECK(invoke(cmd("sweep", {"--vary", "zeta"})).code == 2);

  const Result uc = invoke(cmd("sweep", {"--vary", "uc", "--from", "0.3", "--to", "0.5", "--steps", "2"}));
  CHECK(uc.code == 0);
  CHECK(lines(uc.out)[0].rfind("u_c,regime,", 0) == 0);
}

TEST_CASE("verify") {
  const Result ok = invoke(cmd("verify", {"--phi", "0.3", "--expect-classifier"}));
  CHECK(ok.code == 0);
  CHECK(ok.out.find("effort; retain on {(agree,NS)}") != std::string::npos);

  const Result mid = invoke(cmd("verify", {"--phi", "0.6"}));
  CHECK(mid.out.find("no-effort; retain on {(agree,NS) (disagree,NS) (disagree,S)}") != std::string::npos);

  const Result high = invoke(cmd("verify", {"--phi", "0.8"}));
  CHECK(high.out.find("effort; retain on {(agree,NS) (agree,S)}") != std::string::npos);

  const Result all = invoke(cmd("verify", {"--phi", "0.6", "--all"}));
  CHECK(all.out.find("voter at (disagree,S) gains 0.1 by retaining") != std::string::npos);

  const Result csv = invoke(cmd("verify", {"--phi", "0.3", "--format", "csv"}));
  CHECK(csv.out.find("17,1,1,0,0,0,1") != std::string::npos);
}

TEST_CASE("simulate") {
  const auto args = cmd("simulate", {"--phi", "0.3", "--profile", "listen-both", "--n", "1000000",
                                     "--seed", "42"});
  const Result a = invoke(args);
  CHECK(a.code == 0);
  const auto rows = lines(a.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == "source,n,seed,p_high_retained,p_low_retained,p_subversive_retained,welfare");
  CHECK(rows[2] == "theoretical,0,42,0.49,0.35,0,0.47315");
  REQUIRE(rows[1].rfind("empirical,1000000,42,", 0) == 0);
  const double high = std::stod(rows[1].substr(std::string("empirical,1000000,42,").size()));
  CHECK(std::abs(high - 0.49) <= 0.002);

  const Result again = invoke(args);
  CHECK(again.out == a.out);

  CHECK(invoke(cmd("simulate", {"--n", "0", "--seed", "1"})).code == 2);
  CHECK(invoke(cmd("simulate", {"--n", "10"})).code == 2);
  CHECK(invoke(cmd("simulate", {"--n", "10", "--seed", "1", "--profile", "nope"})).code == 2);
  CHECK(invoke(cmd("simulate", {"--n", "10", "--seed", "1", "--profile", "31"})).code == 0);
}

TEST_CASE("config file with flag override") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto cfg = dir / "mediagame_test.cfg";
  const auto out = dir / "mediagame_test_out.csv";
  {
    std::ofstream f(cfg);
    f << "# canonical point, effort cheap\nsigma=0.05\npi=0.5\nq=0.7\nk=0.01\ns=1\nuc=0.4\nphi=0.9\n";
  }
  const Result from_file = invoke({"classify", "--config", cfg.string()});
  CHECK(from_file.code == 0);
  CHECK(from_file.out.find("AccountabilityMainstreamOnly") != std::string::npos);

  const Result overridden = invoke({"classify", "--config", cfg.string(), "--phi", "0.2"});
  CHECK(overridden.out.find("AccountabilityListenBoth") != std::string::npos);

  const Result to_file = invoke({"sweep", "--config", cfg.string(), "--steps", "5", "--out", out.string()});
  CHECK(to_file.code == 0);
  CHECK(to_file.out.empty());
  std::ifstream f(out);
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(lines(buf.str()).size() == 6);
  std::filesystem::remove(cfg);
  std::filesystem::remove(out);
}
