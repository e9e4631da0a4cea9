#include "doctest.h"

#include "spinmap/cli.hpp"
#include "spinmap/couplings.hpp"
#include "spinmap/partition.hpp"
#include "spinmap/polynomial.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "spinmap");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = spinmap::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string value_of(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  std::string line;
  const std::string prefix = key + " = ";
  while (std::getline(in, line)) {
    if (line.rfind(prefix, 0) == 0) return line.substr(prefix.size());
  }
  return {};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("spinmap_test_" + name);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("inverse prints weight-labelled polynomials") {
    const Result r = run({"inverse", "--p", "2", "--M", "2"});
    CHECK(r.code == 0);
    CHECK(value_of(r.out, "sigma[weight 1]") == "[0, -7/6, 0, 2/3]");
    CHECK(value_of(r.out, "sigma[weight 2]") == "[0, 13/12, 0, -1/3]");
    CHECK(r.out.find("weight\tj=0\tj=1\tj=2\tj=3\n") != std::string::npos);
    // printed polynomials parse back
    CHECK(spinmap::RationalPolynomial::parse(value_of(r.out, "sigma[weight 1]")).str() == "[0, -7/6, 0, 2/3]");
  }

  TEST_CASE("tsv format") {
    const Result r = run({"--format", "tsv", "inverse", "--p", "2", "--M", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("sigma[weight 1]\t[0, 1]\n") != std::string::npos);
    CHECK(run({"--format", "csv", "inverse", "--p", "2", "--M", "1"}).code == 2);
  }

  TEST_CASE("partition symbolic") {
    const Result r = run({"partition", "--M", "2", "--symbolic"});
    CHECK(r.code == 0);
    CHECK(r.out == "2 * exp(-1/2*J + 0*h)\n1 * exp(1/2*J - 1*h)\n1 * exp(1/2*J + 1*h)\n");
    CHECK(spinmap::SymbolicZ::parse(r.out) == spinmap::partition_symbolic(spinmap::ChainSpec(2)));
  }

  TEST_CASE("partition numeric") {
    const Result r = run({"partition", "--M", "2", "--J", "2", "--h", "1"});
    CHECK(r.code == 0);
    CHECK(std::abs(std::stod(value_of(r.out, "Z")) - (std::exp(2.0) + 2 * std::exp(-1.0) + 1.0)) < 1e-13);
    CHECK(run({"partition", "--M", "2"}).code == 2);
    CHECK(run({"partition", "--M", "2", "--symbolic", "--J", "1", "--h", "1"}).code == 2);
    CHECK(run({"partition", "--M", "1", "--J", "1", "--h", "1"}).code == 1);
    CHECK(value_of(run({"partition", "--M", "5000", "--J", "2", "--h", "1"}).out, "Z") == "overflow");
  }

  TEST_CASE("roundtrip") {
    const Result r = run({"roundtrip", "--p", "7", "--M", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
  }

  TEST_CASE("limits need acknowledgment") {
    CHECK(run({"derive", "--p", "2", "--M", "6"}).code == 1);
    const Result refused = run({"--limit", "64", "derive", "--p", "2", "--M", "6"});
    CHECK(refused.code == 2);
    CHECK(refused.err.find("--allow-large") != std::string::npos);
    CHECK(run({"--limit", "4", "inverse", "--p", "2", "--M", "3"}).code == 1);
    CHECK(run({"--limit", "8", "inverse", "--p", "2", "--M", "3"}).code == 0);
  }

  TEST_CASE("derive (2,3) lists the layer constants") {
    const Result r = run({"derive", "--p", "2", "--M", "3"});
    CHECK(r.code == 0);
    CHECK(value_of(r.out, "K11").rfind("J11 + 61/4*J13", 0) == 0);
    CHECK(value_of(r.out, "s1i*s1j") == value_of(r.out, "K11"));
  }

  TEST_CASE("reduce a coupling file") {
    const auto path = temp_file("couplings.txt");
    {
      std::ofstream f(path);
      f << "gamma = 2\nJ13 = 1\nh6 = 1\n";
    }
    const Result r = run({"reduce", "--couplings", path.string()});
    CHECK(r.code == 0);
    CHECK(value_of(r.out, "K11") == "61/4");
    CHECK(value_of(r.out, "K21") == "6331/4");
    CHECK(!value_of(r.out, "offset").empty());
    CHECK(r.out.find("# equivalence holds over 64 bond configurations") != std::string::npos);
    std::filesystem::remove(path);

    CHECK(run({"reduce", "--couplings", "/nonexistent/file"}).code == 1);
    CHECK(run({"reduce"}).code == 2);
  }

  TEST_CASE("solve output is a coupling file") {
    const Result r = run({"solve", "--case", "periodic", "--J77", "1", "--h6", "16", "--gamma", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("# K1 = 105840/19\n") != std::string::npos);
    CHECK(r.out.find("# K2 = 5760\n") != std::string::npos);
    const spinmap::SpinCouplings c = spinmap::SpinCouplings::parse(r.out);
    CHECK(c.h(2) == spinmap::BigRational(259));
    CHECK(c.gamma() == 2);

    const Result exact = run({"solve", "--case", "exact", "--J77", "64"});
    CHECK(exact.out.find("# K33 = -131947200\n") != std::string::npos);
    CHECK(run({"solve", "--case", "free", "--h6", "16"}).out.find("# K3 = -1440\n") != std::string::npos);
    CHECK(run({"solve", "--case", "other"}).code == 2);
    CHECK(run({"solve", "--case", "free", "--h6", "x"}).code == 1);
  }

  TEST_CASE("free energy") {
    const Result r = run({"free-energy", "--J", "1", "--h", "0"});
    CHECK(r.code == 0);
    CHECK(std::abs(std::stod(value_of(r.out, "f")) - std::log(2 * std::cosh(0.25))) < 1e-15);
  }

  TEST_CASE("errata") {
    const Result r = run({"errata"});
    CHECK(r.code == 0);
    for (const char* n : {"1. [", "2. [", "3. [", "4. [", "5. ["}) CHECK(r.out.find(n) != std::string::npos);
    CHECK(r.out.find("6. [") == std::string::npos);
  }

  TEST_CASE("output file") {
    const auto path = temp_file("out.txt");
    const Result r = run({"--output", path.string(), "partition", "--M", "3", "--symbolic"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::stringstream content;
    content << f.rdbuf();
    CHECK(content.str() == run({"partition", "--M", "3", "--symbolic"}).out);
    std::filesystem::remove(path);
  }

  TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"inverse", "--p", "2"}).code == 2);
    CHECK(run({"inverse", "--p", "2", "--M", "2", "--frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("deterministic output") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"inverse", "--p", "3", "--M", "2"}, {"derive", "--p", "2", "--M", "2"}, {"errata"}}) {
      CHECK(run(args).out == run(args).out);
    }
  }
}
