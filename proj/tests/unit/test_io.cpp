#include <doctest.h>

#include <sstream>

#include <blaschke_lab/io.hpp>
#include <blaschke_lab/seqgen.hpp>

#include "support.hpp"

using namespace blaschke_lab;

TEST_CASE("sequence round-trip is exact") {
  std::mt19937_64 rng(127);
  for (int t = 0; t < 20; ++t) {
    std::vector<DiskPoint> pts;
    std::vector<int> mult;
    for (int i = 0; i < 30; ++i) {
      pts.emplace_back(support::random_disk(rng, 1.0 - 1e-12));
      mult.push_back(1 + i % 3);
    }
    const FiniteSequence s(pts, mult);
    std::stringstream buf;
    write_sequence(buf, s);
    CHECK(read_sequence(buf) == s);
  }
}

TEST_CASE("sequence parse errors") {
  const auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_sequence(in);
  };
  CHECK(parse("# only a comment\n\n").empty());
  CHECK(parse("0.5 0 2\n").multiplicity(0) == 2);
  CHECK_THROWS_AS(parse("0.5 0\n"), ParseError);
  CHECK_THROWS_AS(parse("0.5 x 1\n"), ParseError);
  CHECK_THROWS_AS(parse("0.5 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse("0.5 0 1.5\n"), ParseError);
  CHECK_THROWS_AS(parse("1 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse("0.5 0 1\n0.5 0 1\n"), ParseError);
  CHECK_THROWS_WITH_AS(parse("0 0 1\nbad\n"), "line 2: expected 're im mult'", ParseError);
  CHECK_THROWS_AS(read_sequence_file("/nonexistent/file.txt"), ParseError);
}

TEST_CASE("targets round-trip and validation") {
  const ClusterPartition part = cluster_sequence(
      FiniteSequence({DiskPoint(0.0, 0.0), DiskPoint(0.05, 0.0), DiskPoint(0.9, 0.0)}, {1, 2, 1}), 0.1, 0.9);
  std::vector<HermiteJet> jets;
  for (const Cluster& c : part.clusters) jets.push_back(zero_jet(c));
  jets[0].derivatives[1][1] = Complex(0.1, -1.0 / 3.0);
  jets[1].derivatives[0][0] = Complex(2.0, 0.0);
  std::stringstream buf;
  write_targets(buf, part, jets);
  const std::vector<HermiteJet> back = read_targets(buf, part);
  REQUIRE(back.size() == jets.size());
  for (std::size_t k = 0; k < jets.size(); ++k) CHECK(back[k].derivatives == jets[k].derivatives);

  const auto parse = [&](const std::string& text) {
    std::istringstream in(text);
    return read_targets(in, part);
  };
  CHECK_THROWS_AS(parse("2 0 0 1 0\n"), ParseError);
  CHECK_THROWS_AS(parse("0 2 0 1 0\n"), ParseError);
  CHECK_THROWS_AS(parse("0 0 1 1 0\n"), ParseError);
  CHECK_THROWS_AS(parse("0 0 0 1\n"), ParseError);
}

TEST_CASE("report round-trip keeps order") {
  Report r;
  r.set("input", "points", 3L);
  r.set("carleson", "norm", 1.5);
  r.set("verdict", "verdict", "pass");
  r.set("input", "p", 2.0);
  std::stringstream buf;
  r.write(buf);
  const Report back = Report::parse(buf);
  CHECK(back.get("input", "points") == "3");
  CHECK(back.get("carleson", "norm") == "1.5");
  CHECK(back.get("verdict", "verdict") == "pass");
  CHECK(back.get("missing", "key").empty());
  std::stringstream again;
  back.write(again);
  std::stringstream first;
  r.write(first);
  CHECK(again.str() == first.str());
  std::istringstream bad("key = value\n");
  CHECK_THROWS_AS(Report::parse(bad), ParseError);
}

TEST_CASE("format_double round-trips") {
  std::mt19937_64 rng(131);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng) * std::pow(10.0, static_cast<int>(u(rng) * 30));
    CHECK(std::stod(format_double(x)) == x);
  }
}
