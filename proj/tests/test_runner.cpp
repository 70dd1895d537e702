// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "rebit/runner.hpp"

using namespace rebit;

namespace {

std::vector<std::string> data_rows(const std::string& csv) {
  std::vector<std::string> rows;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') rows.push_back(line);
  }
  return rows;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

RunConfig small_config() {
  RunConfig c;
  c.n_samples = 3000;
  c.seed = SeedSpec{424242, 512};
  c.workers = 2;
  return c;
}

}  // namespace

TEST_CASE("run_sample: byte-identical across repeats and worker counts") {
  RunConfig c = small_config();
  std::ostringstream a, b;
  run_sample(c, a);
  run_sample(c, b);
  CHECK(a.str() == b.str());

  c.workers = 1;
  std::ostringstream w1;
  run_sample(c, w1);
  c.workers = 8;
  std::ostringstream w8;
  run_sample(c, w8);
  CHECK(w1.str() == a.str());
  CHECK(w8.str() == a.str());
}

TEST_CASE("run_sample: row count, header and metadata") {
  RunConfig c = small_config();
  c.n_samples = 100;
  std::ostringstream out;
  run_sample(c, out);
  const std::string text = out.str();
  CHECK(text.find("# rebitlab ") != std::string::npos);
  CHECK(text.find("# master_seed: 424242") != std::string::npos);
  CHECK(text.find("# ensemble: real-mixed") != std::string::npos);

  const std::vector<std::string> rows = data_rows(text);
  REQUIRE(rows.size() == 101);  // header + 100 records
  CHECK(rows[0] == "participation_ratio,purity,entropy_vn,lambda_max,c_cfr,e_cfr,c_wootters,e_wootters");
}

TEST_CASE("run_sample: real-pure rows have unit participation ratio") {
  RunConfig c = small_config();
  c.ensemble = EnsembleKind::RealPure;
  c.n_samples = 500;
  std::ostringstream out;
  run_sample(c, out);
  const std::vector<std::string> rows = data_rows(out.str());
  for (std::size_t k = 1; k < rows.size(); ++k) {
    CHECK(std::abs(std::stod(split(rows[k])[0]) - 1.0) <= 1e-10);
  }
}

TEST_CASE("run_sample: complex ensembles omit the CFR columns") {
  RunConfig c = small_config();
  c.ensemble = EnsembleKind::ComplexMixed;
  c.n_samples = 10;
  std::ostringstream out;
  run_sample(c, out);
  const std::vector<std::string> rows = data_rows(out.str());
  CHECK(rows[0] == "participation_ratio,purity,entropy_vn,lambda_max,c_wootters,e_wootters");
}

TEST_CASE("run_hist: deterministic and worker-independent") {
  RunConfig c = small_config();
  c.column = "e_cfr";
  c.bins = 20;
  std::ostringstream a;
  run_hist(c, a);
  c.workers = 7;
  std::ostringstream b;
  run_hist(c, b);
  CHECK(a.str() == b.str());
  CHECK(data_rows(a.str()).size() == 21);
}

TEST_CASE("run_hist: unknown column and ensemble/column mismatch are config errors") {
  RunConfig c = small_config();
  c.column = "no_such_column";
  std::ostringstream out;
  CHECK_THROWS_AS(run_hist(c, out), ConfigError);

  c.column = "c_cfr";
  c.ensemble = EnsembleKind::ComplexPure;
  CHECK_THROWS_AS(run_hist(c, out), ConfigError);

  c.ensemble = EnsembleKind::RealMixed;
  c.bins = 1;
  c.column = "e_cfr";
  CHECK_THROWS_AS(run_hist(c, out), ConfigError);
}

TEST_CASE("run_hist: --input reduction reproduces on-the-fly data rows") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "rebitlab_runner_test";
  fs::create_directories(dir);
  const fs::path sample_path = dir / "sample.csv";

  RunConfig c = small_config();
  c.n_samples = 2000;
  {
    std::ofstream f(sample_path);
    run_sample(c, f);
  }

  c.column = "e_wootters";
  c.bins = 25;
  std::ostringstream direct;
  run_hist(c, direct);

  RunConfig from_file = c;
  from_file.input_csv = sample_path.string();
  std::ostringstream replayed;
  run_hist(from_file, replayed);

  CHECK(data_rows(direct.str()) == data_rows(replayed.str()));
  fs::remove_all(dir);
}

TEST_CASE("run_hist: missing input file is an I/O error, missing column a config error") {
  namespace fs = std::filesystem;
  RunConfig c = small_config();
  c.column = "e_cfr";
  c.input_csv = "/nonexistent/sample.csv";
  std::ostringstream out;
  CHECK_THROWS_AS(run_hist(c, out), IoError);

  // A complex-ensemble sample file has no CFR columns to reduce.
  const fs::path dir = fs::temp_directory_path() / "rebitlab_input_test";
  fs::create_directories(dir);
  const fs::path complex_csv = dir / "complex.csv";
  RunConfig sampler = small_config();
  sampler.ensemble = EnsembleKind::ComplexPure;
  sampler.n_samples = 50;
  {
    std::ofstream f(complex_csv);
    run_sample(sampler, f);
  }
  RunConfig reader = small_config();
  reader.column = "c_cfr";
  reader.input_csv = complex_csv.string();
  CHECK_THROWS_AS(run_hist(reader, out), ConfigError);
  fs::remove_all(dir);
}

TEST_CASE("run_mean_vs: shape, counts and missing means for empty bins") {
  RunConfig c = small_config();
  c.ensemble = EnsembleKind::RealPure;  // every sample has R = 1: all but one bin empty
  c.n_samples = 300;
  c.x_column = "participation_ratio";
  c.y_columns = {"e_cfr"};
  c.bins = 10;
  std::ostringstream out;
  run_mean_vs(c, out);
  const std::vector<std::string> rows = data_rows(out.str());
  REQUIRE(rows.size() == 11);
  CHECK(rows[0] == "x_center,mean_e_cfr,stderr_e_cfr,count");

  std::size_t nonempty = 0;
  std::uint64_t total = 0;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const auto fields = split(rows[k]);
    REQUIRE(fields.size() == 4);
    const std::uint64_t count = std::stoull(fields[3]);
    total += count;
    if (count == 0) {
      CHECK(fields[1].empty());
      CHECK(fields[2].empty());
    } else {
      ++nonempty;
      CHECK_FALSE(fields[1].empty());
    }
  }
  CHECK(nonempty == 1);
  CHECK(total == 300);
}

TEST_CASE("run_mean_vs: real-mixed e_cfr bins dominate e_wootters bins") {
  RunConfig c = small_config();
  c.n_samples = 20000;
  c.bins = 12;
  std::ostringstream out;
  run_mean_vs(c, out);
  const std::vector<std::string> rows = data_rows(out.str());
  CHECK(rows[0] == "x_center,mean_e_cfr,stderr_e_cfr,mean_e_wootters,stderr_e_wootters,count");
  std::size_t compared = 0;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const auto fields = split(rows[k]);
    REQUIRE(fields.size() == 6);
    if (fields[1].empty() || fields[5] == "0") continue;
    CHECK(std::stod(fields[1]) >= std::stod(fields[3]));  // mean_e_cfr >= mean_e_wootters
    ++compared;
  }
  CHECK(compared > 5);
}

TEST_CASE("run_curves: endpoints of all three files") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "rebitlab_curves_test";
  RunConfig c;
  c.curve_points = 101;
  const CurveFiles files = run_curves(c, dir);

  auto read = [](const fs::path& p) {
    std::ifstream f(p);
    std::stringstream ss;
    ss << f.rdbuf();
    return data_rows(ss.str());
  };

  const auto boundary = read(files.boundary);
  CHECK(boundary.front() == "participation_ratio,c2_max");
  CHECK(boundary[1] == "1,1");
  CHECK(boundary.back() == "4,0");

  const auto density = read(files.pure_density);
  const auto last = split(density.back());
  CHECK(std::stod(last[0]) == 1.0);
  CHECK(std::stod(last[1]) == doctest::Approx(std::numbers::ln2).epsilon(1e-15));

  const auto family = read(files.maximal_family);
  const auto mid = split(family[1 + 50]);  // beta = 0 row
  CHECK(std::stod(mid[0]) == 0.0);
  CHECK(std::stod(mid[1]) == 0.0);
  CHECK(std::stod(mid[2]) == 0.0);
  CHECK(std::stod(mid[3]) == 4.0);
  fs::remove_all(dir);
}

TEST_CASE("parse_ensemble and find_column cover the public names") {
  CHECK(parse_ensemble("real-mixed") == EnsembleKind::RealMixed);
  CHECK(parse_ensemble("complex-pure") == EnsembleKind::ComplexPure);
  CHECK_THROWS_AS(parse_ensemble("bogus"), ConfigError);

  for (const char* name : {"participation_ratio", "purity", "entropy_vn", "lambda_max",
                           "c_cfr", "e_cfr", "c_wootters", "e_wootters"}) {
    CHECK(find_column(name) != nullptr);
  }
  CHECK(find_column("nope") == nullptr);
}
