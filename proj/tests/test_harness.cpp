/*
   Copyright 2026 ffcircle developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "harness.hpp"

using namespace ffc;

#ifndef FFC_GOLDEN_DIR
#define FFC_GOLDEN_DIR "tests/golden"
#endif

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("derived experiment parameters") {
    auto f3 = FieldDesc::prime(3);
    const auto p = params_compute(f3, 6, 2, 2, 0.5, 729, 729);
    CHECK(p.rho == doctest::Approx(1.0));
    CHECK(p.j == 3);
    CHECK(p.k == 3);
    CHECK(p.threshold == 3);

    // rho = 1 for full sets regardless of n; the truncated logs keep j at 3
    for (int n = 4; n <= 8; ++n) {
        const std::uint64_t qn = pow_u64(3, static_cast<unsigned>(n));
        CHECK(params_compute(f3, n, 2, 2, 0.5, qn, qn).j == 3);
    }

    // j must leave room inside the degree
    CHECK_THROWS_AS(params_compute(f3, 1, 2, 2, 0.5, 3, 3), Error);
    try {
        params_compute(f3, 3, 2, 2, 0.5, 27, 27);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::j_out_of_range);
    }

    // q = 2 admits no valid scalar pair
    auto f2 = FieldDesc::prime(2);
    CHECK_THROWS_AS(default_scalars(*f2), Error);
    try {
        params_compute(f2, 6, {}, {}, 0.5, 64, 64);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::no_valid_scalars);
    }

    // scalar validation
    CHECK_THROWS_AS(params_compute(f3, 6, 1, 1, 0.5, 729, 729), Error);
    CHECK(params_compute(f3, 6, {}, {}, 0.5, 729, 729).alpha == 2);
}

TEST_CASE("j grows as the sets shrink") {
    auto f3 = FieldDesc::prime(3);
    const int n = 12;
    int prev = 0;
    for (std::uint64_t size = pow_u64(3, 12); size >= 9; size /= 3) {
        int j;
        try {
            j = params_compute(f3, n, 2, 2, 0.5, size, size).j;
        } catch (const Error&) {
            break;  // j reached n; even smaller sets only push it further
        }
        CHECK(j >= prev);
        prev = j;
    }
    CHECK(prev > 3);
}

TEST_CASE("set construction") {
    auto f3 = FieldDesc::prime(3);
    std::vector<std::string> warnings;
    const PolySet all = build_set(f3, 3, SetSpec::parse("all"), 0, ResourceCap{}, &warnings);
    CHECK(all.size() == 27);

    const PolySet r1 = build_set(f3, 3, SetSpec::parse("random:5:42"), 0, ResourceCap{}, &warnings);
    const PolySet r2 = build_set(f3, 3, SetSpec::parse("random:5:42"), 7, ResourceCap{}, &warnings);
    CHECK(r1.indices() == r2.indices());  // explicit seed wins over the run seed

    // file sets: parsed, validated, deduplicated with a warning
    const std::string path = "ffc_test_set.txt";
    {
        std::ofstream out(path);
        out << "# comment\n1,0,1\nT^2+1\n1,2,0\n";
    }
    warnings.clear();
    const PolySet fs = build_set(f3, 2, SetSpec::parse(path), 0, ResourceCap{}, &warnings);
    CHECK(fs.size() == 2);
    CHECK(warnings.size() == 1);

    {
        std::ofstream out(path);
        out << "1,0,1,1\n";  // degree 3, not 2
    }
    CHECK_THROWS_AS(build_set(f3, 2, SetSpec::parse(path), 0, ResourceCap{}, nullptr), Error);
    std::remove(path.c_str());

    CHECK_THROWS_AS(build_set(f3, 2, SetSpec::parse("no_such_file.txt"), 0, ResourceCap{}, nullptr),
                    Error);
}

TEST_CASE("experiment report fields and determinism") {
    ExperimentConfig config;
    config.field_spec = "3";
    config.n = 4;
    config.eta = 0.5;
    config.set_a = SetSpec::parse("all");
    config.set_b = SetSpec::parse("all");

    const Json a = experiment_report(config);
    const Json b = experiment_report(config);
    CHECK(a.dump() == b.dump());  // byte-identical on identical config

    CHECK(a["j"] == 3);
    CHECK(a["k"] == 1);
    CHECK(a["alpha"] == 2);
    CHECK(a["correlation"]["sum_u"] == 81 * 81);
    // full sets, j=3: I1 = (81 * 243) / 3^1 = 6561 exactly
    CHECK(a["correlation"]["I1"]["num"] == 6561);
    CHECK(a["correlation"]["I1"]["den"] == 1);
    CHECK(!a.contains("wall_time_ms"));

    // the full-set pair count matches independent enumeration of M_n
    std::uint64_t with_large_divisor = 0;
    auto f3 = FieldDesc::prime(3);
    for (const Poly& g : MonicRange(f3, 4))
        if (max_irred_degree(g) >= a["threshold"].get<int>()) ++with_large_divisor;
    CHECK(a["correlation"]["pair_count"].get<std::uint64_t>() == 81 * with_large_divisor);

    ExperimentConfig timed = config;
    timed.timings = true;
    CHECK(experiment_report(timed).contains("wall_time_ms"));
}

TEST_CASE("frozen experiment report bytes") {
    // q=3, n=6, random 243-element sets, seed 7: byte-for-byte reproducible
    ExperimentConfig config;
    config.field_spec = "3";
    config.n = 6;
    config.eta = 0.5;
    config.set_a = SetSpec::parse("random:243:7");
    config.set_b = SetSpec::parse("random:243:8");
    config.seed = 7;
    config.include_tables = false;

    const std::string expected = read_file(std::string(FFC_GOLDEN_DIR) + "/experiment_q3n6.json");
    CHECK(experiment_report(config).dump(2) + "\n" == expected);
}

TEST_CASE("config text parsing") {
    const auto config = ExperimentConfig::from_kv_text(
        "# comment\nfield = 3\nn = 5\nalpha = 2\nbeta = 2\neta = 1.25\n"
        "set_a = random:20:3\nset_b = all\nseed = 11\ncap = 1000000\ntables = off\n");
    CHECK(config.field_spec == "3");
    CHECK(config.n == 5);
    CHECK(config.eta == doctest::Approx(1.25));
    CHECK(config.set_a.kind == SetSpec::Kind::random);
    CHECK(config.set_a.size == 20);
    CHECK(config.set_b.kind == SetSpec::Kind::full);
    CHECK(config.seed == 11);
    CHECK(config.include_tables.has_value());
    CHECK_FALSE(*config.include_tables);

    CHECK_THROWS_AS(ExperimentConfig::from_kv_text("unknown = 1\n"), Error);
    CHECK_THROWS_AS(ExperimentConfig::from_kv_text("n 5\n"), Error);
}

TEST_CASE("verify suites pass at the quick level") {
    const auto results = verify_all(VerifyLevel::quick, 0, ResourceCap{});
    CHECK(results.size() == 7);
    for (const auto& suite : results) {
        INFO(suite.name, ": ", suite.detail);
        CHECK(suite.pass);
        CHECK(suite.checks > 0);
    }
    const Json rep = verify_report(VerifyLevel::quick, 0, 10'000'000);
    CHECK(rep["all_pass"].get<bool>());
    CHECK(verify_report(VerifyLevel::quick, 0, 10'000'000).dump() == rep.dump());
}

TEST_CASE("csv rendering") {
    const Json rep = count_classes_report("3", 2, 0, "1,0", 10'000'000);
    const std::string csv = report_to_csv(rep);
    CHECK(csv.find("key,value") == 0);
    CHECK(csv.find("lead,residue,count") != std::string::npos);
    CHECK(csv.find("\"1,0\"") != std::string::npos);  // poly text gets quoted

    const Json approx = approx_report("3", "1/1,0,1", 2, "floor");
    CHECK(approx["g"] == "0");
    CHECK(approx["h"] == "1");
    CHECK(approx["gamma_exponent"] == -2);
    const std::string acsv = report_to_csv(approx);
    CHECK(acsv.find("gamma_exponent,-2") != std::string::npos);
}

TEST_CASE("count-classes report") {
    const Json rep = count_classes_report("3", 2, 0, "1,0", 10'000'000);
    CHECK(rep["irreducible_total"] == 3);
    CHECK(rep["closed_form_count"] == 3);
    CHECK(rep["partition_total"] == 3);
    REQUIRE(rep["rows"].size() == 2);
    CHECK(rep["rows"][0]["count"] == 1);
    CHECK(rep["rows"][1]["count"] == 2);
    CHECK(rep["rows"][1]["main_term"]["num"] == 9);
    CHECK(rep["rows"][1]["main_term"]["den"] == 4);
}

TEST_CASE("bounds reports") {
    const Json va = bounds_report("va03", "q=2;k=1:2;l=1:2;bdeg=1:2", 0, 10'000'000);
    CHECK(va["point_count"].get<std::size_t>() >= 16);
    CHECK(std::isfinite(va["max_ratio"].get<double>()));

    const Json ir = bounds_report("irredsum", "q=3;n=2:4;bdeg=1:2", 0, 10'000'000);
    CHECK(ir["point_count"].get<std::size_t>() >= 8);
    CHECK(std::isfinite(ir["max_ratio"].get<double>()));

    const Json fs = bounds_report("fsmain", "q=3;n=4:5;j=1:2;samples=4", 0, 10'000'000);
    CHECK(fs["points"].size() == 4);
    CHECK(fs["excluded"].get<int>() == 2);  // the j = 1 rows are vacuous

    CHECK_THROWS_AS(bounds_report("nope", "default", 0, 10'000'000), Error);
    CHECK_THROWS_AS(bounds_report("va03", "bad grid", 0, 10'000'000), Error);
}
