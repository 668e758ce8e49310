// Copyright 2026 The qqo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs the command-line binary end to end.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

using Json = nlohmann::json;

struct CliRun {
    int code = -1;
    std::string out;
};

/// Runs the CLI with the given arguments; stdout is captured, stderr discarded.
CliRun run(const std::string &args) {
    const std::string cmd = std::string(QQO_CLI_PATH) + " " + args + " 2>/dev/null";
    CliRun r;
    FILE *p = popen(cmd.c_str(), "r");
    if (p == nullptr) {
        return r;
    }
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), p)) > 0) {
        r.out.append(buf, n);
    }
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string temp_path(const std::string &name) {
    return (std::filesystem::temp_directory_path() / ("qqo_cli_test_" + name)).string();
}

std::string sample(const std::string &name) {
    return std::string(QQO_SAMPLES_DIR) + "/" + name;
}

std::string slurp(const std::string &path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(cli, certify_cp_parameter) {
    const CliRun r = run("--epsilon 0.19 certify");
    ASSERT_EQ(r.code, 0) << r.out;
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["schema"], "v1");
    EXPECT_EQ(j["cp"]["is_cp"], true);
    EXPECT_EQ(j["positivity"]["is_positive"], true);
    EXPECT_EQ(j["ks"]["violation"], false);
    EXPECT_EQ(j["passes"], true);
}

TEST(cli, certify_one_third) {
    const CliRun r = run("--epsilon 0.3333333333 certify");
    ASSERT_EQ(r.code, 1) << r.out;
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["positivity"]["is_positive"], true);
    EXPECT_EQ(j["cp"]["is_cp"], false);
    EXPECT_EQ(j["ks"]["violation"], true);
    EXPECT_LT(j["ks"]["min_eig"].get<double>(), -1e-6);
}

TEST(cli, certify_not_positive) {
    const CliRun r = run("--epsilon 0.4 certify");
    ASSERT_EQ(r.code, 1) << r.out;
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["positivity"]["is_positive"], false);
    EXPECT_NEAR(j["positivity"]["margin"].get<double>(), 1.0 - 3 * 0.4, 1e-9);
    EXPECT_EQ(j["positivity"]["worst_w"].size(), 3u);
}

TEST(cli, certify_tensor_file) {
    const CliRun r = run("--tensor " + sample("family_0.15.json") + " certify");
    ASSERT_EQ(r.code, 0) << r.out;
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["input"]["tensor"], sample("family_0.15.json"));
    EXPECT_NEAR(j["positivity"]["margin"].get<double>(), 1.0 - 3 * 0.15, 1e-9);

    const CliRun shorthand = run("--tensor " + sample("epsilon_third.json") + " certify");
    EXPECT_EQ(shorthand.code, 1);
    EXPECT_EQ(Json::parse(shorthand.out)["input"]["band"], "positive");
}

TEST(cli, reports_are_deterministic) {
    const CliRun a = run("--epsilon 0.25 --seed 3 --samples 4000 certify");
    const CliRun b = run("--epsilon 0.25 --seed 3 --samples 4000 certify");
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
}

TEST(cli, simulate_converges) {
    const std::string csv = temp_path("sim.csv");
    const CliRun r = run("--epsilon 0.5 --init 0.6,0,0 --output " + csv + " simulate");
    ASSERT_EQ(r.code, 0) << r.out;
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["trajectory"]["converged"], true);
    const auto steps = j["trajectory"]["steps"].get<std::size_t>();
    EXPECT_LE(steps, 90u);

    std::ifstream in(csv);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "step,f1,f2,f3,rho");
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        std::stringstream ss(line);
        std::string cell;
        std::getline(ss, cell, ',');
        const auto n = std::stoul(cell);
        EXPECT_EQ(n, rows);
        for (int k = 0; k < 4; k++) {
            std::getline(ss, cell, ',');
        }
        EXPECT_LE(std::stod(cell), std::pow(0.75, static_cast<double>(n)) * 0.36 + 1e-15);
        rows++;
    }
    EXPECT_EQ(rows, steps + 1);
    std::filesystem::remove(csv);
}

TEST(cli, simulate_csv_to_stdout) {
    const CliRun r = run("--epsilon 0.5 --init 0.6,0,0 --steps 2 simulate");
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out.substr(0, 18), "step,f1,f2,f3,rho\n");
}

TEST(cli, simulate_stationary) {
    const CliRun r = run("--epsilon 0.5773502692 --init 0.5773502692,0.5773502692,0.5773502692 --output " +
                      temp_path("st.csv") + " simulate");
    ASSERT_EQ(r.code, 0) << r.out;
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["trajectory"]["converged"], false);
    EXPECT_EQ(j["trajectory"]["stationary"], true);
    EXPECT_NEAR(j["trajectory"]["limit"][0].get<double>(), 0.5773502692, 1e-10);
    std::filesystem::remove(temp_path("st.csv"));
}

TEST(cli, simulate_domain_errors) {
    EXPECT_EQ(run("--epsilon 0.7 simulate").code, 2);
    EXPECT_EQ(run("--epsilon 0.7 --init 0.1,0,0 simulate").code, 2);
    EXPECT_EQ(run("--epsilon 0.5 --init 0.9,0.9,0 simulate").code, 2);
    EXPECT_EQ(run("--tensor " + sample("single_entry.json") + " --init 0.1,0,0 simulate").code, 2);
}

TEST(cli, input_errors) {
    EXPECT_EQ(run("--tensor " + sample("malformed.json") + " certify").code, 2);
    EXPECT_EQ(run("--tensor /nonexistent.json certify").code, 2);
    EXPECT_EQ(run("certify").code, 2);
    EXPECT_EQ(run("--epsilon 0.1 --tensor " + sample("family_0.15.json") + " certify").code, 2);
    EXPECT_EQ(run("--epsilon abc certify").code, 2);
    EXPECT_EQ(run("--epsilon 0.1 frobnicate").code, 2);
    EXPECT_EQ(run("--epsilon 0.1").code, 2);
}

TEST(cli, ks_command) {
    const CliRun r = run("--epsilon 0.3333333333333333 --w=-0.1111111111111111,0,0.1388888888888889,0,0,0.18518518518518517 ks");
    ASSERT_EQ(r.code, 1) << r.out;
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["search"]["violation"], true);
    EXPECT_EQ(j["necessary"]["holds2"], false);
    EXPECT_NEAR(j["necessary"]["abcd"][3].get<double>(), 589.0 / 17496.0, 1e-12);

    const CliRun ok = run("--epsilon 0.1 ks");
    EXPECT_EQ(ok.code, 0);
    EXPECT_TRUE(Json::parse(ok.out)["necessary"].is_null());
}

TEST(cli, choi_command) {
    const CliRun r = run("--epsilon 0.2 choi");
    ASSERT_EQ(r.code, 1);
    const Json j = Json::parse(r.out);
    EXPECT_NEAR(j["spectral_radius_b8"].get<double>(), 3 * std::sqrt(3.0), 1e-9);
    EXPECT_EQ(j["choi"].size(), 8u);
    EXPECT_EQ(run("--epsilon 0.19 choi").code, 0);
}

TEST(cli, fixed_points_command) {
    const CliRun r = run("--epsilon 0.5773502691896258 fixed-points");
    ASSERT_EQ(r.code, 0);
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["fixed_points"]["points"].size(), 2u);
    EXPECT_EQ(j["fixed_points"]["sweep_agrees"], true);
    EXPECT_EQ(run("--tensor " + sample("single_entry.json") + " fixed-points").code, 2);
}

TEST(cli, sweep_command) {
    const std::string path = temp_path("sweep.json");
    const CliRun r = run("--from 0.1 --to 0.4 --count 4 --samples 3000 --output " + path + " sweep");
    ASSERT_EQ(r.code, 0);
    const Json j = Json::parse(slurp(path));
    ASSERT_EQ(j["rows"].size(), 4u);
    EXPECT_EQ(j["rows"][0]["is_cp"], true);
    EXPECT_EQ(j["rows"][1]["is_cp"], false);
    EXPECT_EQ(j["rows"][2]["is_positive"], true);
    EXPECT_EQ(j["rows"][3]["is_positive"], false);
    std::filesystem::remove(path);
}
