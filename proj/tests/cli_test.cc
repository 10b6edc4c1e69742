// Copyright 2026 The bks Authors
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

#include "cli.h"

#include <gtest/gtest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = bks::cli::run(args, out, err);
    return Result{code, out.str(), err.str()};
}

std::string write_temp(const std::string &name, const std::string &content) {
    std::string path = ::testing::TempDir() + "/" + name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST(Cli, parity_proof_counts) {
    auto r = run({"parity-proofs", "--qubits", "3", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    json j = json::parse(r.out);
    EXPECT_EQ(j["counts"]["36-11"], 320);
    EXPECT_EQ(j["counts"]["38-13"], 640);
    EXPECT_EQ(j["counts"]["40-15"], 64);
    EXPECT_EQ(j["meta"]["version"], std::string(bks::cli::kVersion));
    EXPECT_EQ(j["meta"]["seed"], 0);
    EXPECT_EQ(j["meta"]["command"], "bks parity-proofs --qubits 3 --format json");
}

TEST(Cli, parity_type_filter) {
    auto r = run({"parity-proofs", "--qubits", "2", "--type", "20-11A"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out)["total"], 96);
    EXPECT_EQ(run({"parity-proofs", "--qubits", "2", "--type", "7-3"}).code, 2);
}

TEST(Cli, verify_named_proof) {
    auto r = run({"verify", "--paper-proof", "80-21"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out)["result"], "non-colorable");
}

TEST(Cli, verify_colorable_file) {
    std::string path = write_temp("colorable.json", R"({"catalog": "rays24", "bases": [[1,2,3,4],[5,6,7,8]]})");
    auto r = run({"verify", path});
    EXPECT_EQ(r.code, 1);
    json j = json::parse(r.out);
    EXPECT_EQ(j["result"], "colorable");
    EXPECT_EQ(j["true_rays"].size(), 2u);
}

TEST(Cli, distances_csv) {
    auto r = run({"distances", "--qubits", "2", "--format", "csv"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("class_label,dist_sq,dist,count\n"), std::string::npos);
    EXPECT_NE(r.out.find("a1,1/3,0.577350,"), std::string::npos);
    EXPECT_NE(r.out.find("a5,1/1,1.000000,"), std::string::npos);
    EXPECT_EQ(r.out.rfind("# bks ", 0), 0u);
}

TEST(Cli, named_proof_feeds_verify_and_aut) {
    auto emitted = run({"paper-proof", "--name", "18-9"});
    ASSERT_EQ(emitted.code, 0);
    std::string path = write_temp("ms9.json", emitted.out);
    EXPECT_EQ(run({"verify", path}).code, 0);
    auto critical = run({"critical", path});
    EXPECT_EQ(critical.code, 0);
    EXPECT_TRUE(json::parse(critical.out)["basis_critical"].get<bool>());
    auto aut = run({"aut", "--crossing", path, "--overlap", "1"});
    ASSERT_EQ(aut.code, 0);
    EXPECT_EQ(json::parse(aut.out)["order"], "72");
}

TEST(Cli, aut_configs) {
    EXPECT_EQ(json::parse(run({"aut", "--config", "pentagram3q"}).out)["order"], "120");
    EXPECT_EQ(run({"aut", "--config", "hexagon"}).code, 2);
    EXPECT_EQ(run({"aut"}).code, 2);
}

TEST(Cli, emit_tables_two_qubits) {
    auto r = run({"emit-tables", "--qubits", "2", "--format", "csv"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("24-15,16,18,18,9,54,6,105\n"), std::string::npos);
    EXPECT_NE(r.out.find("18-9,16,0,18,0,18,0,36\n"), std::string::npos);
}

TEST(Cli, deterministic_output) {
    std::vector<std::string> args{"search4q", "--seed", "7", "--attempts", "2"};
    auto a = run(args);
    auto b = run(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(json::parse(a.out)["meta"]["seed"], 7);
}

TEST(Cli, input_errors_exit_two) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"rays", "--qubits", "5"}).code, 2);
    EXPECT_EQ(run({"rays", "--qubits", "4", "--generated"}).code, 2);
    EXPECT_EQ(run({"verify", "/nonexistent/proof.json"}).code, 2);
    EXPECT_EQ(run({"verify", write_temp("bad.json", "[1, 2")}).code, 2);
    EXPECT_EQ(run({"paper-proof", "--name", "nope"}).code, 2);
    EXPECT_EQ(run({"paper-proof", "--name", "80-21", "--format", "csv"}).code, 2);
    EXPECT_EQ(run({"search4q"}).code, 2);
}

TEST(Cli, rays_formats) {
    auto j = json::parse(run({"rays", "--qubits", "2"}).out);
    EXPECT_EQ(j["n"], 2);
    EXPECT_EQ(j["rays"].size(), 24u);
    auto text = run({"rays", "--qubits", "2", "--generated", "--format", "text"});
    EXPECT_EQ(text.code, 0);
    EXPECT_NE(text.out.find("\n24: ("), std::string::npos);
    EXPECT_NE(run({"rays", "--qubits", "2", "--format", "text"}).out.find("\n1: (1,0,0,0)\n"), std::string::npos);
}
