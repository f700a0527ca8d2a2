// Copyright 2026 The LOSR Toolkit Authors
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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.h"
#include "losr/quantum/catalog.h"
#include "losr/quantum/state_io.h"

using namespace losr;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string first_line(const std::string &s) {
    return s.substr(0, s.find('\n'));
}

}  // namespace

TEST(cli, schmidt) {
    EXPECT_EQ(run({"schmidt", "two_bell", "A|BC"}).out, "0.25 0.25 0.25 0.25\n");
    EXPECT_EQ(run({"schmidt", "ghz", "A|BC"}).out, "0.5 0.5\n");
    EXPECT_EQ(run({"schmidt", "phi_plus", "A|B"}).out, "0.5 0.5\n");
    EXPECT_EQ(run({"schmidt", "phi_plus"}).out, "0.5 0.5\n");
    EXPECT_EQ(run({"schmidt", "ghz", "A|B"}).code, kExitInput);
    EXPECT_EQ(run({"schmidt", "ghz"}).code, kExitInput);
}

TEST(cli, compare) {
    EXPECT_EQ(first_line(run({"compare", "phi_plus", "partial(0.3927)"}).out), "Incomparable Decided");
    EXPECT_EQ(first_line(run({"compare", "two_bell", "ghz"}).out), "Incomparable Decided");
    EXPECT_EQ(first_line(run({"compare", "phi_plus", "phi_plus"}).out), "Equivalent Decided");
    CliRun r = run({"compare", "max(4)", "phi_plus"});
    EXPECT_EQ(first_line(r.out), "PsiToPhiOnly Decided");
    EXPECT_NE(r.out.find("A|B: 0.5 0.5"), std::string::npos);
    EXPECT_EQ(first_line(run({"multi-check", "chiral", "chiral"}).out), "Inconclusive NecessaryPassedOnly");
}

TEST(cli, factor) {
    EXPECT_EQ(first_line(run({"factor", "max(4)", "phi_plus"}).out), "found 0.5 0.5");
    EXPECT_EQ(first_line(run({"factor", "phi_plus", "max(4)"}).out), "not_found RankRatioNonInteger");
    EXPECT_EQ(first_line(run({"factor", "ghz", "two_bell", "A|BC"}).out), "not_found RankRatioNonInteger");
}

TEST(cli, yield) {
    CliRun r = run({"yield", "phi_plus", "chsh"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NEAR(std::stod(r.out), 2.0 * std::sqrt(2.0), 1e-6);
    EXPECT_LE(std::stod(run({"yield", "phi_plus", "hardy"}).out), 1e-6);
    EXPECT_NEAR(std::stod(run({"yield", "partial(best)", "hardy"}).out), 0.09017, 1e-3);
    EXPECT_NE(run({"yield", "phi_plus", "tilted", "--alpha", "0.5", "--restarts", "4", "--seed", "3"}).out.find(
                  " 4 3\n"),
              std::string::npos);
    EXPECT_EQ(run({"yield", "phi_plus", "mermin"}).code, kExitInput);
}

TEST(cli, boxes) {
    CliRun pr = run({"box-local", "pr_box"});
    EXPECT_EQ(pr.out.substr(0, 9), "Nonlocal ");
    EXPECT_NE(pr.out.find("verified yes"), std::string::npos);
    CliRun u = run({"box-local", "uniform_box"});
    EXPECT_EQ(u.out.substr(0, 6), "Local ");
    EXPECT_NE(u.out.find("verified yes"), std::string::npos);
    EXPECT_NEAR(std::stod(run({"box-eval", "tsirelson_box", "chsh"}).out), 2.0 * std::sqrt(2.0), 1e-10);
    EXPECT_NEAR(std::stod(run({"box-eval", "mermin_box", "mermin"}).out), 1.0, 1e-10);
    EXPECT_EQ(run({"box-eval", "pr_box", "hardy"}).out, "0\nviolation 0.5\n");
}

TEST(cli, files) {
    std::string path = testing::TempDir() + "losr_cli_state.txt";
    {
        std::ofstream f(path);
        write_state(f, catalog::partial(0.3));
    }
    EXPECT_EQ(run({"schmidt", path}).out, run({"schmidt", "partial(0.3)"}).out);
    std::remove(path.c_str());
    std::string bad = testing::TempDir() + "losr_cli_bad.txt";
    {
        std::ofstream f(bad);
        f << "2 2\n1 0\n";
    }
    EXPECT_EQ(run({"schmidt", bad}).code, kExitInput);
    std::remove(bad.c_str());
}

TEST(cli, selftest_scan) {
    CliRun r = run({"selftest-scan", "chsh", "2.8284271", "phi_plus", "phi_plus", "partial(0.3927)", "product"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("0 2.828427125 yes converts"), std::string::npos);
    EXPECT_NE(r.out.find("condition satisfied"), std::string::npos);
}

TEST(cli, demos) {
    for (const char *name : {"anomaly", "ghz_mermin", "flag_selftest", "catalysis"}) {
        CliRun r = run({"demo", name});
        EXPECT_EQ(r.code, kExitOk) << name << "\n" << r.out;
        EXPECT_EQ(r.out.find("FAILED"), std::string::npos);
    }
    EXPECT_NE(run({"demo", "catalysis"}).out.find("counterexamples 0"), std::string::npos);
    EXPECT_EQ(run({"demo", "nothing"}).code, kExitInput);
}

TEST(cli, deterministic_output_and_flags) {
    std::vector<std::string> args{"--seed", "11", "yield", "partial(0.5)", "tilted", "--alpha", "0.4"};
    EXPECT_EQ(run(args).out, run(args).out);
    EXPECT_EQ(run({"demo", "anomaly"}).out, run({"demo", "anomaly"}).out);
    EXPECT_EQ(run({"--long", "compare", "phi_plus", "phi_plus"}).out.substr(0, 2), "# ");
    EXPECT_EQ(run({"--eps-match", "0.1", "compare", "partial(0.785)", "phi_plus"}).out.substr(0, 10), "Equivalent");
    EXPECT_EQ(run({"--eps-match", "-1", "compare", "phi_plus", "phi_plus"}).code, kExitInput);
    EXPECT_EQ(run({}).code, kExitInput);
    EXPECT_EQ(run({"--help"}).code, kExitOk);
    EXPECT_EQ(run({"schmidt", "partial(abc)"}).code, kExitInput);
}
