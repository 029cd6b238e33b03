// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Drives the nfsim executable end to end: exit codes, flag precedence, output files.

#include <json.hpp>

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace
{
    const std::string golden_dir = NEARFIELD_GOLDEN_DIR;

    int run(const std::string &args)
    {
        const std::string cmd = std::string(NFSIM_PATH) + " " + args + " >/dev/null 2>&1";
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }

    std::string slurp(const fs::path &p)
    {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    class CliTest : public ::testing::Test
    {
    protected:
        void SetUp() override
        {
            dir = fs::temp_directory_path() /
                  ("nfsim_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
            fs::remove_all(dir);
            fs::create_directories(dir);
        }
        void TearDown() override { fs::remove_all(dir); }
        fs::path dir;
    };
}

TEST_F(CliTest, BeamSweepMatchesGoldenFile)
{
    const auto out = dir / "sweep.csv";
    ASSERT_EQ(run("beam-sweep --config " + golden_dir + "/small.cfg --count 5 --out " + out.string()), 0);
    EXPECT_EQ(slurp(out), slurp(golden_dir + "/beam_sweep_z.csv"));
}

TEST_F(CliTest, RepeatedRunsAreByteIdentical)
{
    const auto a = dir / "a.json", b = dir / "b.json";
    const std::string args = "schedule --config " + golden_dir + "/small.cfg --model near --k 8 --d-min 0.02 "
                             "--d-max 0.5 --gamma-db 3 --profile-points 4 --format json --out ";
    ASSERT_EQ(run(args + a.string()), 0);
    ASSERT_EQ(run(args + b.string()), 0);
    EXPECT_EQ(slurp(a), slurp(b));
    EXPECT_EQ(slurp(a), slurp(golden_dir + "/schedule.json"));
}

TEST_F(CliTest, FlagsOverrideConfigFile)
{
    const auto out = dir / "fr.json";
    ASSERT_EQ(run("fraunhofer --config " + golden_dir + "/small.cfg --nx 7 --model far --fractions 0.5 --points 5 "
                  "--format json --out " + out.string()),
              0);
    const auto j = nlohmann::json::parse(slurp(out));
    EXPECT_EQ(j["scenario"]["nx"], 7);
    EXPECT_EQ(j["scenario"]["ny"], 6);
    EXPECT_EQ(j["scenario"]["model"], "far");
    EXPECT_EQ(j["gaps"][0]["fraction"], 0.5);
}

TEST_F(CliTest, ScheduleCsvWritesCompanionTables)
{
    const auto out = dir / "sched.csv";
    ASSERT_EQ(run("schedule --nx 4 --ny 10 --k 5 --d-min 0.05 --d-max 0.6 --gamma-db 3 --profile-points 3 --out " +
                  out.string()),
              0);
    EXPECT_TRUE(fs::exists(dir / "sched.sir_db.csv"));
    EXPECT_TRUE(fs::exists(dir / "sched.profiles.csv"));
    EXPECT_NE(slurp(out).find("rank,index,x_m,y_m,z_m,distance_m,min_sir_db_to_selected"), std::string::npos);
}

TEST_F(CliTest, ConfigErrorsExitWithTwo)
{
    const auto cfg = dir / "bad.cfg";
    std::ofstream(cfg) << "nx = 4\nbogus = 1\n";
    EXPECT_EQ(run("fraunhofer --config " + cfg.string()), 2);
    EXPECT_EQ(run("fraunhofer --config " + (dir / "missing.cfg").string()), 2);
    EXPECT_EQ(run("beam-sweep --element-side-over-lambda 0.7"), 2);
    EXPECT_EQ(run("beam-sweep --format xml"), 2);
    EXPECT_EQ(run("beam-sweep --count 1"), 2);
    EXPECT_EQ(run("schedule --k 0"), 2);
    EXPECT_EQ(run("no-such-command"), 2);
    EXPECT_EQ(run(""), 2);
}

TEST_F(CliTest, SingularGeometryExitsWithThree)
{
    // focus on the single element's surface
    EXPECT_EQ(run("beam-sweep --nx 1 --ny 1 --axis angle --focus 0,0,0 --radius 0.1 --count 3"), 3);
    // focus on the Y-axis polarization null: null channel
    EXPECT_EQ(run("beam-sweep --nx 1 --ny 1 --focus 0,1,0 --start 0.1 --stop 0.2 --count 3"), 3);
    // focus inside the patch of element 1 of a 2 x 1 array
    EXPECT_EQ(run("beam-sweep --nx 2 --ny 1 --focus 0.0025,0.001,0 --start 0.1 --stop 0.2 --count 3"), 3);
}

TEST_F(CliTest, HelpExitsWithZero)
{
    EXPECT_EQ(run("--help"), 0);
    EXPECT_EQ(run("schedule --help"), 0);
}
