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

#include <nearfield/report.hpp>

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace nearfield;

namespace
{
    std::string golden(const std::string &name)
    {
        std::ifstream in(std::string(NEARFIELD_GOLDEN_DIR) + "/" + name, std::ios::binary);
        EXPECT_TRUE(in.good()) << name;
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    Scenario small_scenario()
    {
        std::ifstream in(std::string(NEARFIELD_GOLDEN_DIR) + "/small.cfg");
        return read_config(in);
    }

    SweepSpec default_z_sweep()
    {
        SweepSpec sw;
        sw.count = 5;
        sw.start = 0.05;
        sw.stop = 0.2;
        return sw;
    }
}

TEST(GoldenFiles, BeamSweepCsv)
{
    std::ostringstream out;
    write_csv(out, beam_sweep(small_scenario(), default_z_sweep()));
    EXPECT_EQ(out.str(), golden("beam_sweep_z.csv"));
}

TEST(GoldenFiles, BeamSweepAngleJson)
{
    SweepSpec sw;
    sw.axis = SweepAxis::angle_at_radius;
    sw.start = -20;
    sw.stop = 20;
    sw.count = 5;
    sw.plane = SweepPlane::xz;
    EXPECT_EQ(to_json(beam_sweep(small_scenario(), sw)).dump(2) + "\n", golden("beam_sweep_angle.json"));
}

TEST(GoldenFiles, ScheduleJson)
{
    auto sc = small_scenario();
    sc.model = Model::near;
    EXPECT_EQ(to_json(run_schedule(sc, 8, 0.02, 0.5, 3.0, 4)).dump(2) + "\n", golden("schedule.json"));
}

TEST(GoldenFiles, FraunhoferCsv)
{
    std::ostringstream out;
    write_csv(out, run_fraunhofer(small_scenario()));
    EXPECT_EQ(out.str(), golden("fraunhofer.csv"));
}

TEST(BeamSweep, RowsCarryBothModelsAndFocusNormalization)
{
    Scenario sc;
    sc.nx = 6;
    sc.ny = 30;
    SweepSpec sw;
    sw.focus = reference_position();
    sw.start = 0.1; // first point is the reference receiver
    sw.stop = 0.3;
    sw.count = 3;
    const auto res = beam_sweep(sc, sw);
    ASSERT_EQ(res.rows.size(), 3u);
    EXPECT_EQ(res.rows[0].near_db.db, 0.0);
    EXPECT_EQ(res.rows[0].model_db.db, res.rows[0].near_db.db);
    for (const auto &r : res.rows)
        EXPECT_NEAR(r.gap_db, std::abs(r.near_db.db - r.far_db.db), 1e-15);
    // near-field focusing: the focus is the brightest point of the sweep
    EXPECT_GT(res.rows[0].near_db.db, res.rows[1].near_db.db);
}

TEST(BeamSweep, ValidatesSpec)
{
    SweepSpec sw;
    sw.count = 1;
    EXPECT_THROW(beam_sweep(Scenario{}, sw), config_error);
    sw.count = 3;
    sw.start = 0.3;
    sw.stop = 0.2;
    EXPECT_THROW(beam_sweep(Scenario{}, sw), config_error);
}

TEST(Report, JsonEmbedsResolvedScenario)
{
    Scenario sc;
    sc.nx = 2;
    sc.ny = 2;
    const auto j = to_json(run_fraunhofer(sc, {0.5}, 5));
    EXPECT_EQ(j["schema"], fraunhofer_schema);
    EXPECT_EQ(j["scenario"]["nx"], 2);
    EXPECT_EQ(j["scenario"]["model"], "near");
    EXPECT_EQ(j["scenario"]["quadrature_order"], 8);
    EXPECT_EQ(j["gaps"].size(), 1u);
}

TEST(Report, ScheduleCsvTablesAreConsistent)
{
    Scenario sc;
    sc.nx = 4;
    sc.ny = 10;
    const auto rep = run_schedule(sc, 5, 0.05, 0.6, 3.0, 3);
    std::ostringstream main, sir_csv, prof;
    write_csv(main, rep);
    write_sir_csv(sir_csv, rep);
    write_profiles_csv(prof, rep);

    auto data_lines = [](const std::string &s)
    {
        std::istringstream in(s);
        std::string line;
        int n = 0;
        while (std::getline(in, line))
            if (!line.empty() && line[0] != '#')
                ++n;
        return n;
    };
    EXPECT_EQ(data_lines(main.str()), 1 + static_cast<int>(rep.result.selected.size()));
    EXPECT_EQ(data_lines(sir_csv.str()), 1 + 5);
    EXPECT_EQ(data_lines(prof.str()), 1 + 3 * static_cast<int>(rep.result.selected.size()));
    // closest selected user is the 0 dB anchor of its own profile
    EXPECT_EQ(rep.profiles.front().power_db.front().db, 0.0);
}

TEST(Report, DeterministicOutput)
{
    auto render = []
    {
        std::ostringstream out;
        write_csv(out, run_fraunhofer(small_scenario()));
        out << to_json(run_schedule(small_scenario(), 6, 0.05, 0.5, 2.0, 3)).dump();
        return out.str();
    };
    EXPECT_EQ(render(), render());
}
