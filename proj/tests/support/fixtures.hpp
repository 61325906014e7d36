// Copyright 2026 The logrev Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fixture_repo.hpp"
#include "logrev/pipeline.hpp"

namespace logrev::testing {

// Temperature example: Wombat.java over three commits, with Enclosure.java
// as the most frequently edited class so Wombat's methods land mid-range.
void build_wombat(FixtureRepo& repo);

// Sensor.calibrate is renamed to recalibrate in the third commit. The control
// history names it recalibrate throughout and makes the same line edits.
void build_sensor(FixtureRepo& repo, bool renamed);

// A run-time level check guarding a SEVERE log in a cold method.
void build_guarded(FixtureRepo& repo);
// Two WARNING logs, one in a catch block and one opening an if body.
void build_catch_branch(FixtureRepo& repo);
// An INFO log mentioning "not alive" in the hottest method.
void build_node_monitor(FixtureRepo& repo);
// A cold INFO log whose message contains an anti-lowering keyword.
void build_keyword(FixtureRepo& repo);
// A log whose level is held in a local variable.
void build_variable_level(FixtureRepo& repo);
// Scheduler.java copied to Backlog.java in the third commit.
void build_copy(FixtureRepo& repo);
// Java sources in the first commit; the second commit only touches a README.
void build_quiet_head(FixtureRepo& repo);

/// Shared companion class: tick() gets five edit events, drain() two.
/// `version` is 0..3.
std::string scheduler_java(int version, const std::string& class_name = "Scheduler");

struct NamedFixture {
  std::string name;
  std::function<void(FixtureRepo&)> build;
  std::function<void(RunConfig&)> configure;
};

/// Every fixture with the configuration its scenario uses.
const std::vector<NamedFixture>& all_fixtures();

/// Builds `fixture` into `dir` and returns a config pointing at it.
RunConfig prepare(const NamedFixture& fixture, const std::filesystem::path& dir);

}  // namespace logrev::testing
