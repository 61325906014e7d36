// Copyright 2026 The logrev Authors
// SPDX-License-Identifier: Apache-2.0

#include "fixtures.hpp"

#include <sstream>

namespace logrev::testing {

namespace {

const char* const kWombat0 = R"java(import java.io.IOException;
import java.nio.file.Files;
import java.util.Scanner;
import java.util.logging.Level;
import java.util.logging.Logger;

import static java.nio.file.StandardOpenOption.WRITE;

public class Wombat {
    private static final Logger logger = Logger.getLogger(Wombat.class.getName()); // Only logs >= FINE.
    private double temp; private double oldTemp;

    public void setTemp(double val) {
        this.oldTemp = temp; this.temp = val;
        logger.log(Level.FINER, "Temp set to: " + this.temp);
        logger.finer("Old temperature was: " + this.oldTemp);}

    public static void main(String[] args) throws IOException {
        Wombat w = new Wombat();
        Scanner scanner = new Scanner(System.in);

        System.out.println("Enter a temperature:");
        double input = scanner.nextDouble(); w.setTemp(input);

        try { // send to file.
            logger.fine("Writing to file.");
            Files.writeString("output.txt", w.toString(), WRITE);
        } catch (IOException e) { // Fatal error.
            logger.severe("Couldn't open file for writing.");
            throw e;}}}
)java";

std::string wombat(int version) {
  std::string text = kWombat0;
  auto replace = [&text](const std::string& from, const std::string& to) {
    const auto at = text.find(from);
    text.replace(at, from.size(), to);
  };
  if (version >= 1) {
    replace("        this.oldTemp = temp; this.temp = val;\n",
            "        if (val > 0) {\n        this.oldTemp = temp; this.temp = val;\n");
    replace("this.oldTemp);}\n",
            "this.oldTemp);}\n        else throw new IllegalArgumentException(\"Invalid: \" + val);\n    }\n");
    replace("        double input = scanner.nextDouble(); w.setTemp(input);\n",
            "        double input = scanner.nextDouble();\n"
            "        while (true) {\n"
            "          try {\n"
            "            w.setTemp(input);\n"
            "            break; // succeeded.\n"
            "          } catch (IllegalArgumentException e) {\n"
            "            // Not a fatal error. Log the exception and retry.\n"
            "            logger.log(Level.INFO, \"Invalid input: \" + input, e);\n"
            "            System.out.println(\"Invalid temp. Please retry.\");}}\n");
  }
  if (version >= 2) {
    replace("\"Invalid: \" + val);\n",
            "\"Invalid: \" + val);\n\n"
            "        if ((this.temp - this.oldTemp) / this.oldTemp > 0.05)\n"
            "            logger.warning(\"Temperature has risen above 5%\");\n");
  }
  return text;
}

std::string enclosure(int version) {
  std::ostringstream o;
  o << "import java.util.logging.Logger;\n\n"
       "public class Enclosure {\n"
       "    private static final Logger logger = Logger.getLogger(Enclosure.class.getName());\n"
       "    private double target;\n"
       "    private double heater;\n";
  if (version >= 2) o << "    private double gain = 1.5;\n    private double lastReading;\n";
  o << "\n    public void regulate(double reading) {\n";
  if (version >= 1) o << "        if (Double.isNaN(reading)) return;\n";
  o << (version >= 2 ? "        double delta = (target - reading) * gain;\n" : "        double delta = target - reading;\n");
  o << "        heater = Math.max(0, delta);\n";
  if (version >= 1) o << "        heater = Math.min(heater, 10.0);\n";
  o << "        logger.info(\"Heater output: \" + heater);\n";
  if (version >= 2) o << "        lastReading = reading;\n";
  o << "    }\n}\n";
  return o.str();
}

std::string sensor(int version, bool renamed) {
  const bool new_name = !renamed || version >= 2;
  std::ostringstream o;
  o << "import java.util.logging.Level;\n"
       "import java.util.logging.Logger;\n\n"
       "public class Sensor {\n"
       "    private static final Logger LOG = Logger.getLogger(\"sensor\");\n"
       "    private double offset;\n"
       "    private double scale = 1.0;\n\n";
  o << "    public " << (version >= 2 ? "final " : "") << "void " << (new_name ? "recalibrate" : "calibrate")
    << "(double reference) {\n";
  o << "        double measured = read();\n";
  o << (version >= 1 ? "        offset = (reference - measured) * scale;\n" : "        offset = reference - measured;\n");
  o << "        LOG.log(Level.FINE, \"Calibrated offset \" + offset);\n";
  if (version >= 3) o << "        LOG.finer(\"Scale \" + scale);\n";
  o << "    }\n\n"
       "    public double read() {\n"
       "        LOG.finest(\"Reading raw value\");\n";
  o << (version >= 3 ? "        return offset * 0.0;\n" : "        return 0.0;\n");
  o << "    }\n\n"
       "    public void reset() {\n"
       "        offset = 0;\n"
       "        LOG.info(\"Sensor reset\");\n"
       "    }\n}\n";
  return o.str();
}

const char* const kReporter = R"java(import java.util.logging.Level;
import java.util.logging.Logger;

final class Reporter {
    private static final Logger logger = Logger.getLogger(Reporter.class.getName());

    void report(Object ctxt, Throwable exception) {
        if (logger.isLoggable(Level.SEVERE))
            logger.log(Level.SEVERE, message(ctxt), exception);
    }

    private static String message(Object ctxt) {
        return "Exception thrown by subscriber " + ctxt;
    }
}
)java";

const char* const kUpstreamCause = R"java(import java.io.IOException;
import java.util.logging.Logger;

class UpstreamCause {
    private static final Logger LOGGER = Logger.getLogger(UpstreamCause.class.getName());

    Object resolve(Execution execution, Action action) {
        Object node = null;
        try {
            node = execution.getNode(action.getUpstreamNodeId());
        } catch (IOException e) {
            LOGGER.warning("Couldn't retrieve upstream node: " + e);}
        if (node == null) {
            LOGGER.warning("Couldn't retrieve upstream node (null)");}
        return node;
    }
}
)java";

std::string node_monitor(int version) {
  std::ostringstream o;
  o << "import java.util.Objects;\n"
       "import java.util.logging.Logger;\n\n"
       "class NodeMonitor {\n"
       "    private static final Logger LOG = Logger.getLogger(NodeMonitor.class.getName());\n";
  if (version >= 1) o << "    private HealthCheck lastCheck;\n    private int checks;\n";
  o << "\n    void check(HealthCheck check) {\n";
  if (version == 1) o << "        lastCheck = check;\n";
  if (version >= 2) o << "        lastCheck = Objects.requireNonNull(check);\n";
  o << "        if (!check.isAlive()) {\n"
       "            LOG.info(\"Node is not alive: \" + check.getMessage());\n"
       "            // Throw an exception to force another check sooner.\n"
       "            throw new UnsupportedOperationException(\"Node can't..\");}\n";
  if (version == 1) o << "        checks++;\n";
  if (version >= 2) o << "        checks += 1;\n";
  o << "    }\n}\n";
  return o.str();
}

const char* const kCache = R"java(import java.util.logging.Logger;

class Cache {
    private static final Logger logger = Logger.getLogger(Cache.class.getName());

    void refresh() {
        int evicted = evict();
        logger.info("Cache refresh failed for " + evicted + " entries, retrying");
    }

    void warm() {
        logger.fine("Warming cache");
    }

    private int evict() { return 0; }
}
)java";

const char* const kProbe = R"java(import java.util.logging.Level;
import java.util.logging.Logger;

class Probe {
    private static final Logger logger = Logger.getLogger(Probe.class.getName());
    private boolean verbose;

    void sample(double value) {
        Level lvl = verbose ? Level.FINE : Level.INFO;
        logger.log(lvl, "Sample " + value);
        logger.finer("Sampled");
    }
}
)java";

// Adds `extra` files in the first commit and walks Scheduler through
// versions 0..3.
void scheduler_history(FixtureRepo& repo, const std::vector<std::pair<std::string, std::string>>& extra) {
  for (const auto& [path, text] : extra) repo.write(path, text);
  repo.write("src/Scheduler.java", scheduler_java(0));
  repo.commit("Initial import");
  for (int v = 1; v <= 3; ++v) {
    repo.write("src/Scheduler.java", scheduler_java(v));
    repo.commit("Scheduler revision " + std::to_string(v));
  }
}

}  // namespace

std::string scheduler_java(int version, const std::string& class_name) {
  std::ostringstream o;
  o << "import java.util.logging.Logger;\n\n"
    << "public class " << class_name << " {\n"
    << "    private static final Logger log = Logger.getLogger(\"scheduler\");\n"
       "    private int pending;\n"
       "    private int drained;\n";
  if (version >= 2) o << "    private long lastTick;\n";
  if (version >= 3) o << "    private int limit = 100;\n";
  o << "\n    public void tick() {\n";
  o << (version >= 2 ? "        pending += 1;\n" : "        pending++;\n");
  if (version == 1 || version == 2) o << "        if (pending > 100) pending = 100;\n";
  if (version >= 3) o << "        if (pending > limit) pending = limit;\n";
  o << "        log.fine(\"Tick with \" + pending + \" pending\");\n";
  if (version >= 2) o << "        lastTick = System.nanoTime();\n";
  o << "    }\n\n"
       "    public void drain() {\n"
       "        drained += pending;\n";
  if (version >= 1) o << "        pending = 0;\n";
  o << "        log.finest(\"Drained \" + drained);\n"
       "    }\n}\n";
  return o.str();
}

void build_wombat(FixtureRepo& repo) {
  for (int v = 0; v <= 2; ++v) {
    repo.write("src/Enclosure.java", enclosure(v));
    repo.write("src/Wombat.java", wombat(v));
    repo.commit(v == 0 ? "Wombat with temperature logging"
                       : v == 1 ? "Reject invalid temperatures" : "Warn about drastic temperature changes");
  }
}

void build_sensor(FixtureRepo& repo, bool renamed) {
  for (int v = 0; v <= 3; ++v) {
    repo.write("src/Sensor.java", sensor(v, renamed));
    repo.commit("Sensor revision " + std::to_string(v));
  }
}

void build_guarded(FixtureRepo& repo) { scheduler_history(repo, {{"src/Reporter.java", kReporter}}); }

void build_catch_branch(FixtureRepo& repo) {
  scheduler_history(repo, {{"src/UpstreamCause.java", kUpstreamCause}});
}

void build_node_monitor(FixtureRepo& repo) {
  repo.write("src/Scheduler.java", scheduler_java(0));
  for (int v = 0; v <= 2; ++v) {
    repo.write("src/NodeMonitor.java", node_monitor(v));
    repo.commit("Node monitor revision " + std::to_string(v));
  }
}

void build_keyword(FixtureRepo& repo) { scheduler_history(repo, {{"src/Cache.java", kCache}}); }

void build_variable_level(FixtureRepo& repo) { scheduler_history(repo, {{"src/Probe.java", kProbe}}); }

void build_copy(FixtureRepo& repo) {
  repo.write("src/Scheduler.java", scheduler_java(0));
  repo.commit("Scheduler");
  repo.write("src/Scheduler.java", scheduler_java(1));
  repo.commit("Clamp pending work");
  repo.write("src/Backlog.java", scheduler_java(1, "Backlog"));
  repo.commit("Backlog starts as a copy of Scheduler");
  repo.write("src/Scheduler.java", scheduler_java(2));
  repo.commit("Track tick time");
}

void build_quiet_head(FixtureRepo& repo) {
  repo.write("src/Scheduler.java", scheduler_java(3));
  repo.commit("Scheduler");
  repo.write("README.md", "Scheduler sample.\n");
  repo.commit("Document");
}

const std::vector<NamedFixture>& all_fixtures() {
  static const std::vector<NamedFixture> fixtures = [] {
    auto none = [](RunConfig&) {};
    auto categories = [](RunConfig& c) { c.heuristics.categories_enabled = true; };
    std::vector<NamedFixture> f;
    f.push_back({"wombat", build_wombat, categories});
    f.push_back({"sensor_renamed", [](FixtureRepo& r) { build_sensor(r, true); }, none});
    f.push_back({"sensor_control", [](FixtureRepo& r) { build_sensor(r, false); }, none});
    f.push_back({"guarded", build_guarded, none});
    f.push_back({"catch_branch", build_catch_branch, none});
    f.push_back({"node_monitor", build_node_monitor, none});
    f.push_back({"keyword", build_keyword, categories});
    f.push_back({"variable_level", build_variable_level, none});
    f.push_back({"copy", build_copy, none});
    f.push_back({"quiet_head", build_quiet_head, [](RunConfig& c) { c.max_commits = 1; }});
    return f;
  }();
  return fixtures;
}

RunConfig prepare(const NamedFixture& fixture, const std::filesystem::path& dir) {
  FixtureRepo repo(dir);
  fixture.build(repo);
  RunConfig config;
  config.repo = dir.string();
  fixture.configure(config);
  return config;
}

}  // namespace logrev::testing
