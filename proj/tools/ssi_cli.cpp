#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ssi/pipeline.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Topology-preserving polyline approximation of surface/surface intersection curves"};
  ssi::JobConfig cfg;
  std::vector<std::string> box;
  std::string epsilon = "1/20";
  std::string stage = "all";
  std::string formats = "json,svg,obj";
  app.add_option("--s1", cfg.s1, "first surface (projectable or ruled), JSON file");
  app.add_option("--s2", cfg.s2, "second surface, JSON file");
  app.add_option("--box", box, "parameter box A B C D of the second surface")->expected(4);
  app.add_option("--epsilon", epsilon, "approximation tolerance (rational or decimal)");
  app.add_option("--stage", stage, "implicitize | plane-topology | space-topology | approximate | all");
  app.add_option("--out", cfg.out, "output directory");
  app.add_option("--format", formats, "comma-separated subset of json,svg,obj");
  app.add_option("--resume", cfg.resume, "continue from a plane_graph.json");
  app.add_option("--digits", cfg.digits, "significant digits of decimal output")->check(CLI::Range(1, 40));
  app.add_flag("--timing", cfg.timing, "record stage timings in report.json");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ssi::exit_code::ok : ssi::exit_code::usage;
  }
  try {
    cfg.stage = ssi::parse_stage(stage);
    cfg.epsilon = ssi::parse_rational(epsilon);
    if (!box.empty()) {
      cfg.box = {ssi::parse_rational(box[0]), ssi::parse_rational(box[1]), ssi::parse_rational(box[2]),
                 ssi::parse_rational(box[3])};
    } else if (cfg.resume.empty()) {
      throw ssi::Error("--box is required");
    }
    cfg.formats.clear();
    std::stringstream ss(formats);
    for (std::string f; std::getline(ss, f, ',');) {
      if (f != "json" && f != "svg" && f != "obj") throw ssi::Error("unknown format '" + f + "'");
      cfg.formats.insert(f);
    }
  } catch (const ssi::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ssi::exit_code::usage;
  }
  return ssi::run(cfg, std::cerr);
}
