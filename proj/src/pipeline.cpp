#include "ssi/pipeline.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>

#include <fmt/format.h>

namespace ssi {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct UsageError : Error {
  using Error::Error;
};

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + p.string() + "'");
  f << text;
}

void write_json(const fs::path& p, const Json& j) { write_file(p, j.dump(2) + "\n"); }

class Job {
 public:
  Job(const JobConfig& cfg) : cfg_(cfg), dir_(cfg.out) {}

  void run() {
    check_config();
    fs::create_directories(dir_);
    report_["inputs"] = inputs();
    if (!cfg_.resume.empty()) {
      resume();
    } else {
      implicit_stage();
      if (cfg_.stage >= Stage::PlaneTopology) plane_stage();
    }
    if (cfg_.stage >= Stage::SpaceTopology) space_stage();
    if (cfg_.stage >= Stage::Approximate) approx_stage();
    report_["status"] = "ok";
    if (cfg_.timing) report_["timing_seconds"] = timing_;
    write_json(dir_ / "report.json", report_);
  }

  void fail(const std::string& status, const std::string& message) {
    report_["status"] = status;
    report_["message"] = message;
    try {
      fs::create_directories(dir_);
      write_json(dir_ / "report.json", report_);
    } catch (...) {
    }
  }

 private:
  const JobConfig& cfg_;
  fs::path dir_;
  Json report_;
  Json timing_;
  RationalSurface s2_;
  TopologyGraph plane_;
  SpaceResult space_;
  Clock::time_point t0_;

  bool wants(const char* f) const { return cfg_.formats.count(f) > 0; }

  void start() { t0_ = Clock::now(); }
  void stop(const char* name) { timing_[name] = std::chrono::duration<double>(Clock::now() - t0_).count(); }

  void check_config() {
    if (!(cfg_.box.A < cfg_.box.B) || !(cfg_.box.C < cfg_.box.D)) throw UsageError("box must satisfy A < B and C < D");
    if (cfg_.epsilon <= 0) throw UsageError("epsilon must be positive");
    if (!cfg_.resume.empty() && cfg_.stage < Stage::SpaceTopology) {
      throw UsageError("--resume continues from the plane graph; choose a later stage");
    }
    if (cfg_.resume.empty() && (cfg_.s1.empty() || cfg_.s2.empty())) throw UsageError("--s1 and --s2 are required");
  }

  Json inputs() const {
    Json j;
    if (!cfg_.resume.empty()) {
      j["resume"] = cfg_.resume;
    } else {
      j["s1"] = cfg_.s1;
      j["s2"] = cfg_.s2;
      j["box"] = to_json(cfg_.box);
    }
    j["epsilon"] = to_string(cfg_.epsilon);
    return j;
  }

  SurfaceInput load(const std::string& path) {
    try {
      return load_surface(path);
    } catch (const CertificationError&) {
      throw;
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }

  void implicit_stage() {
    start();
    RationalSurface s1 = prepare_s1(load(cfg_.s1));
    s2_ = load(cfg_.s2).surface.with_params("v", "t");
    auto imp = implicitize(s1);
    stop("implicitize");
    write_file(dir_ / "F.txt", imp.F.to_string() + "\n");
    Json j;
    j["F"] = imp.F.to_string();
    j["total_degree"] = imp.F.total_degree();
    j["projection"] = {{"coordinate", std::string(1, "xyz"[imp.proj.coordinate])},
                       {"parameter", s1.params[static_cast<std::size_t>(imp.proj.parameter)]}};
    j["cylindrical"] = imp.cylindrical;
    j["content"] = imp.content.to_string();
    // Roots of the content l(s) are parameter values where the projection may add extraneous components.
    Json roots = Json::array();
    if (!imp.content.is_constant()) {
      const std::string& s = s1.params[static_cast<std::size_t>(imp.proj.parameter)];
      if (imp.content.vars().size() == 1 && imp.content.has_var(s)) {
        for (const auto& r : isolate_univariate(UPoly::from_poly(imp.content, s), Rational(-1000000), Rational(1000000))) {
          roots.push_back(to_json(r));
        }
      }
    }
    j["content_roots"] = roots;
    auto sing = singular_locus(imp.F, s1);
    Json sl;
    sl["status"] = sing.status;
    Json pts = Json::array();
    for (std::size_t i = 0; i < sing.points.size(); ++i) {
      const auto& q = sing.points[i];
      Json approx = Json::array({fmt::format("{:.12g}", q[0]), fmt::format("{:.12g}", q[1]), fmt::format("{:.12g}", q[2])});
      pts.push_back({{"approx", approx},
                     {"preimage_found", static_cast<bool>(sing.preimage_found[i])}});
    }
    sl["points"] = pts;
    j["singular_locus"] = sl;
    report_["implicit"] = j;
    F_ = imp.F;
  }

  Poly F_;

  void plane_stage() {
    start();
    auto pc = plane_curve(F_, s2_);
    write_file(dir_ / "G.txt", pc.G_full.to_string() + "\n");
    plane_ = build_graph(pc.G_full, cfg_.box);
    stop("plane_topology");
    write_plane();
  }

  void write_plane() {
    if (wants("json")) write_json(dir_ / "plane_graph.json", plane_graph_json(plane_, s2_));
    if (wants("svg")) write_file(dir_ / "plane_graph.svg", plane_graph_svg(plane_));
    Json j;
    j["G"] = plane_.G_full.to_string();
    j["vertices"] = plane_.vertices.size();
    j["edges"] = plane_.edges.size();
    std::map<std::string, Json> by_kind;
    for (const auto& v : plane_.vertices) {
      if (v.kind == VertexKind::Regular) continue;
      auto& list = by_kind[to_string(v.kind)];
      if (list.is_null()) list = Json::array();
      list.push_back(to_json(v.point));
    }
    for (auto& [k, list] : by_kind) j[k] = list;
    report_["plane"] = j;
  }

  void resume() {
    std::ifstream f(cfg_.resume);
    if (!f) throw UsageError("cannot open '" + cfg_.resume + "'");
    Json j;
    try {
      j = Json::parse(f);
    } catch (const Json::exception& e) {
      throw UsageError(std::string("plane graph file: ") + e.what());
    }
    start();
    PlaneArtifact a = load_plane_graph(j);
    stop("plane_topology");
    s2_ = a.s2;
    plane_ = std::move(a.graph);
    report_["inputs"]["box"] = to_json(plane_.box);
    write_file(dir_ / "G.txt", plane_.G_full.to_string() + "\n");
    write_plane();
  }

  void space_stage() {
    start();
    space_ = space_topology(plane_, s2_);
    stop("space_topology");
    Json sj = space_graph_json(space_, cfg_.digits);
    if (wants("json")) write_json(dir_ / "space_graph.json", sj);
    Json j;
    j["vertices"] = space_.graph.vertices.size();
    j["edges"] = space_.graph.edges.size();
    j["special_component"] = sj["special_component"];
    j["irregular"] = sj["irregular"];
    j["self_intersections"] = sj["self_intersections"];
    Json tagged = Json::array();
    for (const auto& v : sj["vertices"]) {
      if (!v["tags"].empty()) tagged.push_back({{"x", v["x"]}, {"tags", v["tags"]}});
    }
    j["tagged_vertices"] = tagged;
    auto s = shape(space_.graph);
    j["components"] = s.components;
    j["cycle_rank"] = s.cycle_rank;
    j["subdivisions"] = space_.graph.subdivisions;
    report_["space"] = j;
  }

  void approx_stage() {
    start();
    auto a = approximate(space_.refined, space_.graph, s2_, cfg_.epsilon);
    stop("approximate");
    if (wants("obj")) write_file(dir_ / "curve.obj", curve_obj(a, cfg_.digits));
    if (wants("json")) write_json(dir_ / "curve.json", curve_json(a, cfg_.digits));
    Json j;
    j["epsilon"] = to_string(cfg_.epsilon);
    j["polylines"] = a.polylines.size();
    j["segments"] = a.segments;
    j["max_hausdorff_estimate"] = fmt::format("{:.6e}", a.max_estimate);
    auto s = shape(a);
    j["components"] = s.components;
    j["cycle_rank"] = s.cycle_rank;
    j["subdivisions"] = a.subdivisions;
    j["crossing_splits"] = a.crossing_splits;
    j["max_samples"] = a.max_m;
    report_["approximation"] = j;
  }
};

}  // namespace

Stage parse_stage(const std::string& name) {
  if (name == "implicitize") return Stage::Implicitize;
  if (name == "plane-topology") return Stage::PlaneTopology;
  if (name == "space-topology") return Stage::SpaceTopology;
  if (name == "approximate" || name == "all") return Stage::Approximate;
  throw Error("unknown stage '" + name + "'");
}

RationalSurface prepare_s1(const SurfaceInput& in) {
  if (in.ruled && !is_projectable(in.surface)) return reparametrize_ruled(in.ruling).first;
  return in.surface;
}

int run(const JobConfig& cfg, std::ostream& err) {
  Job job(cfg);
  try {
    job.run();
    return exit_code::ok;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const NotProjectableError& e) {
    err << "error: " << e.what() << "\n";
    job.fail("not-projectable", e.what());
    return exit_code::not_projectable;
  } catch (const SharedComponentError& e) {
    err << "error: " << e.what() << "\n";
    job.fail("shared-component", e.what());
    return exit_code::shared_component;
  } catch (const std::exception& e) {
    err << "certification failure: " << e.what() << "\n";
    job.fail("certification-failure", e.what());
    return exit_code::certification;
  }
}

}  // namespace ssi
