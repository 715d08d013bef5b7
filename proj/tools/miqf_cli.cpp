#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "miqf/exterior.hpp"
#include "miqf/serialization.hpp"

namespace {

using miqf::io::json;

struct Config {
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::string format = "json";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw miqf::Error(miqf::ErrorCode::ParseError, "cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json load_json(const std::string& path) { return miqf::io::parse_text(read_file(path)); }

void emit(const json& j, const Config& cfg) {
  if (cfg.format == "json") {
    std::cout << j.dump() << "\n";
    return;
  }
  if (j.is_object() && j.contains("checks")) {
    for (const json& c : j.at("checks"))
      std::cout << (c.at("pass").get<bool>() ? "PASS " : "FAIL ") << c.at("name").get<std::string>() << "  "
                << c.at("detail").get<std::string>() << "\n";
    std::cout << "overall: " << (j.at("pass").get<bool>() ? "PASS" : "FAIL") << "\n";
    return;
  }
  std::cout << j.dump(2) << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Exact arithmetic for split Hermitian forms over imaginary quadratic fields,\n"
               "matrix-ball period domains, and their exterior powers."};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--tol", cfg.tol, "Tolerance for floating-point checks")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Default seed for sampling")->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  auto* siegel = app.add_subcommand("siegel", "Domain membership and sampling");
  siegel->require_subcommand(1);

  std::string check_file;
  auto* s_check = siegel->add_subcommand("check", "Strict membership test for a point file");
  s_check->add_option("file", check_file, "Point file {n, m, z}")->required();

  int sample_n = 1, sample_m = 1;
  std::uint64_t sample_seed = 0;
  bool sample_seed_set = false;
  auto* s_sample = siegel->add_subcommand("sample", "Deterministic interior point");
  s_sample->add_option("--n", sample_n, "Rows")->required();
  s_sample->add_option("--m", sample_m, "Columns")->required();
  s_sample->add_option("--seed", sample_seed, "Seed (falls back to the global --seed)")
      ->each([&](const std::string&) { sample_seed_set = true; });

  auto* variety = app.add_subcommand("variety", "Domain-side objects");
  variety->require_subcommand(1);
  long vb_delta = 1;
  int vb_n = 1, vb_r = 2;
  std::string vb_zfile;
  auto* v_build = variety->add_subcommand("build", "Build and validate a domain object");
  v_build->add_option("--delta", vb_delta, "Square-free field discriminant parameter")->required();
  v_build->add_option("--n", vb_n, "Positive block size")->required();
  v_build->add_option("--r", vb_r, "Total rank")->required();
  v_build->add_option("--z", vb_zfile, "Point file {n, m, z}")->required();

  auto* mapcmd = app.add_subcommand("map", "Cross the correspondence");
  mapcmd->require_subcommand(1);
  std::string b2e_file, e2b_file;
  auto* m_b2e = mapcmd->add_subcommand("b2e", "Domain object to (form, projection) triple");
  m_b2e->add_option("file", b2e_file, "Variety file {delta, n, r, z}")->required();
  auto* m_e2b = mapcmd->add_subcommand("e2b", "Triple to domain object");
  m_e2b->add_option("file", e2b_file, "Triple file {delta, n, r, gram, alpha}")->required();

  std::string verify_file;
  auto* verify = app.add_subcommand("verify", "Full validation report for a triple or variety file");
  verify->add_option("file", verify_file, "Triple or variety file")->required();

  auto* ext = app.add_subcommand("ext", "Exterior powers");
  ext->require_subcommand(1);
  int ext_k = 1;
  std::string ext_file;
  auto* e_power = ext->add_subcommand("power", "Exterior power of a triple");
  e_power->add_option("--k", ext_k, "Exterior order")->required();
  e_power->add_option("file", ext_file, "Triple file {delta, n, r, gram, alpha}")->required();

  auto* gu = app.add_subcommand("gu", "Similitude group action");
  gu->require_subcommand(1);
  std::string gu_gfile, gu_zfile;
  auto* g_act = gu->add_subcommand("act", "Apply a validated similitude to a point");
  g_act->add_option("gamma", gu_gfile, "Similitude file {delta, n, m, gamma}")->required();
  g_act->add_option("point", gu_zfile, "Point file {n, m, z}")->required();

  CLI11_PARSE(app, argc, argv);

  if (*s_check) {
    miqf::SiegelPoint p = miqf::io::siegel_point_from_json(load_json(check_file));
    miqf::MembershipResult r = miqf::siegel_contains(p.z, cfg.tol);
    emit(json{{"m", p.m()}, {"member", r.member}, {"min_pivot", r.min_pivot}, {"n", p.n()}}, cfg);
    return r.member ? 0 : 1;
  }

  if (*s_sample) {
    std::uint64_t seed = sample_seed_set ? sample_seed : cfg.seed;
    miqf::SiegelPoint p = miqf::siegel_sample(sample_n, sample_m, seed);
    emit(miqf::io::siegel_point_to_json(p), cfg);
    return 0;
  }

  if (*v_build) {
    miqf::SiegelPoint p = miqf::io::siegel_point_from_json(load_json(vb_zfile));
    if (p.n() != vb_n || p.m() != vb_r - vb_n)
      throw miqf::Error(miqf::ErrorCode::ParseError,
                        "field 'z': point file is " + std::to_string(p.n()) + " x " + std::to_string(p.m()) +
                            " but --n/--r declare " + std::to_string(vb_n) + " x " +
                            std::to_string(vb_r - vb_n));
    miqf::Variety v = miqf::variety_build(vb_delta, vb_n, vb_r, p.z, cfg.tol);
    emit(miqf::io::variety_file_to_json(v), cfg);
    return 0;
  }

  if (*m_b2e) {
    miqf::io::VarietyFile f = miqf::io::variety_file_from_json(load_json(b2e_file));
    miqf::Variety v = miqf::variety_build(f.delta, f.n, f.r, f.z, cfg.tol);
    emit(miqf::io::triple_to_json(miqf::variety_to_triple(v)), cfg);
    return 0;
  }

  if (*m_e2b) {
    miqf::Triple t = miqf::io::triple_from_json(load_json(e2b_file));
    miqf::Variety v = miqf::triple_to_variety(t, cfg.tol);
    emit(miqf::io::variety_file_to_json(v), cfg);
    return 0;
  }

  if (*verify) {
    json j = load_json(verify_file);
    miqf::ValidationReport rep;
    if (j.is_object() && j.contains("gram")) {
      rep = miqf::verify_triple_report(miqf::io::triple_from_json(j), cfg.tol);
    } else if (j.is_object() && j.contains("z")) {
      miqf::io::VarietyFile f = miqf::io::variety_file_from_json(j);
      rep = miqf::verify_variety_report(f.delta, f.n, f.r, f.z, cfg.tol);
    } else {
      throw miqf::Error(miqf::ErrorCode::ParseError,
                        "field 'gram'/'z': file is neither a triple nor a variety");
    }
    emit(miqf::io::report_to_json(rep), cfg);
    return rep.all_pass() ? 0 : 1;
  }

  if (*e_power) {
    miqf::Triple t = miqf::io::triple_from_json(load_json(ext_file));
    miqf::Triple nt = miqf::normalize_triple(t, cfg.tol);
    miqf::Triple out = miqf::exterior_power(nt, ext_k, cfg.tol);
    miqf::ValidationReport rep = miqf::validate_triple(out, cfg.tol);
    json result{{"degenerate", out.n == out.r},
                {"report", miqf::io::report_to_json(rep)},
                {"triple", miqf::io::triple_to_json(out)}};
    if (out.n < out.r) {
      miqf::Triple norm_out = miqf::normalize_triple(out, cfg.tol);
      miqf::CMatrix zk = miqf::block(norm_out.alpha, 0, out.n, out.n, out.r - out.n);
      result["point"] = miqf::io::siegel_point_to_json(miqf::SiegelPoint{std::move(zk)});
    }
    emit(result, cfg);
    return rep.all_pass() ? 0 : 1;
  }

  if (*g_act) {
    miqf::io::GuFile gf = miqf::io::gu_file_from_json(load_json(gu_gfile));
    miqf::SiegelPoint p = miqf::io::siegel_point_from_json(load_json(gu_zfile));
    miqf::GUElement g = miqf::gu_validate(gf.gamma, gf.n, gf.m);
    miqf::SiegelPoint out = miqf::gu_act(g, p, cfg.tol);
    emit(miqf::io::siegel_point_to_json(out), cfg);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const miqf::Error& e) {
    if (e.is_shape_error()) {
      std::cerr << e.what() << "\n";
      return 2;
    }
    std::cout << json{{"error", {{"code", miqf::error_code_name(e.code())}, {"message", e.what()}}}}.dump()
              << "\n";
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
