// igt — command-line driver for the restricted integral-geometry transforms.
//
// Subcommands: forward-euclidean, invert-euclidean, forward-funk,
// invert-funk, forward-hyperbolic, check-range, check-identity,
// scan-divergence. Each takes --config <json>, writes RGRD/CSV outputs plus
// a JSON run manifest under --out, and reports errors as structured JSON on
// stderr. Exit codes: 0 ok, 2 precondition/config error, 3 numerical check
// failed, 4 I/O error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include "igt/errors.hpp"
#include "igt/euclid/transform.hpp"
#include "igt/funk/transform.hpp"
#include "igt/hyper/transform.hpp"
#include "igt/io/rgrd.hpp"
#include "igt/parallel.hpp"
#include "igt/range/range.hpp"
#include "igt/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CommonOpts {
  std::string configPath;
  std::string outDir = ".";
  int threads = igt::hardware_threads();
  std::string logLevel = "info";
};

int logRank(const std::string& level) {
  if (level == "error") return 0;
  if (level == "warn") return 1;
  if (level == "info") return 2;
  return 3;
}

void logMsg(const CommonOpts& common, const std::string& level, const std::string& msg) {
  if (logRank(level) <= logRank(common.logLevel))
    std::cerr << "[" << level << "] " << msg << "\n";
}

void check_keys(const json& j, const std::vector<std::string>& required,
                const std::vector<std::string>& optional, const std::string& where) {
  if (!j.is_object()) throw igt::precondition_error(where + ": expected a JSON object");
  for (const auto& k : required)
    if (!j.contains(k))
      throw igt::precondition_error(where + ": missing required key '" + k + "'");
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (const auto& r : required) known |= (k == r);
    for (const auto& o : optional) known |= (k == o);
    if (!known) throw igt::precondition_error(where + ": unknown key '" + k + "'");
  }
}

json load_config(const CommonOpts& common) {
  std::ifstream in(common.configPath);
  if (!in) throw igt::io_error("cannot open config " + common.configPath);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw igt::precondition_error(std::string("config parse error: ") + e.what());
  }
  return j;
}

// Run manifest: parameters, library version, wall time, content hashes of
// every produced file.
struct Manifest {
  json doc;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  fs::path outDir;

  Manifest(const std::string& command, const CommonOpts& common, const json& config) {
    outDir = fs::path(common.outDir);
    fs::create_directories(outDir);
    doc["command"] = command;
    doc["config_path"] = common.configPath;
    doc["config_hash"] = igt::io::file_hash_hex(common.configPath);
    doc["parameters"] = config;
    doc["library_version"] = igt::version;
    doc["threads"] = common.threads;
    doc["outputs"] = json::array();
  }

  void add_output(const fs::path& p) {
    doc["outputs"].push_back({{"path", p.filename().string()},
                              {"bytes", static_cast<std::uint64_t>(fs::file_size(p))},
                              {"fnv1a64", igt::io::file_hash_hex(p)}});
  }

  void finish() {
    const auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
    doc["wall_time_s"] = dt.count();
    std::ofstream out(outDir / "manifest.json");
    if (!out) throw igt::io_error("cannot write manifest.json");
    out << doc.dump(2) << "\n";
  }
};

void write_csv(const fs::path& path, const std::string& header,
               const std::vector<std::string>& rows) {
  std::ofstream out(path);
  if (!out) throw igt::io_error("cannot write " + path.string());
  out << header << "\n";
  for (const auto& r : rows) out << r << "\n";
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// ---- field parsers ---------------------------------------------------------

igt::euclid::ScalarFieldRn parse_euclid_field(const json& j, int n, int k) {
  check_keys(j, {"kind"}, {"center", "width", "p", "delta"}, "field");
  const std::string kind = j.at("kind");
  if (kind == "gaussian") {
    Eigen::VectorXd center = Eigen::VectorXd::Zero(n);
    if (j.contains("center")) {
      const auto c = j.at("center").get<std::vector<double>>();
      if (static_cast<int>(c.size()) != n)
        throw igt::precondition_error("field.center must have n entries");
      center = Eigen::Map<const Eigen::VectorXd>(c.data(), n);
    }
    return igt::euclid::ScalarFieldRn::gaussian(n, k, center, j.value("width", 1.0));
  }
  if (kind == "counterexample-f0")
    return igt::euclid::ScalarFieldRn::counterexample_f0(n, k, j.at("p").get<double>(),
                                                         j.at("delta").get<double>());
  throw igt::precondition_error("field.kind must be 'gaussian' or 'counterexample-f0'");
}

igt::funk::SphereField parse_funk_field(const json& j, int n, int k) {
  check_keys(j, {"kind"}, {"value", "degree", "axis"}, "field");
  const std::string kind = j.at("kind");
  if (kind == "constant") return igt::funk::SphereField::constant(n, j.value("value", 1.0));
  if (kind == "zonal-legendre") {
    const auto a = j.at("axis").get<std::vector<double>>();
    if (static_cast<int>(a.size()) != n + 1)
      throw igt::precondition_error("field.axis must have n+1 entries");
    Eigen::VectorXd axis = Eigen::Map<const Eigen::VectorXd>(a.data(), n + 1);
    axis.normalize();
    return igt::funk::SphereField::zonal_legendre(n, j.at("degree").get<int>(), axis);
  }
  if (kind == "counterexample-ftilde") return igt::funk::SphereField::counterexample_ftilde(n, k);
  throw igt::precondition_error(
      "field.kind must be 'constant', 'zonal-legendre' or 'counterexample-ftilde'");
}

igt::hyper::HField parse_hyper_field(const json& j) {
  check_keys(j, {"kind"}, {"a"}, "field");
  const std::string kind = j.at("kind");
  if (kind == "exp-decay") return igt::hyper::HField::exp_decay(j.value("a", 1.0));
  if (kind == "power-decay") return igt::hyper::HField::power_decay(j.value("a", 2.0));
  throw igt::precondition_error("field.kind must be 'exp-decay' or 'power-decay'");
}

igt::euclid::SinogramGrids grids_from_config(const json& cfg, int n, int k) {
  return igt::euclid::SinogramGrids::make(
      n, k, cfg.value("theta_order", 64), cfg.value("s_half", 8.0), cfg.value("s_count", 128),
      cfg.value("xpp_half", 4.0), cfg.value("xpp_count", 33));
}

// ---- commands --------------------------------------------------------------

int cmd_forward_euclidean(const CommonOpts& common) {
  const json cfg = load_config(common);
  check_keys(cfg, {"n", "k", "field", "output"},
             {"theta_order", "s_half", "s_count", "xpp_half", "xpp_count", "plane_order"},
             "forward-euclidean");
  const int n = cfg.at("n"), k = cfg.at("k");
  const auto field = parse_euclid_field(cfg.at("field"), n, k);
  auto grids = grids_from_config(cfg, n, k);

  igt::euclid::ForwardOptions fo;
  fo.planeOrder = cfg.value("plane_order", 64);
  fo.threads = common.threads;
  Manifest man("forward-euclidean", common, cfg);
  const auto sino = igt::euclid::forward_restricted(field, grids, fo);
  if (!sino.all_finite()) throw igt::numerical_error("sinogram contains non-finite entries");

  const fs::path rgrd = man.outDir / cfg.at("output").get<std::string>();
  igt::io::write_grid(rgrd, sino.rgrd_dims(),
                      std::span<const double>(sino.values.data(),
                                              static_cast<std::size_t>(sino.values.size())));
  man.add_output(rgrd);

  json sidecar{{"kind", "euclid-sinogram"},
               {"n", n},
               {"k", k},
               {"theta_order", cfg.value("theta_order", 64)},
               {"s_half", cfg.value("s_half", 8.0)},
               {"s_count", cfg.value("s_count", 128)},
               {"xpp_half", cfg.value("xpp_half", 4.0)},
               {"xpp_count", cfg.value("xpp_count", 33)}};
  const fs::path side = rgrd.string() + ".json";
  std::ofstream(side) << sidecar.dump(2) << "\n";
  man.add_output(side);
  man.finish();
  logMsg(common, "info", "forward-euclidean: wrote " + rgrd.string());
  return 0;
}

std::pair<igt::euclid::RestrictedSinogram, json> load_euclid_sinogram(const fs::path& rgrdPath) {
  const fs::path side = rgrdPath.string() + ".json";
  std::ifstream in(side);
  if (!in) throw igt::io_error("cannot open sidecar " + side.string());
  json sc;
  in >> sc;
  check_keys(sc, {"kind", "n", "k", "theta_order", "s_half", "s_count", "xpp_half", "xpp_count"},
             {}, "sidecar");
  if (sc.at("kind") != "euclid-sinogram")
    throw igt::precondition_error("sidecar kind is not euclid-sinogram");
  auto grids = igt::euclid::SinogramGrids::make(sc.at("n"), sc.at("k"), sc.at("theta_order"),
                                                sc.at("s_half"), sc.at("s_count"),
                                                sc.at("xpp_half"), sc.at("xpp_count"));
  auto sino = igt::euclid::RestrictedSinogram::zeros(sc.at("n"), std::move(grids));
  const auto data = igt::io::read_grid(rgrdPath);
  if (data.dims != sino.rgrd_dims())
    throw igt::io_error("RGRD dims do not match the sidecar grids");
  sino.values = Eigen::Map<const Eigen::ArrayXd>(data.data.data(),
                                                 static_cast<Eigen::Index>(data.data.size()));
  return {std::move(sino), sc};
}

int cmd_invert_euclidean(const CommonOpts& common) {
  const json cfg = load_config(common);
  check_keys(cfg, {"input", "output"},
             {"target_half", "target_count", "freq_count", "dual_probes", "epsilon", "t_max"},
             "invert-euclidean");
  Manifest man("invert-euclidean", common, cfg);
  auto [sino, sidecar] = load_euclid_sinogram(fs::path(common.configPath).parent_path() /
                                              cfg.at("input").get<std::string>());

  const auto target = igt::euclid::BoxGrid::cube(2, cfg.value("target_half", 4.0),
                                                 cfg.value("target_count", 33));
  igt::euclid::InvertFourierOptions io;
  io.freqCount = cfg.value("freq_count", 257);
  io.threads = common.threads;
  const auto f = igt::euclid::invert_fourier_slice(sino, target, io);

  const fs::path rgrd = man.outDir / cfg.at("output").get<std::string>();
  igt::io::write_grid(rgrd, f.box().dim_sizes(),
                      std::span<const double>(f.samples().data(),
                                              static_cast<std::size_t>(f.samples().size())));
  man.add_output(rgrd);

  if (cfg.contains("dual_probes")) {
    std::vector<std::string> rows;
    const double tMaxCfg = cfg.value("t_max", 0.0);
    for (const auto& pj : cfg.at("dual_probes")) {
      const auto p = pj.get<std::vector<double>>();
      if (static_cast<int>(p.size()) != sino.n)
        throw igt::precondition_error("dual probe must have n coordinates");
      const Eigen::Vector2d xp(p[0], p[1]);
      int best = 0;
      double bestDist = 1e300;
      for (int ix = 0; ix < sino.nxpp(); ++ix) {
        const Eigen::VectorXd node = sino.grids.xpp_point(ix);
        double d = 0.0;
        for (int a = 0; a < node.size(); ++a) d += std::pow(node[a] - p[2 + a], 2);
        if (d < bestDist) {
          bestDist = d;
          best = ix;
        }
      }
      if (bestDist > 1e-18)
        throw igt::precondition_error("dual probe x'' must coincide with a grid node");
      const double tMax =
          tMaxCfg > 0.0 ? tMaxCfg : sino.grids.s.nodes[sino.ns() - 1] + xp.norm() + 1.0;
      const double v = igt::euclid::invert_dual_formula_k1(sino, xp, best,
                                                           cfg.value("epsilon", 0.1), tMax);
      std::string row;
      for (double c : p) row += fmt(c) + ",";
      row += fmt(v);
      rows.push_back(row);
    }
    const fs::path csv = man.outDir / "dual_probes.csv";
    write_csv(csv, "x...,value", rows);
    man.add_output(csv);
  }
  man.finish();
  logMsg(common, "info", "invert-euclidean: wrote " + rgrd.string());
  return 0;
}

int cmd_forward_funk(const CommonOpts& common) {
  const json cfg = load_config(common);
  check_keys(cfg, {"n", "k", "field", "output"}, {"v_order", "w_order", "circle_order"},
             "forward-funk");
  const int n = cfg.at("n"), k = cfg.at("k");
  const auto field = parse_funk_field(cfg.at("field"), n, k);
  const int vOrder = cfg.value("v_order", 16), wOrder = cfg.value("w_order", 16);
  const int circleOrder = cfg.value("circle_order", 64);

  Manifest man("forward-funk", common, cfg);
  const auto vq = igt::numkit::make_sphere_quadrature(n - k - 1, vOrder, true);
  const auto wq = igt::numkit::make_sphere_quadrature(k + 1, wOrder, true);
  Eigen::ArrayXd values(static_cast<Eigen::Index>(vq.size()) * wq.size());
  igt::parallel_for(static_cast<std::size_t>(vq.size()), common.threads, [&](std::size_t iv) {
    const Eigen::VectorXd v = vq.point(static_cast<int>(iv));
    const auto rot = igt::make_block_rotation(v, k);
    for (int iw = 0; iw < wq.size(); ++iw) {
      Eigen::VectorXd wFull = Eigen::VectorXd::Zero(n + 1);
      wFull.tail(k + 2) = wq.point(iw);
      igt::funk::SphericalComplexElement el{v, rot.apply(wFull)};
      values[static_cast<Eigen::Index>(iv) * wq.size() + iw] =
          igt::funk::funk_forward_restricted(field, k, el, circleOrder).value;
    }
  });

  const fs::path rgrd = man.outDir / cfg.at("output").get<std::string>();
  const std::vector<std::size_t> dims{static_cast<std::size_t>(vq.size()),
                                      static_cast<std::size_t>(wq.size())};
  igt::io::write_grid(rgrd, dims,
                      std::span<const double>(values.data(),
                                              static_cast<std::size_t>(values.size())));
  man.add_output(rgrd);
  json sidecar{{"kind", "funk-sinogram"}, {"n", n},           {"k", k},
               {"v_order", vOrder},       {"w_order", wOrder}, {"circle_order", circleOrder}};
  const fs::path side = rgrd.string() + ".json";
  std::ofstream(side) << sidecar.dump(2) << "\n";
  man.add_output(side);
  man.finish();
  logMsg(common, "info", "forward-funk: wrote " + rgrd.string());
  return 0;
}

int cmd_invert_funk(const CommonOpts& common) {
  const json cfg = load_config(common);
  check_keys(cfg, {"n", "k", "field", "points", "output"},
             {"max_degree", "quad_order", "circle_order"}, "invert-funk");
  const int n = cfg.at("n"), k = cfg.at("k");
  const auto field = parse_funk_field(cfg.at("field"), n, k);
  const int circleOrder = cfg.value("circle_order", 64);

  igt::funk::ReconstructOptions ro;
  ro.maxDegree = cfg.value("max_degree", 8);
  ro.quadOrder = cfg.value("quad_order", 64);

  igt::funk::ComplexImage phi = [&](const Eigen::VectorXd& v, const Eigen::VectorXd& w) {
    return igt::funk::funk_forward_restricted(field, k, {v, w}, circleOrder).value;
  };

  Manifest man("invert-funk", common, cfg);
  std::vector<std::string> rows;
  for (const auto& pj : cfg.at("points")) {
    const auto p = pj.get<std::vector<double>>();
    if (static_cast<int>(p.size()) != n + 1)
      throw igt::precondition_error("points entries must have n+1 coordinates");
    Eigen::VectorXd theta = Eigen::Map<const Eigen::VectorXd>(p.data(), n + 1);
    theta.normalize();
    const double v = igt::funk::reconstruct_point(phi, n, k, theta, ro);
    std::string row;
    for (int c = 0; c < n + 1; ++c) row += fmt(theta[c]) + ",";
    row += fmt(v) + "," + fmt(field.eval(theta));
    rows.push_back(row);
  }
  const fs::path csv = man.outDir / cfg.at("output").get<std::string>();
  write_csv(csv, "theta...,reconstructed,field_value", rows);
  man.add_output(csv);
  man.finish();
  return 0;
}

int cmd_forward_hyperbolic(const CommonOpts& common) {
  const json cfg = load_config(common);
  check_keys(cfg, {"n", "k", "field", "output"},
             {"v_order", "sigma_order", "rho_half", "rho_count", "r_max"}, "forward-hyperbolic");
  const int n = cfg.at("n"), k = cfg.at("k");
  const auto field = parse_hyper_field(cfg.at("field"));
  const int vOrder = cfg.value("v_order", 16), sigmaOrder = cfg.value("sigma_order", 16);
  const double rhoHalf = cfg.value("rho_half", 3.0);
  const int rhoCount = cfg.value("rho_count", 17);

  igt::hyper::HRadonOptions ho;
  ho.rMax = cfg.value("r_max", 12.0);

  Manifest man("forward-hyperbolic", common, cfg);
  const auto vq = igt::numkit::make_sphere_quadrature(n - k - 1, vOrder, true);
  const auto sq = igt::numkit::make_sphere_quadrature(k, sigmaOrder, true);
  const auto rhoGrid = igt::numkit::Grid1D::uniform_trapezoid(-rhoHalf, rhoHalf, rhoCount);

  Eigen::ArrayXd values(static_cast<Eigen::Index>(vq.size()) * sq.size() * rhoCount);
  igt::parallel_for(static_cast<std::size_t>(vq.size()), common.threads, [&](std::size_t iv) {
    const Eigen::VectorXd v = vq.point(static_cast<int>(iv));
    const auto rot = igt::make_block_rotation(v, k);
    for (int is = 0; is < sq.size(); ++is)
      for (int ir = 0; ir < rhoCount; ++ir) {
        const auto wBlock =
            igt::hyper::OneSheetPoint::from_polar(sq.point(is), rhoGrid.nodes[ir]);
        Eigen::VectorXd wFull = Eigen::VectorXd::Zero(n + 1);
        wFull.tail(k + 2) = wBlock.coords;
        igt::hyper::HyperbolicComplexElement el{
            v, igt::hyper::OneSheetPoint::from_coords(rot.apply(wFull))};
        values[(static_cast<Eigen::Index>(iv) * sq.size() + is) * rhoCount + ir] =
            igt::hyper::hradon_forward_restricted(field, n, k, el, ho).value;
      }
  });

  const fs::path rgrd = man.outDir / cfg.at("output").get<std::string>();
  const std::vector<std::size_t> dims{static_cast<std::size_t>(vq.size()),
                                      static_cast<std::size_t>(sq.size()),
                                      static_cast<std::size_t>(rhoCount)};
  igt::io::write_grid(rgrd, dims,
                      std::span<const double>(values.data(),
                                              static_cast<std::size_t>(values.size())));
  man.add_output(rgrd);
  json sidecar{{"kind", "hyper-sinogram"},  {"n", n},
               {"k", k},                    {"v_order", vOrder},
               {"sigma_order", sigmaOrder}, {"rho_half", rhoHalf},
               {"rho_count", rhoCount},     {"r_max", ho.rMax}};
  const fs::path side = rgrd.string() + ".json";
  std::ofstream(side) << sidecar.dump(2) << "\n";
  man.add_output(side);
  man.finish();
  return 0;
}

int cmd_check_range(const CommonOpts& common) {
  const json cfg = load_config(common);
  check_keys(cfg, {"n", "k", "field", "report"},
             {"theta_order", "s_half", "s_count", "xpp_half", "xpp_count", "plane_order", "m_max",
              "target_half", "target_count", "freq_count", "tolerances"},
             "check-range");
  const int n = cfg.at("n"), k = cfg.at("k");
  const auto field = parse_euclid_field(cfg.at("field"), n, k);
  auto grids = grids_from_config(cfg, n, k);

  igt::euclid::ForwardOptions fo;
  fo.planeOrder = cfg.value("plane_order", 64);
  fo.threads = common.threads;

  Manifest man("check-range", common, cfg);
  const auto sino = igt::euclid::forward_restricted(field, grids, fo);

  igt::range::RangeVerdictOptions vo;
  vo.mMax = cfg.value("m_max", 4);
  vo.targetXp = igt::euclid::BoxGrid::cube(2, cfg.value("target_half", 4.0),
                                           cfg.value("target_count", 33));
  vo.forward = fo;
  vo.fourier.freqCount = cfg.value("freq_count", 257);
  vo.fourier.threads = common.threads;
  if (cfg.contains("tolerances")) {
    const auto& t = cfg.at("tolerances");
    check_keys(t, {}, {"evenness", "moment", "roundtrip"}, "tolerances");
    vo.tol.evenness = t.value("evenness", vo.tol.evenness);
    vo.tol.moment = t.value("moment", vo.tol.moment);
    vo.tol.roundtrip = t.value("roundtrip", vo.tol.roundtrip);
  }
  const auto verdict = igt::range::range_verdict(sino, vo);

  std::vector<std::string> rows;
  for (const auto& c : verdict.criteria)
    rows.push_back(c.name + "," + std::to_string(c.m) + "," + fmt(c.value) + "," +
                   fmt(c.threshold) + "," + (c.pass ? "pass" : "fail"));
  const fs::path csv = man.outDir / cfg.at("report").get<std::string>();
  write_csv(csv, "criterion,m,value,threshold,verdict", rows);
  man.add_output(csv);
  man.finish();
  logMsg(common, "info", std::string("check-range verdict: ") + (verdict.pass ? "pass" : "fail"));
  return verdict.pass ? 0 : 3;
}

int cmd_check_identity(const CommonOpts& common) {
  const json cfg = load_config(common);
  check_keys(cfg, {"which", "report"},
             {"n", "k", "field", "tolerance", "v_order", "w_order", "circle_order", "psi_order",
              "rho_max", "r_max"},
             "check-identity");
  const std::string which = cfg.at("which");
  const double tol = cfg.value("tolerance", 1e-3);
  Manifest man("check-identity", common, cfg);
  std::vector<std::string> rows;
  bool pass = true;

  if (which == "funk-duality") {
    const int n = cfg.value("n", 3), k = cfg.value("k", 1);
    const auto field = parse_funk_field(cfg.at("field"), n, k);
    igt::funk::FunkDualityOptions fo;
    fo.vOrder = cfg.value("v_order", 32);
    fo.wOrder = cfg.value("w_order", 32);
    fo.circleOrder = cfg.value("circle_order", 64);
    fo.psiOrder = cfg.value("psi_order", 64);
    const auto chk = igt::funk::duality_identity_check(field, n, k, fo);
    rows.push_back("funk-duality," + fmt(chk.lhs) + "," + fmt(chk.rhs) + "," + fmt(chk.relError));
    pass = chk.relError <= tol;
  } else if (which == "hyper-duality") {
    const int n = cfg.value("n", 2);
    const auto field = parse_hyper_field(cfg.at("field"));
    igt::hyper::HDualityOptions ho;
    ho.rhoMax = cfg.value("rho_max", 10.0);
    ho.rMax = cfg.value("r_max", 12.0);
    std::vector<Eigen::VectorXd> sigmas{Eigen::VectorXd::Unit(n, 0), Eigen::VectorXd::Unit(n, 1)};
    const auto chk = igt::hyper::duality_identity_h(field, n, sigmas, ho);
    rows.push_back("hyper-duality," + fmt(chk.lhs) + "," + fmt(chk.rhs) + "," + fmt(chk.relError));
    pass = chk.relError <= tol;
  } else if (which == "hyper-slice") {
    const int n = cfg.value("n", 3), k = cfg.value("k", 1);
    const auto field = parse_hyper_field(cfg.at("field"));
    igt::hyper::SliceIdentityOptions so;
    so.rMax = cfg.value("r_max", 12.0);
    so.vOrder = cfg.value("v_order", 32);
    const auto chk = igt::hyper::slice_identity_check(field, n, k, so);
    rows.push_back("hyper-slice," + fmt(chk.lhs) + "," + fmt(chk.rhs) + "," + fmt(chk.relError));
    pass = chk.relError <= tol;
  } else if (which == "hyper-measures") {
    const int n = cfg.value("n", 2);
    const auto field = parse_hyper_field(cfg.at("field"));
    const double rMax = cfg.value("r_max", 12.0);
    std::vector<double> vals;
    for (int k2 = 0; k2 <= n - 1; ++k2)
      vals.push_back(igt::hyper::hpolar_quadrature(n, k2, rMax).integrate(field));
    for (std::size_t a = 1; a < vals.size(); ++a) {
      const double rel = std::abs(vals[a] - vals[0]) / std::max(std::abs(vals[0]), 1e-300);
      rows.push_back("hyper-measures-k" + std::to_string(a) + "," + fmt(vals[a]) + "," +
                     fmt(vals[0]) + "," + fmt(rel));
      pass = pass && rel <= tol;
    }
  } else {
    throw igt::precondition_error("which must be one of funk-duality, hyper-duality, hyper-slice, "
                                  "hyper-measures");
  }

  const fs::path csv = man.outDir / cfg.at("report").get<std::string>();
  write_csv(csv, "identity,lhs,rhs,rel_error", rows);
  man.add_output(csv);
  man.finish();
  if (!pass) throw igt::numerical_error(which + ": identity out of tolerance");
  return 0;
}

int cmd_scan_divergence(const CommonOpts& common) {
  const json cfg = load_config(common);
  check_keys(cfg, {"which", "report"},
             {"n", "k", "p", "delta", "lambda_exponents", "cutoff_exponents", "probe_s", "h"},
             "scan-divergence");
  const std::string which = cfg.at("which");
  Manifest man("scan-divergence", common, cfg);
  std::vector<std::string> rows;

  if (which == "euclid-f0") {
    const int n = cfg.value("n", 3), k = cfg.value("k", 1);
    const double p = cfg.value("p", 2.0), delta = cfg.value("delta", 0.25);
    std::vector<double> lambdas;
    for (const auto& e :
         cfg.value("lambda_exponents", std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}))
      lambdas.push_back(std::pow(2.0, e));
    igt::euclid::PlaneParam probe;
    probe.theta = Eigen::VectorXd::Unit(k + 1, 0);
    probe.s = cfg.value("probe_s", 1.0);
    probe.xpp = Eigen::VectorXd::Zero(n - k - 1);
    const auto scan = igt::euclid::divergence_scan_f0(n, k, p, delta, lambdas, probe);
    for (Eigen::Index j = 0; j < scan.lambdas.size(); ++j)
      rows.push_back(fmt(scan.lambdas[j]) + "," + fmt(scan.values[j]));
    write_csv(man.outDir / cfg.at("report").get<std::string>(), "lambda,value", rows);
  } else if (which == "funk-ftilde") {
    const int n = cfg.value("n", 4), k = cfg.value("k", 1);
    const double p = cfg.value("p", 3.0);
    std::vector<double> cutoffs;
    for (const auto& e :
         cfg.value("cutoff_exponents", std::vector<int>{4, 6, 8, 10, 12, 14, 16, 18, 20}))
      cutoffs.push_back(std::pow(2.0, -e));
    const auto rep = igt::funk::counterexample_scan_ftilde(n, k, p, cutoffs, cfg.value("h", 1.0));
    for (Eigen::Index j = 0; j < rep.cutoffs.size(); ++j)
      rows.push_back(fmt(rep.cutoffs[j]) + "," + fmt(rep.lpTruncations[j]) + "," +
                     fmt(rep.funkTruncations[j]) + "," + fmt(rep.funkIncrements[j]));
    write_csv(man.outDir / cfg.at("report").get<std::string>(),
              "cutoff,lp_truncation,funk_truncation,funk_increment", rows);
  } else {
    throw igt::precondition_error("which must be 'euclid-f0' or 'funk-ftilde'");
  }
  man.add_output(man.outDir / cfg.at("report").get<std::string>());
  man.finish();
  return 0;
}

void emit_error(const std::string& kind, const std::string& message) {
  json e{{"error", {{"kind", kind}, {"message", message}}}};
  std::cerr << e.dump() << "\n";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"igt - restricted Radon-type transforms on R^n, S^n and H^n"};
  app.require_subcommand(1);

  CommonOpts common;
  const std::vector<std::string> names = {"forward-euclidean", "invert-euclidean", "forward-funk",
                                          "invert-funk",       "forward-hyperbolic", "check-range",
                                          "check-identity",    "scan-divergence"};
  std::map<std::string, CLI::App*> subs;
  for (const auto& name : names) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", common.configPath, "JSON configuration file")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--out", common.outDir, "output directory");
    sub->add_option("--threads", common.threads, "worker thread count");
    sub->add_option("--log-level", common.logLevel, "error|warn|info|debug")
        ->check(CLI::IsMember({"error", "warn", "info", "debug"}));
    subs[name] = sub;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    if (code != 0) {
      emit_error("precondition", e.get_name());
      return 2;
    }
    return 0;
  }

  try {
    if (subs["forward-euclidean"]->parsed()) return cmd_forward_euclidean(common);
    if (subs["invert-euclidean"]->parsed()) return cmd_invert_euclidean(common);
    if (subs["forward-funk"]->parsed()) return cmd_forward_funk(common);
    if (subs["invert-funk"]->parsed()) return cmd_invert_funk(common);
    if (subs["forward-hyperbolic"]->parsed()) return cmd_forward_hyperbolic(common);
    if (subs["check-range"]->parsed()) return cmd_check_range(common);
    if (subs["check-identity"]->parsed()) return cmd_check_identity(common);
    if (subs["scan-divergence"]->parsed()) return cmd_scan_divergence(common);
  } catch (const igt::io_error& e) {
    emit_error("io", e.what());
    return 4;
  } catch (const igt::precondition_error& e) {
    emit_error("precondition", e.what());
    return 2;
  } catch (const igt::numerical_error& e) {
    emit_error("numerical", e.what());
    return 3;
  } catch (const std::exception& e) {
    emit_error("internal", e.what());
    return 1;
  }
  return 0;
}
