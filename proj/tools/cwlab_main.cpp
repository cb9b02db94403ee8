// cwlab: command-line front end.
//
//   cwlab orbit     --type A --rank 2 --point 1,0,-1 [--list]
//   cwlab certify   --type D --rank 4 --point 1,1,1,1
//   cwlab strata    --type A --rank 4
//   cwlab killing   --nav-w 1/4,0,... --x random --xprime-center --group su --n 3
//   cwlab lemgeo    --x 1,0,0 --v 0,0.3,0 --t0 5.8
//   cwlab roundness --nav-w 1/2,0
//
// Exit codes: 0 success, 1 negative verdict, 2 usage or input error.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cwlab/error.hpp"
#include "cwlab/json_io.hpp"
#include "cwlab/lie_group.hpp"
#include "cwlab/orbit_certify.hpp"
#include "cwlab/randers.hpp"
#include "cwlab/strata.hpp"

namespace {

using namespace cwlab;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct Globals {
  bool json = false;
  std::uint64_t seed = 1;
  std::optional<double> tol;
  int samples = 200;

  double tol_or(double fallback) const { return tol.value_or(fallback); }
};

struct TypeArgs {
  std::string family = "A";
  int rank = 0;
  std::string point;
  std::string frame = "standard";
};

void add_type_options(CLI::App* cmd, TypeArgs& t) {
  cmd->add_option("--type", t.family, "root system family: A, D or E6")->required();
  cmd->add_option("--rank", t.rank, "rank (implied for E6)");
  cmd->add_option("--frame", t.frame, "E6 coordinates: standard or a5a1")
      ->check(CLI::IsMember({"standard", "a5a1"}));
}

LieType lie_type(const TypeArgs& t) {
  LieType out;
  if (t.family == "A") {
    out = LieType::A(t.rank);
  } else if (t.family == "D") {
    out = LieType::D(t.rank);
  } else if (t.family == "E6") {
    out = LieType::E6();
    if (t.rank != 0 && t.rank != 6)
      throw Error(ErrorCode::kInvalidLieType, "E6 has rank 6");
  } else {
    throw Error(ErrorCode::kInvalidLieType, "unknown family '" + t.family + "'");
  }
  out.validate();
  return out;
}

RootSystem root_system(const TypeArgs& t) {
  return build_root_system(lie_type(t), t.frame == "a5a1" ? E6Frame::kA5A1 : E6Frame::kStandard);
}

Vec point_in(const RootSystem& rs, const std::string& text) {
  Vec x = parse_vec(text);
  rs.check_cartan_point(x);
  return x;
}

void echo(Json& j, const Globals& g, double tol) {
  j["seed"] = g.seed;
  j["tol"] = tol;
}

void echo_text(const Globals& g, double tol) {
  std::cout << "seed: " << g.seed << "\ntol: " << tol << "\n";
}

std::string fmt(double x) {
  std::ostringstream s;
  s << std::setprecision(12) << x + 0.0;
  return s.str();
}

// orbit ----------------------------------------------------------------------

int run_orbit(const Globals& g, const TypeArgs& t, bool list) {
  const RootSystem rs = root_system(t);
  const Vec x = point_in(rs, t.point);
  const WeylOrbit orbit = weyl_orbit(rs, x);
  if (g.json) {
    Json j{{"command", "orbit"}, {"type", rs.type().name()}, {"point", to_json(x)},
           {"orbit_size", orbit.size()}};
    if (rs.type().family == Family::kE6) j["frame"] = t.frame;
    if (list) {
      j["points"] = Json::array();
      for (const auto& p : orbit.points) j["points"].push_back(to_json(p));
    }
    echo(j, g, g.tol_or(0.0));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "type: " << rs.type().name() << "\npoint: " << to_string(x)
              << "\norbit size: " << orbit.size() << "\n";
    if (list)
      for (const auto& p : orbit.points) std::cout << "  " << to_string(p) << "\n";
    echo_text(g, g.tol_or(0.0));
  }
  return kOk;
}

// certify --------------------------------------------------------------------

std::string matrix_text(const ExactMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) s += (i ? "; " : "") + to_string(m.row(i));
  return s + "]";
}

int run_certify(const Globals& g, const TypeArgs& t) {
  const RootSystem rs = root_system(t);
  const Vec x = point_in(rs, t.point);
  const OrbitCertification c = certify_orbit(rs, x);
  const Verdict verdict = c.nullspace.verdict;
  const int code = !c.concordant() ? kNegative
                   : verdict == Verdict::kCertifiedCentered ? kOk
                   : verdict == Verdict::kCounterexample   ? kNegative
                                                           : kUsage;
  if (g.json) {
    Json j = to_json(c);
    j["command"] = "certify";
    j["type"] = rs.type().name();
    j["point"] = to_json(x);
    j["verdict"] = verdict_name(verdict);
    j["witness_coordinates"] = cartan_chart(rs).drop_last ? "chart" : "ambient";
    echo(j, g, g.tol_or(0.0));
    std::cout << j.dump(2) << "\n";
    return code;
  }
  std::cout << "type: " << rs.type().name() << "\npoint: " << to_string(x)
            << "\norbit size: " << c.orbit_size << "\n";
  for (const CenterCertificate* cert : {&c.symmetric_span, &c.midpoint_affine, &c.nullspace}) {
    std::cout << std::left << std::setw(17) << method_name(cert->method) << std::setw(20)
              << verdict_name(cert->verdict);
    if (cert->quadric_space_dim) std::cout << " quadric space dim " << *cert->quadric_space_dim;
    if (!cert->hyperplane_ranks.empty()) {
      std::cout << " hyperplane ranks";
      for (auto r : cert->hyperplane_ranks) std::cout << " " << r;
    }
    std::cout << "\n";
  }
  if (c.nullspace.witness) {
    const Quadric& q = *c.nullspace.witness;
    std::cout << "witness (chart coordinates): A = " << matrix_text(q.a) << ", b = "
              << to_string(q.b) << ", c = " << q.c.to_string() << "\n";
  }
  std::cout << "concordant: " << (c.concordant() ? "yes" : "NO") << "\nverdict: "
            << verdict_name(verdict) << "\n";
  echo_text(g, g.tol_or(0.0));
  return code;
}

// strata ---------------------------------------------------------------------

int run_strata(const Globals& g, const TypeArgs& t, bool expect_bound) {
  const LieType type = lie_type(t);
  const auto rows = enumerate_strata(type);
  const int min_codim = min_nongeneric_codim(rows);
  const bool holds = min_codim >= type.rank + 1;
  if (g.json) {
    Json j{{"command", "strata"}, {"type", type.name()}, {"strata", Json::array()},
           {"min_nongeneric_codim", min_codim}, {"bound", type.rank + 1}, {"bound_holds", holds}};
    for (const auto& r : rows) j["strata"].push_back(to_json(r));
    echo(j, g, g.tol_or(0.0));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "type: " << type.name() << "\n";
    std::cout << std::left << std::setw(24) << "multiplicities" << std::setw(8) << "codim"
              << "generic\n";
    for (const auto& r : rows)
      std::cout << std::setw(24) << r.mtype.to_string() << std::setw(8) << r.codim
                << (r.generic ? "yes" : "no") << "\n";
    std::cout << "min non-generic codim: " << min_codim << " (rank+1 = " << type.rank + 1
              << ", " << (holds ? "holds" : "FAILS") << ")\n";
    echo_text(g, g.tol_or(0.0));
  }
  return expect_bound && !holds ? kNegative : kOk;
}

// killing --------------------------------------------------------------------

struct KillingArgs {
  std::string data;
  std::string nav_w;
  std::string x;
  std::string xprime;
  bool xprime_center = false;
  std::string group = "su";
  int n = 3;
  bool expect_constant = false;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

Eigen::VectorXd float_vec(const std::string& csv) {
  const std::vector<double> v = to_double(parse_vec(csv));
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

Eigen::VectorXd random_unit(Rng& rng, Eigen::Index n) {
  std::normal_distribution<double> gauss;
  Eigen::VectorXd v(n);
  for (auto& e : v) e = gauss(rng);
  return v / v.norm();
}

int run_killing(const Globals& g, const KillingArgs& k) {
  if (g.samples < 1) throw Error(ErrorCode::kInvalidArgument, "--samples must be at least 1");
  if (k.data.empty() == k.nav_w.empty())
    throw Error(ErrorCode::kInvalidArgument, "give exactly one of --data and --nav-w");
  const GroupFamily family = k.group == "so" ? GroupFamily::kSO : GroupFamily::kSU;
  const int dim = algebra_dim(family, k.n);

  std::optional<RandersData> exact;
  NumericRanders d;
  if (!k.nav_w.empty()) {
    exact = navigation_to_randers(ExactMatrix::identity(static_cast<std::size_t>(dim)),
                                  parse_vec(k.nav_w));
    d = to_numeric(*exact);
  } else {
    const Json j = read_json_file(k.data);
    if (j.value("mode", "") == "exact") exact = randers_from_json(j);
    d = numeric_randers_from_json(j);
  }
  if (d.dim() != dim)
    throw Error(ErrorCode::kDimensionMismatch,
                "data has dimension " + std::to_string(d.dim()) + " but the algebra has " +
                    std::to_string(dim));

  std::optional<RoundSphere> sphere;
  if (exact) sphere = is_round_sphere(*exact);

  Rng rng(g.seed);
  Eigen::VectorXd xprime = Eigen::VectorXd::Zero(dim);
  if (k.xprime_center) {
    if (!sphere) throw Error(ErrorCode::kNotApplicable, "--xprime-center needs round-sphere data");
    for (Eigen::Index i = 0; i < dim; ++i)
      xprime(i) = -sphere->center[static_cast<std::size_t>(i)].to_double();
  } else if (!k.xprime.empty()) {
    xprime = float_vec(k.xprime);
  }
  Eigen::VectorXd x;
  if (k.x == "random") {
    x = random_unit(rng, dim);
    if (sphere) x *= std::sqrt(sphere->radius_sq.to_double());
  } else {
    x = float_vec(k.x);
  }
  if (x.size() != dim || xprime.size() != dim)
    throw Error(ErrorCode::kDimensionMismatch, "X and X' need " + std::to_string(dim) + " coordinates");

  std::vector<GroupElement> samples;
  for (int i = 0; i < g.samples; ++i) samples.push_back(haar_sample(family, k.n, rng));
  const auto rep = constant_length_test<GroupElement>(
      d, x, xprime, std::span<const GroupElement>(samples),
      [](const GroupElement& h, const Eigen::VectorXd& c) { return adjoint_coords(h, c); });

  const double tol = g.tol_or(1e-9);
  const bool constant = rep.variation <= tol;
  if (g.json) {
    Json j = to_json(rep);
    j["command"] = "killing";
    j["group"] = (family == GroupFamily::kSU ? "su" : "so") + std::to_string(k.n);
    j["round_sphere"] = sphere.has_value();
    j["constant_within_tol"] = constant;
    echo(j, g, tol);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "group: " << (family == GroupFamily::kSU ? "su(" : "so(") << k.n << ")\n"
              << "round sphere: " << (sphere ? "yes" : "no") << "\nsamples: " << rep.samples
              << "\nmin F: " << fmt(rep.min) << "\nmax F: " << fmt(rep.max)
              << "\nvariation: " << fmt(rep.variation) << "\nconstant within tol: "
              << (constant ? "yes" : "no") << "\n";
    echo_text(g, tol);
  }
  return k.expect_constant && !constant ? kNegative : kOk;
}

// lemgeo ---------------------------------------------------------------------

struct LemgeoArgs {
  std::string x;
  std::string v;
  std::optional<double> t0;
  std::string group = "su";
  int n = 2;
  int max_iter = 500;
};

int run_lemgeo(const Globals& g, const LemgeoArgs& a) {
  if (!a.t0) throw Error(ErrorCode::kInvalidArgument, "--t0 is required");
  const GroupFamily family = a.group == "so" ? GroupFamily::kSO : GroupFamily::kSU;
  const int dim = algebra_dim(family, a.n);
  const Eigen::VectorXd xc = float_vec(a.x);
  const Eigen::VectorXd vc = a.v.empty() ? Eigen::VectorXd::Zero(dim) : float_vec(a.v);
  if (xc.size() != dim || vc.size() != dim)
    throw Error(ErrorCode::kDimensionMismatch, "X and V need " + std::to_string(dim) + " coordinates");
  const double tol = g.tol_or(1e-12);
  const LemgeoResult r =
      lemgeo_solve(from_coords(family, a.n, xc), *a.t0, from_coords(family, a.n, vc), tol, a.max_iter);
  const Eigen::VectorXd xp = to_coords(r.x_prime);
  if (g.json) {
    Json j = to_json(r);
    j["command"] = "lemgeo";
    j["t0"] = *a.t0;
    j["v_norm"] = vc.norm();
    j["x_prime_coords"] = std::vector<double>(xp.data(), xp.data() + xp.size());
    echo(j, g, tol);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "t0: " << fmt(*a.t0) << "\n|V|: " << fmt(vc.norm()) << "\nt': " << fmt(r.t_prime)
              << "\nX':";
    for (double c : xp) std::cout << " " << fmt(c);
    std::cout << "\niterations: " << r.iterations << "\nmax contraction ratio: "
              << fmt(r.max_ratio) << "\nresidual: " << fmt(r.residual) << "\n";
    echo_text(g, tol);
  }
  return kOk;
}

// roundness ------------------------------------------------------------------

int run_roundness(const Globals& g, const std::string& data, const std::string& nav_w,
                  bool expect_round) {
  if (data.empty() == nav_w.empty())
    throw Error(ErrorCode::kInvalidArgument, "give exactly one of --data and --nav-w");
  RandersData d;
  std::optional<Vec> wind;
  if (!nav_w.empty()) {
    wind = parse_vec(nav_w);
    d = navigation_to_randers(ExactMatrix::identity(wind->size()), *wind);
  } else {
    d = randers_from_json(read_json_file(data));
  }
  const auto s = is_round_sphere(d);
  const bool round_trip = wind && s && s->center == *wind && s->radius_sq == Scalar(1);
  if (g.json) {
    Json j{{"command", "roundness"}, {"data", to_json(d)}, {"round", s.has_value()}};
    if (s)
      j["sphere"] = Json{{"center", to_json(s->center)},
                         {"radius_sq", s->radius_sq.to_string()},
                         {"lambda", s->lambda.to_string()}};
    if (wind) j["round_trip"] = round_trip;
    echo(j, g, g.tol_or(0.0));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "A: " << matrix_text(d.alpha_gram) << "\nV: " << to_string(d.v_bi) << "\n";
    if (s)
      std::cout << "round sphere: center " << to_string(s->center) << ", radius^2 "
                << s->radius_sq.to_string() << "\n";
    else
      std::cout << "round sphere: none\n";
    if (wind) std::cout << "round trip: " << (round_trip ? "ok" : "FAILED") << "\n";
    echo_text(g, g.tol_or(0.0));
  }
  if (wind && !round_trip) return kNegative;
  return expect_round && !s ? kNegative : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weyl-orbit ellipsoid certificates, stratifications and Randers-metric experiments"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--tol", g.tol, "tolerance (command specific default)");
  app.add_option("--samples", g.samples, "number of Haar samples");

  TypeArgs type_args;
  bool list = false;
  auto* orbit = app.add_subcommand("orbit", "Weyl-group orbit of a point");
  add_type_options(orbit, type_args);
  orbit->add_option("--point", type_args.point, "exact coordinates, e.g. 1/2,-1/2r3,0")->required();
  orbit->add_flag("--list", list, "print every orbit point");

  auto* certify = app.add_subcommand("certify", "is every ellipsoid through the orbit centred?");
  add_type_options(certify, type_args);
  certify->add_option("--point", type_args.point, "exact coordinates")->required();

  bool expect_bound = false;
  auto* strata = app.add_subcommand("strata", "multiplicity strata and codimensions");
  add_type_options(strata, type_args);
  strata->add_flag("--expect-bound", expect_bound, "exit 1 unless min non-generic codim >= rank+1");

  KillingArgs killing_args;
  auto* killing = app.add_subcommand("killing", "constant-length test over Haar samples");
  killing->add_option("--data", killing_args.data, "Randers data JSON file");
  killing->add_option("--nav-w", killing_args.nav_w, "navigation wind, exact coordinates");
  killing->add_option("--x", killing_args.x, "X coordinates, or 'random'")->required();
  killing->add_option("--xprime", killing_args.xprime, "X' coordinates (default 0)");
  killing->add_flag("--xprime-center", killing_args.xprime_center, "X' = -center of the round sphere");
  killing->add_option("--group", killing_args.group)->check(CLI::IsMember({"su", "so"}));
  killing->add_option("--n", killing_args.n, "matrix size")->check(CLI::Range(2, 16));
  killing->add_flag("--expect-constant", killing_args.expect_constant,
                    "exit 1 if the variation exceeds --tol");

  LemgeoArgs lemgeo_args;
  auto* lemgeo = app.add_subcommand("lemgeo", "fixed-point solver for exp(t0 X) = exp(t'X')exp((t0-t')V)");
  lemgeo->add_option("--x", lemgeo_args.x, "unit X in orthonormal coordinates")->required();
  lemgeo->add_option("--v", lemgeo_args.v, "V in orthonormal coordinates (default 0)");
  lemgeo->add_option("--t0", lemgeo_args.t0, "geodesic length");
  lemgeo->add_option("--group", lemgeo_args.group)->check(CLI::IsMember({"su", "so"}));
  lemgeo->add_option("--n", lemgeo_args.n, "matrix size")->check(CLI::Range(2, 16));
  lemgeo->add_option("--max-iter", lemgeo_args.max_iter)->check(CLI::PositiveNumber);

  std::string round_data, round_wind;
  bool expect_round = false;
  auto* roundness = app.add_subcommand("roundness", "round-sphere test and navigation round trip");
  roundness->add_option("--data", round_data, "exact Randers data JSON file");
  roundness->add_option("--nav-w", round_wind, "navigation wind, exact coordinates");
  roundness->add_flag("--expect-round", expect_round, "exit 1 if the indicatrix is not a round sphere");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*orbit) return run_orbit(g, type_args, list);
    if (*certify) return run_certify(g, type_args);
    if (*strata) return run_strata(g, type_args, expect_bound);
    if (*killing) return run_killing(g, killing_args);
    if (*lemgeo) return run_lemgeo(g, lemgeo_args);
    if (*roundness) return run_roundness(g, round_data, round_wind, expect_round);
  } catch (const Error& e) {
    if (g.json)
      std::cout << Json{{"error", error_code_name(e.code())}, {"message", e.what()}}.dump(2) << "\n";
    std::cerr << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
