#include "cli/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <functional>
#include <iomanip>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cli/number_format.hpp"
#include "ptsusy/errors.hpp"
#include "ptsusy/gup.hpp"
#include "ptsusy/profiles.hpp"
#include "ptsusy/scattering.hpp"
#include "ptsusy/spectral.hpp"
#include "ptsusy/susy_core.hpp"
#include "ptsusy/symmetry.hpp"

namespace ptsusy::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string command;
  std::string family = "A";
  double n0 = 1.0;
  double v0 = 1.0;
  double eta0 = 1.0;
  double eta1 = 4.0;
  double eta2 = 2.0;
  double beta = 0.0;
  double k = 1.0;
  double epsilon = 0.0;
  double lambda = 0.0;
  double grid_start = 0.0;
  double grid_end = 0.0;
  std::size_t grid_count = 1001;
  std::size_t periods = 50;
  std::size_t steps_per_period = 1024;
  double k_start = 0.0;
  double k_end = 0.0;
  std::size_t k_count = 1;
  int stencil_order = 2;
  int figure = 0;
  std::string format = "csv";
  std::string out;
  bool eq27_offset = false;
  std::string particle = "electron";
  double mass = 0.0;

  std::function<bool(const std::string&)> given;
};

// Matched profile and energies for the SUSY commands.
struct Setup {
  Profile profile;
  SusyParams sp;
  Grid grid;
  std::vector<std::string> warnings;
};

Family parse_family(const std::string& name) {
  if (name == "A" || name == "a") return Family::PlaneWave;
  if (name == "B" || name == "b") return Family::Sinusoidal;
  throw InvalidInput("unknown family '" + name + "' (expected A or B)");
}

Profile make_profile(const RunConfig& c, Family family, double beta) {
  if (family == Family::PlaneWave) return PlaneWaveProfile(c.n0, c.v0, beta);
  return SinusoidalProfile(c.eta0, c.eta1, c.eta2, beta);
}

std::vector<std::string> perturbation_warnings(const Profile& p) {
  std::vector<std::string> out;
  const double amplitude = max_perturbation(p);
  if (amplitude >= 1.0) {
    std::ostringstream msg;
    msg << "perturbation max|v| = " << amplitude
        << " >= 1: the small-perturbation form n = n_bg (1 + v), |v| << 1 does not hold";
    out.push_back(msg.str());
  }
  return out;
}

Grid default_grid(const RunConfig& c, const Profile& p) {
  const double span = period(p);
  const double start = c.given("grid-start") ? c.grid_start : -span;
  const double end = c.given("grid-end") ? c.grid_end : span;
  return Grid(start, end, c.grid_count);
}

Setup resolve_matched(const RunConfig& c) {
  const Family family = parse_family(c.family);
  double k = c.k;
  double beta = 0.0;
  if (c.given("beta")) {
    beta = c.beta;
    if (!c.given("k")) k = family == Family::PlaneWave ? beta / 2.0 : beta;
  } else {
    beta = matched_beta(family, k);
  }
  Profile profile = make_profile(c, family, beta);
  const double epsilon = c.given("epsilon") ? c.epsilon : matched_epsilon(profile, k, c.lambda);
  const SusyParams sp{k, epsilon, c.lambda};
  check_matching(profile, sp);
  Grid grid = default_grid(c, profile);
  return {profile, sp, grid, perturbation_warnings(profile)};
}

json profile_json(const Profile& p) {
  if (const auto* a = std::get_if<PlaneWaveProfile>(&p))
    return {{"family", "A"}, {"n0", a->n0()}, {"v0", a->v0()}, {"beta", a->beta()}};
  const auto& b = std::get<SinusoidalProfile>(p);
  return {{"family", "B"}, {"eta0", b.eta0()}, {"eta1", b.eta1()}, {"eta2", b.eta2()}, {"beta", b.beta()}};
}

json setup_json(const Setup& s) {
  json j = profile_json(s.profile);
  j["k"] = s.sp.k;
  j["epsilon"] = s.sp.epsilon;
  j["lambda"] = s.sp.lambda;
  j["grid"] = {{"start", s.grid.z_start()}, {"end", s.grid.z_end()}, {"count", s.grid.count()}};
  return j;
}

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
  } else {
    write_atomically(c.out, text);
  }
}

void print_warnings(const std::vector<std::string>& warnings, std::ostream& err) {
  for (const auto& w : warnings) err << "warning: " << w << '\n';
}

void append_row(std::string& text, const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) text += ',';
    text += format_double(values[i]);
  }
  text += '\n';
}

// --- profile / figure ------------------------------------------------------

std::string partner_table(const PartnerSet& ps, std::optional<complex> v_minus_offset, bool with_sum,
                          std::optional<Superpotential> w) {
  std::string text = "z,re_n_plus,im_n_plus,re_n_minus,im_n_minus,re_v_plus,im_v_plus,re_v_minus,im_v_minus";
  if (with_sum) text += ",re_sum,im_sum";
  if (w) text += ",re_w,im_w,re_w_prime,im_w_prime";
  text += '\n';
  const Grid& grid = ps.n_plus.grid();
  const complex offset = v_minus_offset.value_or(0.0);
  for (std::size_t i = 0; i < grid.count(); ++i) {
    const complex vm = ps.v_minus[i] + offset;
    std::vector<double> row{grid.node(i),         ps.n_plus[i].real(),  ps.n_plus[i].imag(),
                            ps.n_minus[i].real(), ps.n_minus[i].imag(), ps.v_plus[i].real(),
                            ps.v_plus[i].imag(),  vm.real(),            vm.imag()};
    if (with_sum) {
      const complex sum = ps.n_plus[i] + ps.n_minus[i];
      row.push_back(sum.real());
      row.push_back(sum.imag());
    }
    if (w) {
      const auto [value, slope] = eval_W(*w, grid.node(i));
      row.insert(row.end(), {value.real(), value.imag(), slope.real(), slope.imag()});
    }
    append_row(text, row);
  }
  return text;
}

json partner_json(const Setup& s, const PartnerSet& ps, std::optional<complex> offset) {
  auto split = [](const ComplexField& f, complex shift = 0.0) {
    json re = json::array(), im = json::array();
    for (const auto& v : f.values()) {
      re.push_back((v + shift).real());
      im.push_back((v + shift).imag());
    }
    return json{{"re", re}, {"im", im}};
  };
  return {{"parameters", setup_json(s)},
          {"z", s.grid.nodes()},
          {"n_plus", split(ps.n_plus)},
          {"n_minus", split(ps.n_minus)},
          {"v_plus", split(ps.v_plus)},
          {"v_minus", split(ps.v_minus, offset.value_or(0.0))}};
}

int cmd_profile(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Setup s = resolve_matched(c);
  print_warnings(s.warnings, err);
  const PartnerSet ps = build_partner_set(s.profile, s.sp, s.grid);
  if (c.format == "json") {
    json j = partner_json(s, ps, std::nullopt);
    j["command"] = "profile";
    j["warnings"] = s.warnings;
    emit(c, j.dump(2) + "\n", out);
  } else {
    emit(c, partner_table(ps, std::nullopt, false, build_superpotential(s.profile, s.sp)), out);
  }
  return kSuccess;
}

// The printed partner potential for the plane-wave family carries an extra
// constant gamma = beta^2 v0^2 / 4 relative to W^2 - W' + lambda.
double constant_v_minus_offset(const Profile& p) {
  const auto* a = std::get_if<PlaneWaveProfile>(&p);
  if (a == nullptr) throw InvalidInput("--eq27-offset applies to the plane-wave family (A) only");
  return a->beta() * a->beta() * a->v0() * a->v0() / 4.0;
}

int cmd_figure(RunConfig c, std::ostream& out, std::ostream& err) {
  if (c.figure < 1 || c.figure > 3)
    throw InvalidInput("unknown figure " + std::to_string(c.figure) + " (expected 1, 2 or 3)");
  // Figure presets; explicit flags win.
  auto preset = [&](const char* name, auto& field, auto value) {
    if (!c.given(name)) field = value;
  };
  preset("family", c.family, std::string(c.figure == 3 ? "B" : "A"));
  preset("lambda", c.lambda, 0.0);
  if (c.figure == 1) {
    preset("n0", c.n0, 1.0);
    preset("v0", c.v0, 10.0);
    // beta = 2 is the matched value for k = 1.
    if (!c.given("beta")) preset("k", c.k, 1.0);
  } else if (c.figure == 2) {
    preset("n0", c.n0, 1.0);
    preset("v0", c.v0, 1.0);
    preset("k", c.k, 1.0);
  } else {
    preset("eta0", c.eta0, 1.0);
    preset("eta1", c.eta1, 4.0);
    preset("eta2", c.eta2, 2.0);
    preset("k", c.k, 1.0);
  }
  const Setup s = resolve_matched(c);
  print_warnings(s.warnings, err);
  const PartnerSet ps = build_partner_set(s.profile, s.sp, s.grid);
  std::optional<complex> offset;
  if (c.eq27_offset) offset = constant_v_minus_offset(s.profile);
  if (c.format == "json") {
    json j = partner_json(s, ps, offset);
    j["command"] = "figure";
    j["figure"] = c.figure;
    j["warnings"] = s.warnings;
    emit(c, j.dump(2) + "\n", out);
  } else {
    emit(c, partner_table(ps, offset, c.figure == 1, std::nullopt), out);
  }
  return kSuccess;
}

// --- verify / spectrum -----------------------------------------------------

struct Check {
  std::string name;
  std::string relation;
  bool pass = false;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::optional<double> estimated_order;
  std::optional<double> expected_order;
};

Check residual_check(std::string name, std::string relation, const ResidualReport& r) {
  return {std::move(name), std::move(relation), r.pass, r.max_abs_residual, r.tolerance, {}, {}};
}

Check symmetry_check(std::string name, const SymmetryReport& r) {
  return {std::move(name), "n(z) = conj(n(-z))", r.is_pt_symmetric, r.max_violation, kPtTolerance, {}, {}};
}

constexpr double kOrderWindow = 0.3;

Check convergence_check(std::string name, std::string relation, const ConvergenceReport& r, int order) {
  Check check{std::move(name), std::move(relation), r.exact || r.order_within(order, kOrderWindow),
              r.residual_norms.back(), kOrderWindow, r.estimated_order, static_cast<double>(order)};
  return check;
}

complex test_function(double z) { return std::sin(z); }

struct SpectralStudy {
  ConvergenceReport annihilation;
  ConvergenceReport intertwining;
};

SpectralStudy spectral_study(const Setup& s, int order, std::size_t levels) {
  const Superpotential w = build_superpotential(s.profile, s.sp);
  const Grid one_period(0.0, period(s.profile), 101);
  return {annihilation_residual(w, one_period, order, levels),
          intertwining_convergence(w, w, s.sp.lambda, test_function, one_period, order, levels)};
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Setup s = resolve_matched(c);
  const Superpotential w = build_superpotential(s.profile, s.sp);
  const PartnerSet ps = build_partner_set(s.profile, s.sp, s.grid);
  const double pt_half_width = 5.0 * period(s.profile);
  const SpectralStudy study = spectral_study(s, c.stencil_order, 4);

  std::vector<Check> checks;
  checks.push_back(residual_check("riccati_plus", "k^2 (n+/n_bg)^2 = eps - lambda - (W^2 + W')",
                                  riccati_residual(s.profile, w, s.sp, Sign::Plus, s.grid)));
  checks.push_back(residual_check("riccati_minus", "k^2 (n-/n_bg)^2 = eps - lambda - (W^2 - W')",
                                  riccati_residual(s.profile, w, s.sp, Sign::Minus, s.grid)));
  checks.push_back(residual_check("partner_sum", "n+ + n- = 2 n_bg", partner_sum_check(ps)));
  checks.push_back(residual_check("potential_index_map", "V+ = eps - k^2 (n+/n_bg)^2",
                                  index_potential_consistency(ps, Sign::Plus)));
  checks.push_back(symmetry_check("pt_symmetry_n_plus", pt_check_analytic(s.profile, pt_half_width, 2001)));
  checks.push_back(symmetry_check("pt_symmetry_n_minus",
                                  pt_check_analytic(negated_perturbation(s.profile), pt_half_width, 2001)));
  checks.push_back(convergence_check("ground_state_annihilation", "(d/dz + W) psi0 = 0", study.annihilation,
                                     c.stencil_order));
  checks.push_back(convergence_check("intertwining", "O H- = H+ O", study.intertwining, c.stencil_order));

  const bool all_pass = std::all_of(checks.begin(), checks.end(), [](const Check& ch) { return ch.pass; });

  std::string text;
  if (c.format == "json") {
    json j;
    j["command"] = "verify";
    j["parameters"] = setup_json(s);
    j["checks"] = json::array();
    for (const auto& ch : checks) {
      json entry = {{"name", ch.name},
                    {"status", ch.pass ? "pass" : "fail"},
                    {"max_residual", ch.max_residual},
                    {"tolerance", ch.tolerance},
                    {"relation", ch.relation}};
      if (ch.estimated_order) entry["estimated_order"] = *ch.estimated_order;
      if (ch.expected_order) entry["expected_order"] = *ch.expected_order;
      j["checks"].push_back(entry);
    }
    j["warnings"] = s.warnings;
    j["pass"] = all_pass;
    text = j.dump(2) + "\n";
  } else {
    std::ostringstream table;
    table << std::left << std::setw(28) << "check" << std::setw(8) << "status" << std::setw(26) << "max_residual"
          << "criterion\n";
    for (const auto& ch : checks) {
      table << std::setw(28) << ch.name << std::setw(8) << (ch.pass ? "pass" : "FAIL") << std::setw(26)
            << format_shortest(ch.max_residual);
      if (ch.estimated_order && ch.expected_order)
        table << "order " << format_shortest(*ch.estimated_order) << " (expected " << format_shortest(*ch.expected_order)
              << " +/- " << format_shortest(ch.tolerance) << ")";
      else
        table << format_shortest(ch.tolerance);
      table << '\n';
    }
    table << (all_pass ? "all checks passed\n" : "some checks FAILED\n");
    text = table.str();
  }
  emit(c, text, out);
  print_warnings(s.warnings, err);
  for (const auto& ch : checks) {
    if (!ch.pass) err << "failed: " << ch.name << " [" << ch.relation << "]\n";
  }
  return all_pass ? kSuccess : kCheckFailed;
}

int cmd_spectrum(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Setup s = resolve_matched(c);
  print_warnings(s.warnings, err);
  const SpectralStudy study = spectral_study(s, c.stencil_order, 4);
  const std::pair<const char*, const ConvergenceReport*> rows[] = {{"annihilation", &study.annihilation},
                                                                   {"intertwining", &study.intertwining}};
  if (c.format == "json") {
    json j;
    j["command"] = "spectrum";
    j["parameters"] = setup_json(s);
    j["parameters"]["stencil_order"] = c.stencil_order;
    j["studies"] = json::array();
    for (const auto& [name, report] : rows) {
      j["studies"].push_back({{"name", name},
                              {"spacings", report->spacings},
                              {"residual_norms", report->residual_norms},
                              {"estimated_order", report->estimated_order},
                              {"exact", report->exact}});
    }
    j["warnings"] = s.warnings;
    emit(c, j.dump(2) + "\n", out);
  } else {
    std::string text = "check,stencil_order,spacing,max_residual,estimated_order\n";
    for (const auto& [name, report] : rows) {
      for (std::size_t i = 0; i < report->spacings.size(); ++i) {
        text += name;
        text += ',' + std::to_string(c.stencil_order) + ',';
        append_row(text, {report->spacings[i], report->residual_norms[i], report->estimated_order});
      }
    }
    emit(c, text, out);
  }
  return kSuccess;
}

// --- scatter ---------------------------------------------------------------

int cmd_scatter(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Family family = parse_family(c.family);
  const double beta = c.given("beta") ? c.beta : matched_beta(family, c.k);
  GratingSpec spec{make_profile(c, family, beta), c.periods, c.k, c.steps_per_period};

  std::vector<double> ks;
  if (c.given("k-start") || c.given("k-end")) {
    if (!c.given("k-start") || !c.given("k-end")) throw InvalidInput("--k-start and --k-end must be given together");
    if (c.k_count == 0) throw InvalidInput("--k-count must be positive");
    if (c.k_count == 1) {
      ks.push_back(c.k_start);
    } else {
      const double step = (c.k_end - c.k_start) / static_cast<double>(c.k_count - 1);
      for (std::size_t i = 0; i < c.k_count; ++i)
        ks.push_back(i + 1 == c.k_count ? c.k_end : c.k_start + static_cast<double>(i) * step);
    }
  } else {
    ks.push_back(c.k);
  }

  if (max_perturbation(spec.profile) > 0.01)
    err << "note: max|v| = " << max_perturbation(spec.profile)
        << " exceeds 0.01; one-sided invisibility is only validated for weak gratings\n";

  const std::vector<ScatteringResult> results = detuning_sweep(spec, ks);
  if (c.format == "json") {
    json j;
    j["command"] = "scatter";
    j["parameters"] = profile_json(spec.profile);
    j["parameters"]["periods"] = spec.periods;
    j["parameters"]["steps_per_period"] = spec.steps_per_period;
    j["points"] = json::array();
    for (std::size_t i = 0; i < ks.size(); ++i) {
      const auto& r = results[i];
      j["points"].push_back({{"k", ks[i]},
                             {"R_left", r.R_left},
                             {"R_right", r.R_right},
                             {"T", r.T},
                             {"t", {r.t.real(), r.t.imag()}},
                             {"r_left", {r.r_left.real(), r.r_left.imag()}},
                             {"r_right", {r.r_right.real(), r.r_right.imag()}}});
    }
    j["warnings"] = json::array();
    emit(c, j.dump(2) + "\n", out);
  } else {
    std::string text = "k,R_left,R_right,T,re_t,im_t\n";
    for (std::size_t i = 0; i < ks.size(); ++i) {
      const auto& r = results[i];
      append_row(text, {ks[i], r.R_left, r.R_right, r.T, r.t.real(), r.t.imag()});
    }
    emit(c, text, out);
  }
  return kSuccess;
}

// --- gup -------------------------------------------------------------------

int cmd_gup(const RunConfig& c, std::ostream& out) {
  double mass = 0.0;
  std::string label;
  if (c.given("mass")) {
    mass = c.mass;
    label = "custom";
  } else if (c.particle == "electron") {
    mass = gup::kElectronMass;
    label = "electron";
  } else {
    throw InvalidInput("unknown particle '" + c.particle + "' (known: electron)");
  }
  const gup::GupEstimate e = gup::tau0_estimate(mass);
  const int order = static_cast<int>(std::floor(std::log10(e.tau0)));
  std::string text;
  if (c.format == "json") {
    json j = {{"command", "gup"},
              {"parameters", {{"particle", label}, {"mass", mass}, {"planck_mass", e.planck_mass},
                              {"c", gup::kSpeedOfLight}}},
              {"tau", e.tau},
              {"tau0", e.tau0},
              {"log10_floor", order},
              {"warnings", json::array()}};
    text = j.dump(2) + "\n";
  } else {
    text = "particle = " + label + "\nmass = " + format_double(mass) + "\ntau = " + format_double(e.tau) +
           "\ntau0 = " + format_double(e.tau0) + "\nlog10_floor = " + std::to_string(order) + "\n";
  }
  emit(c, text, out);
  return kSuccess;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Supersymmetric partner profiles for PT-symmetric longitudinal gratings"};
  app.set_config("--config", "", "key = value file; command-line flags override it");
  app.add_option("command", c.command, "profile | verify | spectrum | scatter | figure | gup")
      ->required()
      ->check(CLI::IsMember({"profile", "verify", "spectrum", "scatter", "figure", "gup"}));
  app.add_option("--family", c.family, "Profile family: A (plane wave) or B (sinusoidal)");
  app.add_option("--n0", c.n0, "Background index of family A");
  app.add_option("--v0", c.v0, "Plane-wave perturbation amplitude");
  app.add_option("--eta0", c.eta0, "Background index of family B");
  app.add_option("--eta1", c.eta1, "Real index contrast of family B");
  app.add_option("--eta2", c.eta2, "Gain/loss amplitude of family B");
  app.add_option("--beta", c.beta, "Grating spatial frequency (default: matched to k)");
  app.add_option("--k", c.k, "Wavenumber");
  app.add_option("--epsilon", c.epsilon, "Incident energy (default: matched)");
  app.add_option("--lambda", c.lambda, "Cut-off energy");
  app.add_option("--grid-start", c.grid_start, "Grid start (default: -1 period)");
  app.add_option("--grid-end", c.grid_end, "Grid end (default: +1 period)");
  app.add_option("--grid-count", c.grid_count, "Number of grid nodes");
  app.add_option("--periods", c.periods, "Grating periods for scatter");
  app.add_option("--steps-per-period", c.steps_per_period, "RK4 steps per grating period");
  app.add_option("--k-start", c.k_start, "First k of a scatter sweep");
  app.add_option("--k-end", c.k_end, "Last k of a scatter sweep");
  app.add_option("--k-count", c.k_count, "Number of k values in a scatter sweep");
  app.add_option("--stencil-order", c.stencil_order, "Finite-difference order for verify/spectrum")
      ->check(CLI::IsMember({2, 4}));
  app.add_option("--figure", c.figure, "Figure preset: 1, 2 or 3");
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", c.out, "Output path (default: stdout)");
  app.add_flag("--eq27-offset", c.eq27_offset, "Add the constant beta^2 v0^2 / 4 to V- in figure output");
  app.add_option("--particle", c.particle, "Named particle for gup");
  app.add_option("--mass", c.mass, "Particle mass in kg for gup");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalidInput;
  }
  c.given = [&app](const std::string& name) { return app.count("--" + name) > 0; };

  try {
    if (c.command == "profile") return cmd_profile(c, out, err);
    if (c.command == "figure") return cmd_figure(c, out, err);
    if (c.command == "verify") return cmd_verify(c, out, err);
    if (c.command == "spectrum") return cmd_spectrum(c, out, err);
    if (c.command == "scatter") return cmd_scatter(c, out, err);
    return cmd_gup(c, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace ptsusy::cli
