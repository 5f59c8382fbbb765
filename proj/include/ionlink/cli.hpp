#ifndef IONLINK_CLI_HPP
#define IONLINK_CLI_HPP

// Command-line front end. run() never calls exit(); it returns
//   0  success, output written
//   1  domain / numeric / data error (message on the error stream)
//   2  usage error

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <memory>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "ionlink/atomic_model.hpp"
#include "ionlink/dispersion.hpp"
#include "ionlink/emission.hpp"
#include "ionlink/entanglement.hpp"
#include "ionlink/error.hpp"
#include "ionlink/fiber.hpp"
#include "ionlink/format.hpp"
#include "ionlink/markov_chain.hpp"
#include "ionlink/qfc.hpp"
#include "ionlink/report.hpp"
#include "ionlink/trap.hpp"
#include "ionlink/version.hpp"

namespace ionlink::cli {

namespace detail {

inline CollectionModel parse_collection(const std::string& s) {
  return s == "exact" ? CollectionModel::ExactSolidAngle : CollectionModel::Quadratic;
}

inline Polarization parse_polarization(const std::string& s) {
  if (s == "sigma-") return Polarization::SigmaMinus;
  if (s == "pi") return Polarization::Pi;
  return Polarization::SigmaPlus;
}

/// Grid 0, step, 2 step, ... ending exactly at `stop`.
inline std::vector<double> grid(double stop, double step, std::string_view what) {
  if (!(step > 0.0) || !(stop >= 0.0)) throw DomainError(std::string(what) + " range and step must be positive");
  const auto n = static_cast<long>(std::llround(stop / step));
  if (std::abs(n * step - stop) > 1e-9 * std::max(step, stop))
    throw DomainError(std::string(what) + " step must divide the range evenly");
  std::vector<double> out;
  for (long i = 0; i <= n; ++i) out.push_back(i == n ? stop : i * step);
  return out;
}

inline std::string efficiency_tag(double eff) { return "x" + format_number(eff); }

struct FiberSpec {
  double nm;
  std::optional<double> db;
};

inline FiberChannel resolve_fiber(const FiberSpec& spec, std::string_view what) {
  if (spec.db) return {spec.nm, *spec.db};
  if (auto f = lookup_fiber(spec.nm)) return {spec.nm, f->attenuation_db_per_km};
  throw DomainError("no reference attenuation near " + format_number(spec.nm) + " nm for the " + std::string(what) +
                    " fiber; pass it explicitly");
}

/// "<input_nm>:<pump_nm>:<efficiency>" as a DFG stage.
inline ConversionStage parse_stage(const std::string& text) {
  std::vector<double> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto colon = text.find(':', start);
    const auto piece = text.substr(start, colon == std::string::npos ? std::string::npos : colon - start);
    parts.push_back(kv::to_double(piece, "stage"));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  if (parts.size() != 3) throw DomainError("stage must be <input_nm>:<pump_nm>:<efficiency>, got '" + text + "'");
  return {LightField::from_wavelength_nm(parts[0], FieldRole::Input),
          LightField::from_wavelength_nm(parts[1], FieldRole::Pump), MixingKind::DFG, parts[2]};
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Trapped-ion photonic link simulator and planner", "ionlink"};
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.set_version_flag("--version", version_string());
  app.set_config("--config", "", "Key/value defaults file (flags override it)");
  app.require_subcommand(1);

  std::string format_flag;
  std::string output_path;
  app.add_option("--output-format", format_flag, "csv or json (default depends on the command)")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", output_path, "Write to this file instead of standard output");

  // Each command fills `report`; `default_format` says how it prints when
  // --output-format is absent.
  Report report;
  OutputFormat default_format = OutputFormat::Csv;
  std::function<void()> action;

  // --- schemes / curves -----------------------------------------------------
  struct SchemeOpts {
    double na = 0.6;
    std::string collection = "quadratic";
    double p_good = kShelvingGood;
    double p_bad = kShelvingBad;
    std::string scheme = "d-shelving";
    double step = 0.01;
    std::string model_path;
  };
  auto sopts = std::make_shared<SchemeOpts>();
  auto add_scheme_common = [&](CLI::App* sub) {
    sub->add_option("--collection", sopts->collection, "quadratic (NA^2/4) or exact solid angle")
        ->check(CLI::IsMember({"quadratic", "exact"}))
        ->capture_default_str();
    sub->add_option("--p-good", sopts->p_good, "Shelving scheme good-branch probability")->capture_default_str();
    sub->add_option("--p-bad", sopts->p_bad, "Shelving scheme bad-branch probability")->capture_default_str();
    sub->add_option("--model", sopts->model_path, "Branching model file for the pulsed schemes");
  };
  auto scheme_specs = [sopts] {
    const BranchingModel model =
        sopts->model_path.empty() ? default_barium_model() : load_branching_model(sopts->model_path);
    return std::vector<SchemeSpec>{d_shelving_scheme(sopts->p_good, sopts->p_bad), weak_scheme(model),
                                   strong_scheme(model)};
  };

  auto* schemes = app.add_subcommand("schemes", "Compare the three excitation schemes at one NA");
  schemes->add_option("--na", sopts->na, "Collection numerical aperture")->capture_default_str();
  add_scheme_common(schemes);
  schemes->callback([&, sopts] {
    action = [&, sopts] {
      const auto model = detail::parse_collection(sopts->collection);
      const auto rows = scheme_table(sopts->na, scheme_specs(), model);
      report.columns = {"scheme", "pe_ps", "p_na", "f_na"};
      for (const auto& r : rows)
        report.rows.push_back({std::string(to_string(r.spec.name)), r.spec.pe_ps(), r.probability, r.fidelity});
      if (std::abs(sopts->na - 0.6) < 1e-12) {
        const auto specs = scheme_specs();
        const auto exact = scheme_table(0.6, specs, CollectionModel::ExactSolidAngle);
        const auto quad = scheme_table(0.6, specs, CollectionModel::Quadratic);
        report.notes.push_back("published reference P at NA=0.6: weak 0.014, strong 0.068; quadratic model gives " +
                               format_number(quad[1].probability) + " and " + format_number(quad[2].probability) +
                               ", exact solid angle gives " + format_number(exact[1].probability) + " and " +
                               format_number(exact[2].probability));
      }
      report.notes.push_back("collection model: " + sopts->collection);
    };
  });

  auto add_curve = [&](const std::string& name, const std::string& column, bool fidelity_curve) {
    auto* sub = app.add_subcommand(name, fidelity_curve ? "Fidelity versus NA" : "Entanglement probability versus NA");
    sub->add_option("--scheme", sopts->scheme, "d-shelving, weak or strong")
        ->check(CLI::IsMember({"d-shelving", "weak", "strong"}))
        ->capture_default_str();
    sub->add_option("--step", sopts->step, "NA grid step")->capture_default_str();
    add_scheme_common(sub);
    sub->callback([&, sopts, column, fidelity_curve] {
      action = [&, sopts, column, fidelity_curve] {
        const auto specs = scheme_specs();
        const auto idx = sopts->scheme == "d-shelving" ? 0 : sopts->scheme == "weak" ? 1 : 2;
        const auto& spec = specs[static_cast<std::size_t>(idx)];
        const auto model = detail::parse_collection(sopts->collection);
        report.columns = {"na", column};
        for (double na : detail::grid(1.0, sopts->step, "NA"))
          report.rows.push_back({na, fidelity_curve ? fidelity_vs_na(spec.f_max, na, model)
                                                    : entanglement_probability(spec, na, model)});
      };
    });
  };
  add_curve("fidelity-curve", "fidelity", true);
  add_curve("prob-curve", "probability", false);

  // --- chain ----------------------------------------------------------------
  struct ChainOpts {
    std::string model_path;
    std::optional<double> br_493;
    std::string initial = "+3/2";
    std::string drive = "sigma-";
    int max_cycles = 1000;
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 1;
    unsigned threads = 1;
  };
  auto copts = std::make_shared<ChainOpts>();
  auto* chain = app.add_subcommand("chain", "Re-excitation chain: exact absorbing-chain solve or Monte Carlo");
  chain->require_subcommand(1);
  auto chain_config = [copts] {
    BranchingModel model =
        copts->model_path.empty() ? default_barium_model() : load_branching_model(copts->model_path);
    if (copts->br_493) model = BranchingModel(*copts->br_493, 1.0 - *copts->br_493, model.table());
    PumpCycleConfig cfg{{Level::D32, ionlink::detail::parse_two_mj(copts->initial)},
                        detail::parse_polarization(copts->drive), std::move(model), copts->max_cycles};
    cfg.validate();
    return cfg;
  };
  auto add_chain_common = [&](CLI::App* sub) {
    sub->add_option("--model", copts->model_path, "Branching model file");
    sub->add_option("--br493", copts->br_493, "Override the P1/2 -> S1/2 branching ratio");
    sub->add_option("--initial-mj", copts->initial, "Initial D3/2 sublevel")->capture_default_str();
    sub->add_option("--drive", copts->drive, "650 nm drive polarization")
        ->check(CLI::IsMember({"sigma-", "pi", "sigma+"}))
        ->capture_default_str();
    sub->add_option("--max-cycles", copts->max_cycles, "Excitation cutoff (Monte Carlo)")->capture_default_str();
  };
  auto* exact = chain->add_subcommand("exact", "Exact absorption probabilities");
  add_chain_common(exact);
  exact->callback([&, copts] {
    action = [&, copts] {
      const auto o = solve_exact(chain_config());
      default_format = OutputFormat::Json;
      report.record = true;
      report.columns = {"p_good", "p_bad", "p_dark"};
      report.rows.push_back({o.p_good, o.p_bad, o.p_dark});
    };
  });
  auto* mc = chain->add_subcommand("mc", "Monte Carlo trajectories");
  add_chain_common(mc);
  mc->add_option("--trials", copts->trials, "Number of trajectories")->capture_default_str();
  mc->add_option("--seed", copts->seed, "64-bit seed")->capture_default_str();
  mc->add_option("--threads", copts->threads, "Worker threads (result does not depend on it)")->capture_default_str();
  mc->callback([&, copts] {
    action = [&, copts] {
      const auto o = simulate(chain_config(), copts->trials, copts->seed, copts->threads);
      default_format = OutputFormat::Json;
      report.record = true;
      report.columns = {"p_good", "p_bad", "p_dark", "se_good", "se_bad", "se_dark", "n_trials", "seed"};
      report.rows.push_back({o.p_good, o.p_bad, o.p_dark, o.se_good, o.se_bad, o.se_dark,
                             copts->trials, copts->seed});
    };
  });

  // --- trap -----------------------------------------------------------------
  struct TrapOpts {
    double v0 = 0, freq_mhz = 0, r_um = 0, eta = 0;
    double mass_amu = 137.905;  // 138Ba+
    double charge_e = 1.0;
  };
  auto topts = std::make_shared<TrapOpts>();
  auto* trap = app.add_subcommand("trap", "Linear Paul trap secular frequency");
  trap->add_option("--v0", topts->v0, "RF amplitude [V]")->required();
  trap->add_option("--freq-mhz", topts->freq_mhz, "RF frequency Omega/2pi [MHz]")->required();
  trap->add_option("--r-um", topts->r_um, "Ion-electrode distance [um]")->required();
  trap->add_option("--eta", topts->eta, "Geometric efficiency factor")->required();
  trap->add_option("--mass-amu", topts->mass_amu, "Ion mass [u]")->capture_default_str();
  trap->add_option("--charge-e", topts->charge_e, "Ion charge [e]")->capture_default_str();
  trap->callback([&, topts] {
    action = [&, topts] {
      auto cfg = TrapConfig::from_lab_units(topts->v0, topts->freq_mhz, topts->r_um, topts->eta, topts->mass_amu);
      cfg.charge = topts->charge_e * constants::kElementaryCharge;
      const double omega = secular_frequency(cfg);
      default_format = OutputFormat::Json;
      report.record = true;
      report.columns = {"omega_s_rad_s", "f_s_mhz", "depth_note"};
      report.rows.push_back({omega, omega / (2.0 * std::numbers::pi) / 1e6,
                             std::string("radial pseudopotential only; trap depth and stability are not computed")});
    };
  });

  // --- qfc ------------------------------------------------------------------
  struct QfcOpts {
    double input_nm = 0, pump_nm = 0;
    std::string kind = "dfg";
    std::string material = "ppln";
    std::string dispersion_path;
    int order = 1;
    double efficiency = 1.0;
    double srs_threshold = kDefaultSrsThresholdThz;
  };
  auto qopts = std::make_shared<QfcOpts>();
  auto* qfc = app.add_subcommand("qfc", "Frequency conversion planning");
  qfc->require_subcommand(1);
  auto* plan = qfc->add_subcommand("plan", "Plan one conversion stage");
  plan->add_option("--input-nm", qopts->input_nm, "Input wavelength [nm]")->required();
  plan->add_option("--pump-nm", qopts->pump_nm, "Pump wavelength [nm]")->required();
  plan->add_option("--kind", qopts->kind, "dfg or sfg")->check(CLI::IsMember({"dfg", "sfg"}))->capture_default_str();
  plan->add_option("--material", qopts->material, "ppln (n_e) or ppktp (n_z)")->capture_default_str();
  plan->add_option("--dispersion", qopts->dispersion_path, "Dispersion data file (overrides --material)");
  plan->add_option("--order", qopts->order, "Odd poling order m")->capture_default_str();
  plan->add_option("--efficiency", qopts->efficiency, "Stage efficiency")->capture_default_str();
  plan->add_option("--srs-threshold-thz", qopts->srs_threshold, "Minimum output-pump detuning")->capture_default_str();
  plan->callback([&, qopts] {
    action = [&, qopts] {
      const auto dispersion = qopts->dispersion_path.empty() ? builtin_dispersion(parse_material(qopts->material))
                                                             : load_dispersion_model(qopts->dispersion_path);
      const ConversionStage stage(LightField::from_wavelength_nm(qopts->input_nm, FieldRole::Input),
                                  LightField::from_wavelength_nm(qopts->pump_nm, FieldRole::Pump),
                                  parse_mixing_kind(qopts->kind), qopts->efficiency, qopts->order);
      const double period = solve_poling_period(stage, dispersion);
      std::vector<std::string> kinds;
      for (const auto& f : noise_audit(stage, qopts->srs_threshold)) {
        kinds.emplace_back(to_string(f.kind));
        report.notes.push_back(std::string(to_string(f.kind)) + ": " + f.detail);
      }
      default_format = OutputFormat::Json;
      report.record = true;
      report.columns = {"output_nm", "output_thz", "poling_period_um", "noise_findings"};
      report.rows.push_back(
          {stage.output().wavelength_nm(), stage.output().frequency_thz(), period, std::move(kinds)});
      report.notes.push_back("poling period from " + dispersion.name() + " dispersion data " + dispersion.version() +
                             " at " + format_number(dispersion.temperature_k()) + " K");
    };
  });
  auto* table2 = qfc->add_subcommand("table2", "Reference Ba+ conversion stages");
  table2->callback([&] {
    action = [&] {
      report.columns = {"conversion", "input_thz", "output_thz", "pump_thz", "device", "output_nm", "poling_period_um"};
      for (const auto& row : reference_conversions()) {
        const ConversionStage stage(LightField::from_wavelength_nm(row.input_nm, FieldRole::Input),
                                    LightField::from_wavelength_nm(row.pump_nm, FieldRole::Pump), MixingKind::DFG,
                                    1.0);
        report.rows.push_back({row.label, stage.input().frequency_thz(), stage.output().frequency_thz(),
                               stage.pump().frequency_thz(), std::string(to_string(row.device)),
                               stage.output().wavelength_nm(),
                               solve_poling_period(stage, builtin_dispersion(row.device))});
      }
      report.notes.push_back("poling periods are first-order design values from the built-in dispersion data " +
                             std::string(kDispersionDataVersion) + ", not measured device values");
    };
  });

  // --- fiber ----------------------------------------------------------------
  struct FiberOpts {
    double max_km = 2.0, step_km = 0.01;
    double eff_780 = 0.05, eff_1259 = 0.05, eff_1550 = 0.18;
    detail::FiberSpec raw{493.0, std::nullopt};
    detail::FiberSpec converted{780.0, std::nullopt};
    double efficiency = 0.05;
    double source = 0.085, rep_rate = 1e6, length_km = 0.0, detector = 1.0;
    double photon_nm = 493.0;
    std::optional<double> fiber_nm;
    std::optional<double> fiber_db;
    std::vector<std::string> stages;
  };
  auto fopts = std::make_shared<FiberOpts>();
  auto* fiber = app.add_subcommand("fiber", "Fiber transmission and link budgets");
  fiber->require_subcommand(1);
  auto* curves = fiber->add_subcommand("curves", "Transmission versus length at the reference wavelengths");
  curves->add_option("--max-km", fopts->max_km, "Longest length")->capture_default_str();
  curves->add_option("--step-km", fopts->step_km, "Length step")->capture_default_str();
  curves->add_option("--eff-780", fopts->eff_780, "493 -> 780 nm conversion efficiency")->capture_default_str();
  curves->add_option("--eff-1259", fopts->eff_1259, "650 -> 1259 nm conversion efficiency")->capture_default_str();
  curves->add_option("--eff-1550", fopts->eff_1550, "780 -> 1550 nm conversion efficiency")->capture_default_str();
  curves->callback([&, fopts] {
    action = [&, fopts] {
      for (double eff : {fopts->eff_780, fopts->eff_1259, fopts->eff_1550})
        if (!(eff >= 0.0 && eff <= 1.0)) throw DomainError("conversion efficiencies must lie in [0, 1]");
      const FiberChannel f493{493, 50}, f650{650, 15}, f780{780, 3.5}, f1259{1259, 0.3}, f1550{1550, 0.18};
      report.columns = {"length_km",
                        "t_493",
                        "t_780_" + detail::efficiency_tag(fopts->eff_780),
                        "t_650",
                        "t_1259_" + detail::efficiency_tag(fopts->eff_1259),
                        "t_1550_" + detail::efficiency_tag(fopts->eff_1550)};
      for (double km : detail::grid(fopts->max_km, fopts->step_km, "length"))
        report.rows.push_back({km, transmission(f493, km), fopts->eff_780 * transmission(f780, km),
                               transmission(f650, km), fopts->eff_1259 * transmission(f1259, km),
                               fopts->eff_1550 * transmission(f1550, km)});
    };
  });
  auto* crossing = fiber->add_subcommand("crossing", "Length beyond which conversion pays off");
  crossing->add_option("--raw-nm", fopts->raw.nm, "Unconverted wavelength")->capture_default_str();
  crossing->add_option("--raw-db", fopts->raw.db, "Unconverted fiber loss [dB/km]");
  crossing->add_option("--converted-nm", fopts->converted.nm, "Converted wavelength")->capture_default_str();
  crossing->add_option("--converted-db", fopts->converted.db, "Converted fiber loss [dB/km]");
  crossing->add_option("--efficiency", fopts->efficiency, "Conversion efficiency")->capture_default_str();
  crossing->callback([&, fopts] {
    action = [&, fopts] {
      const auto raw = detail::resolve_fiber(fopts->raw, "raw");
      const auto conv = detail::resolve_fiber(fopts->converted, "converted");
      default_format = OutputFormat::Json;
      report.record = true;
      report.columns = {"crossing_km", "raw_db_per_km", "converted_db_per_km", "efficiency"};
      report.rows.push_back({conversion_crossing(raw, conv, fopts->efficiency), raw.attenuation_db_per_km,
                             conv.attenuation_db_per_km, fopts->efficiency});
    };
  });
  auto* budget = fiber->add_subcommand("budget", "End-to-end detected entanglement rate");
  budget->add_option("--source", fopts->source, "Entanglement probability per attempt")->capture_default_str();
  budget->add_option("--rep-rate-hz", fopts->rep_rate, "Attempt rate [Hz]")->capture_default_str();
  budget->add_option("--photon-nm", fopts->photon_nm, "Emitted photon wavelength")->capture_default_str();
  budget->add_option("--stage", fopts->stages, "Conversion stage <input_nm>:<pump_nm>:<efficiency> (repeatable)");
  budget->add_option("--fiber-nm", fopts->fiber_nm, "Fiber wavelength (default: final photon wavelength)");
  budget->add_option("--fiber-db", fopts->fiber_db, "Fiber loss [dB/km] (default: reference table)");
  budget->add_option("--length-km", fopts->length_km, "Fiber length")->capture_default_str();
  budget->add_option("--detector", fopts->detector, "Detector efficiency")->capture_default_str();
  budget->callback([&, fopts] {
    action = [&, fopts] {
      std::vector<ConversionStage> stages;
      for (const auto& s : fopts->stages) stages.push_back(detail::parse_stage(s));
      if (!stages.empty() && std::abs(stages.front().input().wavelength_nm() - fopts->photon_nm) > kChainWavelengthTolerance)
        throw ChainError("first stage input does not match the emitted photon wavelength");
      const double final_nm = stages.empty() ? fopts->photon_nm : stages.back().output().wavelength_nm();
      const auto channel = detail::resolve_fiber({fopts->fiber_nm.value_or(final_nm), fopts->fiber_db}, "link");
      const LinkBudget b{fopts->source, fopts->rep_rate, stages, channel, fopts->length_km, fopts->detector};
      default_format = OutputFormat::Json;
      report.record = true;
      report.columns = {"rate_hz", "chain_efficiency", "transmission", "fiber_nm", "fiber_db_per_km"};
      report.rows.push_back({end_to_end_rate(b), chain_efficiency(stages), transmission(channel, fopts->length_km),
                             channel.wavelength_nm, channel.attenuation_db_per_km});
    };
  });

  // --- emission -------------------------------------------------------------
  struct EmissionOpts {
    int theta_steps = 37;
    int phi_steps = 1;
  };
  auto eopts = std::make_shared<EmissionOpts>();
  auto* emission = app.add_subcommand("emission", "Dipole emission patterns");
  emission->require_subcommand(1);
  auto* pattern = emission->add_subcommand("pattern", "Intensities and pi/sigma overlap on an angular grid");
  pattern->add_option("--theta-steps", eopts->theta_steps, "Grid points in theta over [0, pi]")->capture_default_str();
  pattern->add_option("--phi-steps", eopts->phi_steps, "Grid points in phi over [0, 2pi)")->capture_default_str();
  pattern->callback([&, eopts] {
    action = [&, eopts] {
      if (eopts->theta_steps < 2 || eopts->phi_steps < 1) throw DomainError("need theta-steps >= 2 and phi-steps >= 1");
      report.columns = {"theta", "phi", "i_pi", "i_sigma_plus", "i_sigma_minus", "overlap_abs"};
      for (int i = 0; i < eopts->theta_steps; ++i) {
        const double theta = i == eopts->theta_steps - 1 ? std::numbers::pi
                                                         : std::numbers::pi * i / (eopts->theta_steps - 1);
        for (int j = 0; j < eopts->phi_steps; ++j) {
          const EmissionDirection dir(theta, 2.0 * std::numbers::pi * j / eopts->phi_steps);
          report.rows.push_back({dir.theta(), dir.phi(), pi_emission(dir).intensity(),
                                 sigma_emission(dir, +1).intensity(), sigma_emission(dir, -1).intensity(),
                                 std::abs(polarization_overlap(dir, +1))});
        }
      }
    };
  });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    action();
    OutputFormat fmt = default_format;
    if (format_flag == "csv") fmt = OutputFormat::Csv;
    if (format_flag == "json") fmt = OutputFormat::Json;
    if (output_path.empty()) {
      write_report(out, report, fmt);
    } else {
      std::ofstream file(output_path);
      if (!file) throw DomainError("cannot open output file " + output_path);
      write_report(file, report, fmt);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace ionlink::cli

#endif
