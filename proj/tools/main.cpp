// qdiss - command-line front end. Talks to the library only through qdiss.h.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdiss/qdiss.h"
#include "svg.hpp"
#include "table.hpp"

namespace {

using qcli::Format;
using qcli::Table;

enum Exit { kOk = 0, kUsage = 1, kVerifyFailed = 2, kIo = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(qdiss_status s) {
  if (s != QDISS_OK) throw UsageError(qdiss_last_error());
}

using Bath = std::unique_ptr<qdiss_bath, decltype(&qdiss_bath_free)>;
using System = std::unique_ptr<qdiss_system, decltype(&qdiss_system_free)>;
using Dos = std::unique_ptr<qdiss_dos, decltype(&qdiss_dos_free)>;

struct Options {
  std::string wd = "10";
  double t_min = 0.01;
  double t_max = 10.0;
  double e_max = 5.0;
  int points = 200;
  double box = 1.0;
  std::string format = "csv";
  std::string out;
  bool linear = false;
  std::string method = "dehoog";
  int nodes = 0;
  bool no_check = false;
  std::string outdir = ".";
  bool svg = false;
};

bool is_ohmic(const std::string& wd) { return wd == "ohmic" || wd == "inf"; }

// gamma = 1 throughout, so omega_d = wd_over_gamma and T = T_over_gamma.
Bath make_bath(const std::string& wd) {
  qdiss_bath* b = nullptr;
  if (is_ohmic(wd)) {
    check(qdiss_bath_ohmic(1.0, &b));
  } else {
    std::size_t used = 0;
    double ratio = 0.0;
    try {
      ratio = std::stod(wd, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != wd.size() || !(ratio > 0.0) || !std::isfinite(ratio)) {
      throw UsageError("--wd-over-gamma must be a positive number or \"ohmic\", got \"" + wd + "\"");
    }
    check(qdiss_bath_drude(1.0, ratio, &b));
  }
  return Bath(b, qdiss_bath_free);
}

System make_system(double box) {
  qdiss_system* s = nullptr;
  check(qdiss_system_free_particle(box, &s));
  return System(s, qdiss_system_free);
}

void refuse_ohmic(const Options& o, const std::string& what) {
  if (!is_ohmic(o.wd)) return;
  throw UsageError(what +
                   " needs a finite Drude cutoff: for a strict-ohmic bath the partition function, and with it "
                   "U, C_Z and S, diverges logarithmically with the cutoff frequency. Only the energy-route "
                   "specific heat C_E (subcommand ce) has a strict-ohmic limit.");
}

std::vector<double> temperatures(const Options& o) {
  if (!(o.t_min > 0.0) || !(o.t_max > o.t_min)) throw UsageError("need 0 < --t-min < --t-max");
  std::vector<double> t(o.points);
  for (int i = 0; i < o.points; ++i) {
    const double f = static_cast<double>(i) / (o.points - 1);
    t[i] = o.linear ? o.t_min + f * (o.t_max - o.t_min) : o.t_min * std::pow(o.t_max / o.t_min, f);
  }
  t.back() = o.t_max;
  return t;
}

// (0, e_max], the delta at e = 0 is reported separately
std::vector<double> energies(double e_max, int points) {
  if (!(e_max > 0.0) || !std::isfinite(e_max)) throw UsageError("--e-max must be positive");
  std::vector<double> e(points);
  for (int i = 0; i < points; ++i) e[i] = e_max * (i + 1) / points;
  return e;
}

void common_meta(Table& t, const std::string& sub, const Options& o) {
  t.meta("qdiss", qdiss_version());
  t.meta("subcommand", sub);
  t.meta("wd_over_gamma", is_ohmic(o.wd) ? std::string("ohmic") : qcli::number(std::stod(o.wd)));
  t.meta("units", sub == "dos" ? "hbar = k_B = M = gamma = 1; energies in hbar omega_D"
                                 : "hbar = k_B = M = gamma = 1; temperatures are k_B T / (hbar gamma), heat "
                                   "capacities and entropy in k_B");
}

using Scalar = std::function<double(double)>;

Table thermal_table(const std::string& sub, const Options& o, const std::vector<std::string>& cols,
                    const std::vector<Scalar>& fs) {
  Table t;
  common_meta(t, sub, o);
  t.meta("box_ratio", o.box);
  t.meta("grid", o.linear ? "linear" : "log");
  t.columns = cols;
  for (double T : temperatures(o)) {
    std::vector<double> row{T};
    for (const auto& f : fs) row.push_back(f(T));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Scalar ce_of(const qdiss_bath* b) {
  return [b](double T) {
    double v;
    check(qdiss_heat_ce(b, T, &v));
    return v;
  };
}

Scalar cz_of(const qdiss_bath* b) {
  return [b](double T) {
    double v;
    check(qdiss_heat_cz(b, T, &v));
    return v;
  };
}

Scalar asymptotic_of(const qdiss_bath* b, qdiss_asymptotic which) {
  return [b, which](double T) {
    double v;
    check(qdiss_asymptotic_value(b, T, which, &v));
    return v;
  };
}

qdiss_inversion_config inversion(const Options& o) {
  qdiss_inversion_config c;
  qdiss_inversion_config_default(&c);
  if (o.method == "stehfest") {
    c.method = QDISS_GAVER_STEHFEST;
    c.nodes = 14;
    c.check_nodes = 48;
  } else if (o.method != "dehoog") {
    throw UsageError("--method must be dehoog or stehfest");
  }
  if (o.nodes != 0) c.nodes = o.nodes;
  c.cross_check = o.no_check ? 0 : 1;
  return c;
}

Table dos_table(const Options& o) {
  refuse_ohmic(o, "dos");
  const auto bath = make_bath(o.wd);
  const auto sys = make_system(o.box);
  const auto grid = energies(o.e_max, o.points);
  const auto cfg = inversion(o);
  qdiss_dos* raw = nullptr;
  check(qdiss_dos_invert(sys.get(), bath.get(), grid.data(), grid.size(), &cfg, &raw));
  const Dos dos(raw, qdiss_dos_free);

  Table t;
  common_meta(t, "dos", o);
  t.meta("box_ratio", o.box);
  t.meta("rho", "omega_D * rho(E), continuous part; e = (E - U0) / (hbar omega_D)");
  t.meta("u0_over_wd", qdiss_dos_u0(dos.get()) / std::stod(o.wd));
  t.meta("delta_weight", qdiss_dos_delta_weight(dos.get()));
  t.meta("method", o.method + " " + std::to_string(cfg.nodes));
  const std::size_t negative = qdiss_dos_negative_interval_count(dos.get());
  t.meta("negative_intervals", std::to_string(negative));
  for (std::size_t i = 0; i < negative; ++i) {
    double lo, hi;
    check(qdiss_dos_negative_interval(dos.get(), i, &lo, &hi));
    t.meta("negative_interval", qcli::number(lo) + " " + qcli::number(hi));
  }

  const double* rho = qdiss_dos_rho(dos.get());
  const double* alt = qdiss_dos_rho_check(dos.get());
  const unsigned char* flag = qdiss_dos_unreliable(dos.get());
  t.columns = {"e_minus_u0_over_wd", "rho"};
  if (alt) t.columns.insert(t.columns.end(), {"rho_check", "unreliable"});
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<double> row{grid[i], rho[i]};
    if (alt) row.insert(row.end(), {alt[i], static_cast<double>(flag[i])});
    t.rows.push_back(std::move(row));
  }
  return t;
}

Format parse_format(const std::string& f) {
  if (f == "csv") return Format::Csv;
  if (f == "json") return Format::Json;
  throw UsageError("--format must be csv or json");
}

void emit(const Table& t, const Options& o) {
  const Format f = parse_format(o.format);
  if (o.out.empty() || o.out == "-") {
    qcli::write(std::cout, t, f);
    std::cout.flush();
    if (!std::cout) throw IoError("cannot write to stdout");
    return;
  }
  std::ofstream os(o.out, std::ios::binary);
  if (!os) throw IoError("cannot open " + o.out + " for writing");
  qcli::write(os, t, f);
  os.close();
  if (!os) throw IoError("write to " + o.out + " failed");
}

void write_file(const std::filesystem::path& p, const std::string& content) {
  std::ofstream os(p, std::ios::binary);
  if (!os) throw IoError("cannot open " + p.string() + " for writing");
  os << content;
  os.close();
  if (!os) throw IoError("write to " + p.string() + " failed");
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
  v.back() = hi;
  return v;
}

const std::vector<std::pair<std::string, double>> kFigureRatios = {{"0.2", 0.2}, {"1", 1.0}, {"5", 5.0}};

Table figure2() {
  Table t;
  t.meta("qdiss", qdiss_version());
  t.meta("figure", "energy-route specific heat C_E / k_B against k_B T / (hbar gamma)");
  t.columns = {"T_over_gamma"};
  std::vector<Bath> baths;
  for (const auto& [name, r] : kFigureRatios) {
    baths.push_back(make_bath(name));
    t.columns.push_back("ce_wd" + name);
  }
  baths.push_back(make_bath("ohmic"));
  t.columns.push_back("ce_ohmic");
  for (double T : log_grid(0.01, 10.0, 200)) {
    std::vector<double> row{T};
    for (const auto& b : baths) row.push_back(ce_of(b.get())(T));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table figure3() {
  Table t;
  t.meta("qdiss", qdiss_version());
  t.meta("figure", "partition-function specific heat C_Z / k_B against k_B T / (hbar gamma)");
  t.columns = {"T_over_gamma"};
  std::vector<Bath> baths;
  for (const auto& [name, r] : kFigureRatios) {
    baths.push_back(make_bath(name));
    t.columns.push_back("cz_wd" + name);
  }
  for (double T : log_grid(0.001, 1.0, 200)) {
    std::vector<double> row{T};
    for (const auto& b : baths) row.push_back(cz_of(b.get())(T));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table figure4() {
  Table t;
  t.meta("qdiss", qdiss_version());
  t.meta("figure", "omega_D rho(E) against e = (E - U0) / (hbar omega_D), box ratio 1");
  const auto grid = energies(6.0, 300);
  const auto sys = make_system(1.0);
  qdiss_inversion_config cfg;
  qdiss_inversion_config_default(&cfg);
  cfg.cross_check = 0;
  std::vector<const double*> curves;
  std::vector<Dos> keep;
  t.columns = {"e_minus_u0_over_wd"};
  for (const auto& [name, r] : kFigureRatios) {
    const auto bath = make_bath(name);
    qdiss_dos* raw = nullptr;
    check(qdiss_dos_invert(sys.get(), bath.get(), grid.data(), grid.size(), &cfg, &raw));
    keep.emplace_back(raw, qdiss_dos_free);
    curves.push_back(qdiss_dos_rho(raw));
    t.columns.push_back("rho_wd" + name);
    t.meta("delta_weight_wd" + name, qdiss_dos_delta_weight(raw));
  }
  t.columns.push_back("rho_undamped");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<double> row{grid[i]};
    for (const double* c : curves) row.push_back(c[i]);
    row.push_back(1.0 / std::sqrt(grid[i]));
    t.rows.push_back(std::move(row));
  }
  return t;
}

void figures(const Options& o) {
  namespace fs = std::filesystem;
  const fs::path dir(o.outdir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw IoError("cannot use output directory " + o.outdir);
  struct Fig {
    const char* name;
    Table table;
    const char* title;
    bool log_x;
  };
  const Fig figs[] = {{"fig2", figure2(), "C_E / k_B", true},
                      {"fig3", figure3(), "C_Z / k_B", true},
                      {"fig4", figure4(), "omega_D rho", false}};
  for (const auto& f : figs) {
    std::ostringstream csv;
    qcli::write_csv(csv, f.table);
    write_file(dir / (std::string(f.name) + ".csv"), csv.str());
    if (o.svg) {
      std::ostringstream svg;
      qcli::write_svg(svg, f.table, f.title, f.log_x);
      write_file(dir / (std::string(f.name) + ".svg"), svg.str());
    }
    std::cout << (dir / (std::string(f.name) + ".csv")).string() << '\n';
  }
}

int verify() {
  int failures = 0;
  const auto report = [](const char* name, double worst, double tol, int passed, void*) {
    std::printf("%s  %s  worst=%.3g  tol=%.3g\n", passed ? "PASS" : "FAIL", name, worst, tol);
  };
  check(qdiss_verify(report, nullptr, &failures));
  std::printf("%d check(s) failed\n", failures);
  return failures == 0 ? kOk : kVerifyFailed;
}

void add_bath(CLI::App* c, Options& o) {
  c->add_option("--wd-over-gamma", o.wd, "Drude cutoff omega_D / gamma, or \"ohmic\"")->capture_default_str();
}

void add_output(CLI::App* c, Options& o) {
  c->add_option("--format", o.format, "csv or json")->capture_default_str();
  c->add_option("--out", o.out, "output file (default stdout)");
}

void add_points(CLI::App* c, Options& o) {
  c->add_option("--points", o.points, "grid points")->check(CLI::Range(2, 100000))->capture_default_str();
}

void add_temperatures(CLI::App* c, Options& o) {
  add_bath(c, o);
  c->add_option("--t-min", o.t_min, "lowest T / gamma")->capture_default_str();
  c->add_option("--t-max", o.t_max, "highest T / gamma")->capture_default_str();
  add_points(c, o);
  c->add_flag("--linear", o.linear, "linear instead of log-spaced temperatures");
  add_output(c, o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermodynamics and density of states of a free particle in a Drude bath"};
  app.require_subcommand(1);
  Options o;

  auto* ce = app.add_subcommand("ce", "energy-route specific heat C_E");
  add_temperatures(ce, o);
  auto* cz = app.add_subcommand("cz", "partition-function specific heat C_Z");
  add_temperatures(cz, o);
  auto* both = app.add_subcommand("both", "C_E and C_Z side by side");
  add_temperatures(both, o);
  auto* ent = app.add_subcommand("entropy", "entropy S / k_B");
  add_temperatures(ent, o);
  ent->add_option("--box-ratio", o.box, "box length over the thermal length at T = omega_D")->capture_default_str();
  auto* asym = app.add_subcommand("asymptotics", "C_E and C_Z with their high- and low-T series");
  add_temperatures(asym, o);
  auto* dos = app.add_subcommand("dos", "density of states by numerical Laplace inversion");
  add_bath(dos, o);
  dos->add_option("--e-max", o.e_max, "largest (E - U0) / omega_D")->capture_default_str();
  add_points(dos, o);
  dos->add_option("--box-ratio", o.box, "box length over the thermal length at T = omega_D")->capture_default_str();
  dos->add_option("--method", o.method, "dehoog or stehfest")->capture_default_str();
  dos->add_option("--nodes", o.nodes, "de Hoog terms or Stehfest order");
  dos->add_flag("--no-check", o.no_check, "skip the cross-check inversion");
  add_output(dos, o);
  auto* ver = app.add_subcommand("verify", "run the cross-check suite");
  auto* fig = app.add_subcommand("figures", "write fig2.csv, fig3.csv and fig4.csv");
  fig->add_option("--outdir", o.outdir, "output directory")->capture_default_str();
  fig->add_flag("--svg", o.svg, "also write SVG line plots");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*ce) {
      const auto b = make_bath(o.wd);
      emit(thermal_table("ce", o, {"T_over_gamma", "value_in_kB"}, {ce_of(b.get())}), o);
    } else if (*cz) {
      refuse_ohmic(o, "cz");
      const auto b = make_bath(o.wd);
      emit(thermal_table("cz", o, {"T_over_gamma", "value_in_kB"}, {cz_of(b.get())}), o);
    } else if (*both) {
      refuse_ohmic(o, "both");
      const auto b = make_bath(o.wd);
      emit(thermal_table("both", o, {"T_over_gamma", "ce_in_kB", "cz_in_kB"}, {ce_of(b.get()), cz_of(b.get())}),
           o);
    } else if (*ent) {
      refuse_ohmic(o, "entropy");
      const auto b = make_bath(o.wd);
      const auto s = make_system(o.box);
      const Scalar f = [&](double T) {
        double v;
        check(qdiss_entropy(s.get(), b.get(), T, &v));
        return v;
      };
      emit(thermal_table("entropy", o, {"T_over_gamma", "value_in_kB"}, {f}), o);
    } else if (*asym) {
      refuse_ohmic(o, "asymptotics");
      const auto b = make_bath(o.wd);
      const qdiss_bath* p = b.get();
      emit(thermal_table("asymptotics", o, {"T_over_gamma", "ce", "ce_high", "ce_low", "cz", "cz_high", "cz_low"},
                         {ce_of(p), asymptotic_of(p, QDISS_CE_HIGH), asymptotic_of(p, QDISS_CE_LOW), cz_of(p),
                          asymptotic_of(p, QDISS_CZ_HIGH), asymptotic_of(p, QDISS_CZ_LOW)}),
           o);
    } else if (*dos) {
      emit(dos_table(o), o);
    } else if (*ver) {
      return verify();
    } else if (*fig) {
      figures(o);
    }
  } catch (const UsageError& e) {
    std::cerr << "qdiss: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "qdiss: " << e.what() << '\n';
    return kIo;
  }
  return kOk;
}
