#include "qdiss/qdiss.h"

#include <new>
#include <optional>
#include <stdexcept>
#include <string>

#include "qdiss/dos.hpp"
#include "qdiss/thermo.hpp"
#include "qdiss/verify.hpp"

struct qdiss_bath {
  qdiss::BathSpec spec;
};

struct qdiss_system {
  qdiss::SystemSpec spec;
};

struct qdiss_dos {
  qdiss::SpectralDensityResult result;
  qdiss::PositivityReport positivity;
};

namespace {

thread_local std::string last_error;

qdiss_status fail(qdiss_status s, const char* what) {
  last_error = what;
  return s;
}

template <class F>
qdiss_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return QDISS_OK;
  } catch (const std::domain_error& e) {
    return fail(QDISS_DOMAIN_ERROR, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(QDISS_INVALID_ARGUMENT, e.what());
  } catch (const std::logic_error& e) {
    return fail(QDISS_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(QDISS_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(QDISS_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(QDISS_INTERNAL_ERROR, "unknown error");
  }
}

template <class... P>
bool any_null(const P*... p) {
  return ((p == nullptr) || ...);
}

#define QDISS_REQUIRE(...) \
  if (any_null(__VA_ARGS__)) return fail(QDISS_NULL_POINTER, "null pointer argument")

qdiss::InversionConfig to_cpp(const qdiss_inversion_config& c) {
  qdiss::InversionConfig out;
  out.method = c.method == QDISS_GAVER_STEHFEST ? qdiss::InversionMethod::GaverStehfest
                                                : qdiss::InversionMethod::DeHoog;
  out.nodes = c.nodes;
  out.shift = c.shift != 0;
  out.cross_check = c.cross_check != 0;
  out.check_nodes = c.check_nodes;
  return out;
}

}  // namespace

extern "C" {

const char* qdiss_version(void) { return "0.3.0"; }

const char* qdiss_last_error(void) { return last_error.c_str(); }

qdiss_status qdiss_bath_drude(double gamma, double omega_d, qdiss_bath** out) {
  QDISS_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new qdiss_bath{qdiss::BathSpec::drude(gamma, omega_d)}; });
}

qdiss_status qdiss_bath_ohmic(double gamma, qdiss_bath** out) {
  QDISS_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new qdiss_bath{qdiss::BathSpec::ohmic(gamma)}; });
}

void qdiss_bath_free(qdiss_bath* bath) { delete bath; }

qdiss_status qdiss_system_free_particle(double box_ratio, qdiss_system** out) {
  QDISS_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new qdiss_system{qdiss::SystemSpec::free_particle(box_ratio)}; });
}

qdiss_status qdiss_system_oscillator(double omega0, qdiss_system** out) {
  QDISS_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new qdiss_system{qdiss::SystemSpec::oscillator(omega0)}; });
}

void qdiss_system_free(qdiss_system* system) { delete system; }

qdiss_status qdiss_energy_e(const qdiss_bath* bath, double beta, double* out) {
  QDISS_REQUIRE(bath, out);
  return guarded([&] { *out = qdiss::energy_E(bath->spec, beta); });
}

qdiss_status qdiss_heat_ce(const qdiss_bath* bath, double T, double* out) {
  QDISS_REQUIRE(bath, out);
  return guarded([&] { *out = qdiss::heat_ce(bath->spec, T); });
}

qdiss_status qdiss_internal_u(const qdiss_bath* bath, double beta, double* out) {
  QDISS_REQUIRE(bath, out);
  return guarded([&] { *out = qdiss::internal_U(bath->spec, beta); });
}

qdiss_status qdiss_heat_cz(const qdiss_bath* bath, double T, double* out) {
  QDISS_REQUIRE(bath, out);
  return guarded([&] { *out = qdiss::heat_cz(bath->spec, T); });
}

qdiss_status qdiss_log_partition(const qdiss_system* system, const qdiss_bath* bath, double beta, double* out) {
  QDISS_REQUIRE(system, bath, out);
  return guarded([&] { *out = qdiss::log_partition(system->spec, bath->spec, beta); });
}

qdiss_status qdiss_entropy(const qdiss_system* system, const qdiss_bath* bath, double T, double* out) {
  QDISS_REQUIRE(system, bath, out);
  return guarded([&] { *out = qdiss::entropy(system->spec, bath->spec, T); });
}

qdiss_status qdiss_thermo(const qdiss_system* system, const qdiss_bath* bath, double T, qdiss_thermo_point* out) {
  QDISS_REQUIRE(system, bath, out);
  return guarded([&] {
    const auto p = qdiss::thermo_point(system->spec, bath->spec, T);
    *out = {p.T, p.E, p.U, p.C_E, p.C_Z, p.S, p.F, p.lnZ};
  });
}

qdiss_status qdiss_asymptotic_value(const qdiss_bath* bath, double T, qdiss_asymptotic which, double* out) {
  QDISS_REQUIRE(bath, out);
  qdiss::Asymptotic w;
  switch (which) {
    case QDISS_CE_HIGH: w = qdiss::Asymptotic::CEHigh; break;
    case QDISS_CE_LOW: w = qdiss::Asymptotic::CELow; break;
    case QDISS_CZ_HIGH: w = qdiss::Asymptotic::CZHigh; break;
    case QDISS_CZ_LOW: w = qdiss::Asymptotic::CZLow; break;
    default: return fail(QDISS_INVALID_ARGUMENT, "unknown asymptotic series");
  }
  return guarded([&] { *out = qdiss::asymptotics(bath->spec, T, w); });
}

qdiss_status qdiss_ground_energy(const qdiss_bath* bath, double* out) {
  QDISS_REQUIRE(bath, out);
  return guarded([&] { *out = qdiss::ground_energy(bath->spec); });
}

qdiss_status qdiss_delta_weight(const qdiss_system* system, const qdiss_bath* bath, double* out) {
  QDISS_REQUIRE(system, bath, out);
  return guarded([&] { *out = qdiss::delta_weight(system->spec, bath->spec); });
}

qdiss_status qdiss_shifted_partition(const qdiss_system* system, const qdiss_bath* bath, double beta, double* out) {
  QDISS_REQUIRE(system, bath, out);
  return guarded([&] { *out = qdiss::shifted_partition(system->spec, bath->spec, beta); });
}

qdiss_status qdiss_undamped_dos(const qdiss_system* system, const qdiss_bath* bath, double E, double* out) {
  QDISS_REQUIRE(system, bath, out);
  return guarded([&] { *out = qdiss::undamped_dos(system->spec, bath->spec, E); });
}

qdiss_status qdiss_dos_low_energy_series(const qdiss_system* system, const qdiss_bath* bath, double E,
                                         double* out) {
  QDISS_REQUIRE(system, bath, out);
  return guarded([&] { *out = qdiss::dos_low_energy_series(system->spec, bath->spec, E); });
}

void qdiss_inversion_config_default(qdiss_inversion_config* cfg) {
  if (cfg == nullptr) return;
  const qdiss::InversionConfig d;
  cfg->method = QDISS_DE_HOOG;
  cfg->nodes = d.nodes;
  cfg->shift = d.shift ? 1 : 0;
  cfg->cross_check = d.cross_check ? 1 : 0;
  cfg->check_nodes = d.check_nodes;
}

qdiss_status qdiss_dos_invert(const qdiss_system* system, const qdiss_bath* bath, const double* energies, size_t n,
                              const qdiss_inversion_config* cfg, qdiss_dos** out) {
  QDISS_REQUIRE(system, bath, out);
  *out = nullptr;
  if (n > 0 && energies == nullptr) return fail(QDISS_NULL_POINTER, "null energy grid");
  return guarded([&] {
    qdiss_inversion_config c;
    qdiss_inversion_config_default(&c);
    if (cfg != nullptr) c = *cfg;
    auto res = qdiss::invert_dos(system->spec, bath->spec, std::vector<double>(energies, energies + n), to_cpp(c));
    auto report = qdiss::verify_positivity(res);
    *out = new qdiss_dos{std::move(res), std::move(report)};
  });
}

void qdiss_dos_free(qdiss_dos* dos) { delete dos; }

size_t qdiss_dos_size(const qdiss_dos* dos) { return dos ? dos->result.energies.size() : 0; }

const double* qdiss_dos_energies(const qdiss_dos* dos) { return dos ? dos->result.energies.data() : nullptr; }

const double* qdiss_dos_rho(const qdiss_dos* dos) { return dos ? dos->result.rho.data() : nullptr; }

const double* qdiss_dos_rho_check(const qdiss_dos* dos) {
  if (dos == nullptr || dos->result.rho_check.empty()) return nullptr;
  return dos->result.rho_check.data();
}

const unsigned char* qdiss_dos_unreliable(const qdiss_dos* dos) {
  if (dos == nullptr || dos->result.unreliable.empty()) return nullptr;
  return dos->result.unreliable.data();
}

double qdiss_dos_delta_weight(const qdiss_dos* dos) { return dos ? dos->result.delta_weight : 0.0; }

double qdiss_dos_u0(const qdiss_dos* dos) { return dos ? dos->result.u0 : 0.0; }

size_t qdiss_dos_negative_interval_count(const qdiss_dos* dos) {
  return dos ? dos->positivity.negative_intervals.size() : 0;
}

qdiss_status qdiss_dos_negative_interval(const qdiss_dos* dos, size_t i, double* lo, double* hi) {
  QDISS_REQUIRE(dos, lo, hi);
  if (i >= dos->positivity.negative_intervals.size()) return fail(QDISS_INVALID_ARGUMENT, "interval index out of range");
  *lo = dos->positivity.negative_intervals[i].first;
  *hi = dos->positivity.negative_intervals[i].second;
  return QDISS_OK;
}

qdiss_status qdiss_verify(qdiss_verify_callback cb, void* user, int* failures) {
  QDISS_REQUIRE(failures);
  return guarded([&] {
    int bad = 0;
    for (const auto& c : qdiss::run_verify_suite()) {
      if (!c.passed()) ++bad;
      if (cb) cb(c.name.c_str(), c.worst, c.tolerance, c.passed() ? 1 : 0, user);
    }
    *failures = bad;
  });
}

}  // extern "C"
