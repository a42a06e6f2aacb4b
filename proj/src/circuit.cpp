#include "tlt/circuit.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace tlt::circuit {

std::string_view to_string(ConstantsPreset preset) {
  switch (preset) {
    case ConstantsPreset::four_digit: return "four_digit";
    case ConstantsPreset::si_exact: return "si_exact";
  }
  return "four_digit";
}

ConstantsPreset constants_preset_from_string(std::string_view name) {
  if (name == "four_digit") return ConstantsPreset::four_digit;
  if (name == "si_exact") return ConstantsPreset::si_exact;
  throw std::invalid_argument("constants: unknown preset '" + std::string(name) + "' (four_digit|si_exact)");
}

PhysicalConstants PhysicalConstants::from(ConstantsPreset preset) {
  switch (preset) {
    case ConstantsPreset::four_digit: return {1.602e-19, 6.626e-34};
    case ConstantsPreset::si_exact: return {1.602176634e-19, 6.62607015e-34};
  }
  return {1.602e-19, 6.626e-34};
}

double PhysicalConstants::microelectronvolt_to_ghz(double uev) const {
  return uev * 1e-6 * electron_charge / planck / 1e9;
}

double Gap::to_ghz(const PhysicalConstants& k) const {
  return unit == GapUnit::ghz ? value : k.microelectronvolt_to_ghz(value);
}

void CircuitParams::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      std::ostringstream os;
      os << name << " must be positive (got " << v << ")";
      throw std::invalid_argument(os.str());
    }
  };
  auto finite = [](double v, const char* name) {
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(name) + " must be finite");
  };
  positive(inductance_nH, "inductance_nH");
  positive(capacitance_fF, "capacitance_fF");
  positive(qubit_capacitance_fF, "qubit_capacitance_fF");
  positive(ej_GHz, "ej_GHz");
  positive(ejq_GHz, "ejq_GHz");
  positive(gap.value, "gap");
  if (junction_count < 1) throw std::invalid_argument("junction_count must be >= 1");
  finite(flux_q, "flux_q");
  finite(ng_a, "ng_a");
  finite(ng_b, "ng_b");
}

double charging_energy(double capacitance_fF, const PhysicalConstants& k) {
  if (!(capacitance_fF > 0.0)) throw std::invalid_argument("charging_energy: capacitance must be positive");
  return k.electron_charge * k.electron_charge / (k.planck * capacitance_fF * 1e-15) / 1e9;
}

double inductive_energy(double inductance_nH, const PhysicalConstants& k) {
  if (!(inductance_nH > 0.0)) throw std::invalid_argument("inductive_energy: inductance must be positive");
  const double reduced_flux = k.flux_quantum() / (2.0 * std::numbers::pi);
  return reduced_flux * reduced_flux / (2.0 * inductance_nH * 1e-9) / k.planck / 1e9;
}

double flux_tuned_ejq(double ejq_GHz, double flux_q) { return ejq_GHz * std::cos(std::numbers::pi * flux_q); }

EnergyScales derive_scales(const CircuitParams& p) {
  p.validate();
  const auto k = PhysicalConstants::from(p.constants);

  EnergyScales s{};
  s.E_Cq = charging_energy(2.0 * p.qubit_capacitance_fF + p.capacitance_fF, k);
  s.E_Cr = charging_energy(p.capacitance_fF, k);
  s.E_Lr = inductive_energy(p.inductance_nH, k);
  s.E_Jq_tuned = flux_tuned_ejq(p.ejq_GHz, p.flux_q);
  s.E_Jq_star = s.E_Jq_tuned + s.E_Lr;
  if (!(s.E_Jq_star > 0.0)) {
    std::ostringstream os;
    os << "derive_scales: E_Jq* = " << s.E_Jq_star << " GHz is not positive at flux_q = " << p.flux_q
       << " (transmon description invalid)";
    throw std::invalid_argument(os.str());
  }
  s.omega_q = std::sqrt(8.0 * s.E_Cq * s.E_Jq_star);
  s.omega_r = std::sqrt(8.0 * s.E_Cr * s.E_Lr);
  s.anharmonicity = -s.E_Cq / 2.0;
  s.gap = p.gap.to_ghz(k);
  s.E_J = p.ej_GHz;
  s.junction_count = p.junction_count;
  return s;
}

ZeroPointAmplitudes zero_point_amplitudes(const EnergyScales& s) {
  if (!(s.E_Cq > 0.0 && s.E_Jq_star > 0.0 && s.E_Cr > 0.0 && s.E_Lr > 0.0)) {
    throw std::invalid_argument("zero_point_amplitudes: energy scales must be positive");
  }
  auto mode = [](double charging, double inductive) {
    const double phi = std::pow(2.0 * charging / inductive, 0.25);
    return ModeZeroPoint{phi, 0.5 / phi};
  };
  return {mode(s.E_Cq, s.E_Jq_star), mode(s.E_Cr, s.E_Lr)};
}

std::vector<std::string> reconciliation_notes() {
  return {
      "charging labels: E_Cq = e^2/(h*C_sigma) with C_sigma = 2*C_q + C, E_Cr = e^2/(h*C); for the reference "
      "device this gives E_Cq = 0.1525 GHz and E_Cr = 0.3398 GHz (tabulations that list these two values under "
      "swapped labels contradict the defining formulas)",
      "inductive convention: E_Lr = (Phi0/2pi)^2/(2*L*h), so E_Jq* = E_Jq + E_Lr; this is the only prefactor "
      "consistent with E_Lr = 18.17 GHz and E_Jq* = 28.17 GHz at L = 4.5 nH (a 1/(4L) prefactor halves E_Lr)",
      "resonator frequency: omega_r = sqrt(8*E_Cr*E_Lr), the exact spacing of 4*E_Cr*N_r^2 + (E_Lr/2)*phi_r^2",
      "constants: four_digit uses e = 1.602e-19 C and h = 6.626e-34 J s; si_exact uses the 2019 SI values",
  };
}

}  // namespace tlt::circuit
