#pragma once

// Circuit parameters -> energy scales. All energies are E/h in GHz.
//
// Conventions:
//   E_Cq = e^2 / (h C_sigma), C_sigma = 2 C_q + C
//   E_Cr = e^2 / (h C)
//   E_Lr = (Phi0 / 2 pi)^2 / (2 L h)
//   E_Jq* = E_Jq cos(pi Phi_q / Phi0) + E_Lr
//   omega_q = sqrt(8 E_Cq E_Jq*), omega_r = sqrt(8 E_Cr E_Lr), delta = -E_Cq / 2

#include <string>
#include <string_view>
#include <vector>

namespace tlt::circuit {

enum class ConstantsPreset {
  four_digit,  // e = 1.602e-19 C, h = 6.626e-34 J s
  si_exact,    // 2019 SI defining values
};

std::string_view to_string(ConstantsPreset preset);
ConstantsPreset constants_preset_from_string(std::string_view name);

struct PhysicalConstants {
  double electron_charge;  // C
  double planck;           // J s

  static PhysicalConstants from(ConstantsPreset preset);
  double flux_quantum() const { return planck / (2.0 * electron_charge); }
  /// micro-electronvolts -> GHz (E/h)
  double microelectronvolt_to_ghz(double uev) const;
};

enum class GapUnit { ghz, microelectronvolt };

struct Gap {
  double value = 100.0;
  GapUnit unit = GapUnit::microelectronvolt;

  double to_ghz(const PhysicalConstants& k) const;
};

/// Fabrication-level inputs. Defaults are the reference device
/// (L = 4.5 nH, C = 114 fF, C_q = 70 fF, E_J = E_Jq = 10 GHz, k = 1,
/// Delta = 100 ueV).
struct CircuitParams {
  double inductance_nH = 4.5;
  double capacitance_fF = 114.0;
  double qubit_capacitance_fF = 70.0;
  double ej_GHz = 10.0;   // longitudinal-coupler junction
  double ejq_GHz = 10.0;  // transmon split junction (untuned)
  int junction_count = 1;
  Gap gap{};
  double flux_q = 0.0;    // Phi_q / Phi0
  double ng_a = 0.0;
  double ng_b = 0.0;
  ConstantsPreset constants = ConstantsPreset::four_digit;

  /// Throws std::invalid_argument naming the first offending field.
  void validate() const;
};

struct EnergyScales {
  double E_Cq;
  double E_Cr;
  double E_Lr;
  double E_Jq_star;
  double omega_q;
  double omega_r;
  double anharmonicity;  // delta
  double E_Jq_tuned;
  double gap;            // Delta
  double E_J;
  int junction_count;
};

double charging_energy(double capacitance_fF, const PhysicalConstants& k);
double inductive_energy(double inductance_nH, const PhysicalConstants& k);
double flux_tuned_ejq(double ejq_GHz, double flux_q);

EnergyScales derive_scales(const CircuitParams& p);

struct ModeZeroPoint {
  double phi;  // phi = phi_zpf (a^dagger + a)
  double n;    // N = n_zpf i (a^dagger - a);  phi * n == 1/2
};

struct ZeroPointAmplitudes {
  ModeZeroPoint transmon;
  ModeZeroPoint resonator;
};

ZeroPointAmplitudes zero_point_amplitudes(const EnergyScales& scales);

/// Notes explaining the label and inductive-energy conventions above; echoed
/// by the CLI alongside every scales report.
std::vector<std::string> reconciliation_notes();

}  // namespace tlt::circuit
