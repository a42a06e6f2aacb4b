#pragma once

// Truncated-Fock Hamiltonians on transmon (x) resonator (x) Majorana space.
// Factor order is fixed: transmon, resonator, then the 4-dim Majorana space.

#include <optional>
#include <string_view>

#include "tlt/circuit.hpp"
#include "tlt/majorana.hpp"
#include "tlt/numerics.hpp"

namespace tlt::ham {

using num::ComplexMatrix;
using num::HermitianOperator;

struct FockSpace {
  int cutoff;  // highest retained occupation; dimension cutoff + 1
  circuit::ModeZeroPoint zpf;

  FockSpace(int cutoff, circuit::ModeZeroPoint zpf);
  std::size_t dim() const { return static_cast<std::size_t>(cutoff) + 1; }
};

struct SubsystemLayout {
  FockSpace transmon;
  FockSpace resonator;
  static constexpr std::size_t majorana_dim = 4;

  static SubsystemLayout make(const circuit::EnergyScales& scales, int transmon_cutoff, int resonator_cutoff);
  static SubsystemLayout make(const circuit::EnergyScales& scales, int cutoff) { return make(scales, cutoff, cutoff); }

  std::size_t total_dim() const { return transmon.dim() * resonator.dim() * majorana_dim; }

  /// op_q (x) op_r (x) op_m; empty optionals become identities.
  HermitianOperator embed(const std::optional<HermitianOperator>& op_q, const std::optional<HermitianOperator>& op_r,
                          const std::optional<HermitianOperator>& op_m) const;
  HermitianOperator parity() const;
};

enum class PotentialMode {
  quartic_ejq,     // (E_Jq*/2) phi^2 - (E_Jq/24) phi^4
  quartic_ejstar,  // (E_Jq*/2) phi^2 - (E_Jq*/24) phi^4
  full_cosine,     // ((E_Jq* - E_Jq)/2) phi^2 - E_Jq cos(phi)
  harmonic,        // (E_Jq*/2) phi^2
};

std::string_view to_string(PotentialMode mode);
PotentialMode potential_mode_from_string(std::string_view name);

/// Annihilation operator: sqrt(n) on the first superdiagonal.
ComplexMatrix ladder(const FockSpace& space);

struct Quadratures {
  HermitianOperator phi;  // phi_zpf (a^dagger + a)
  HermitianOperator n;    // n_zpf i (a^dagger - a)
};

Quadratures quadratures(const FockSpace& space);

HermitianOperator transmon_h(const circuit::EnergyScales& scales, const FockSpace& space, PotentialMode mode);

enum class ResonatorForm { quadrature, number };

/// Zero-point energy omega_r/2 removed, so the ground level sits at 0.
HermitianOperator resonator_h(const circuit::EnergyScales& scales, const FockSpace& space,
                              ResonatorForm form = ResonatorForm::quadrature);

/// -(E_J / 8k^2) phi_q^2 (x) phi_r (x) I
HermitianOperator longitudinal_h(const circuit::EnergyScales& scales, const SubsystemLayout& layout);

/// Prefactors c in c E_Cr N_r m_r and c E_Cq N_q m_q. The defaults reproduce
/// the tabulated 0.7726 / 0.4727 GHz couplings; the direct charge substitution
/// N -> N + m gives 8 for both.
struct ChargeCouplingPrefactors {
  double resonator = 4.0;
  double transmon = 4.0;
};

struct ChargeCoupling {
  HermitianOperator resonator;  // H_r,gamma
  HermitianOperator transmon;   // H_q,gamma
  HermitianOperator total() const { return resonator + transmon; }
};

ChargeCoupling charge_coupling_h(const majorana::MajoranaConfig& cfg, const circuit::EnergyScales& scales,
                                 const SubsystemLayout& layout, const ChargeCouplingPrefactors& prefactors = {});

/// cos(phi_q / 2) on the transmon factor.
HermitianOperator cos_half_phase(const FockSpace& space);

/// Delta * sum alpha_ij (i g_i g_j) (x) cos(phi_q/2), identity on the resonator.
HermitianOperator fje_h(const majorana::MajoranaConfig& cfg, const circuit::EnergyScales& scales,
                        const SubsystemLayout& layout);

struct Assembly {
  bool transmon = false;
  bool resonator = false;
  bool longitudinal = false;
  bool majorana_charging = false;
  bool charge_coupling = false;
  bool fje = false;

  PotentialMode mode = PotentialMode::quartic_ejq;
  ResonatorForm resonator_form = ResonatorForm::quadrature;
  std::optional<majorana::MajoranaConfig> config;
  majorana::ChargeOffsets offsets{};
  ChargeCouplingPrefactors prefactors{};

  static Assembly all(const majorana::MajoranaConfig& cfg);
};

/// Sum of the selected terms, added in declaration order of Assembly.
HermitianOperator full_h(const SubsystemLayout& layout, const circuit::EnergyScales& scales, const Assembly& parts);

}  // namespace tlt::ham
