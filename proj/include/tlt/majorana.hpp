#pragma once

// Four Majorana operators on the two-fermion Fock space {|00>,|01>,|10>,|11>},
// parity sectors, and the static configurations A-F.

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "tlt/circuit.hpp"
#include "tlt/numerics.hpp"

namespace tlt::majorana {

using num::ComplexMatrix;
using num::HermitianOperator;

struct MajoranaAlgebra {
  std::array<HermitianOperator, 4> gammas;  // gamma_1 .. gamma_4 (index 0..3)
  HermitianOperator parity;                 // (i g1 g2)(i g3 g4)
};

/// gamma_1 = X(x)I, gamma_2 = -Y(x)I, gamma_3 = Z(x)X, gamma_4 = -Z(x)Y.
/// Projected into either parity sector: i g1 g2 -> Z, i g1 g3 -> Y, i g2 g3 -> X.
MajoranaAlgebra build_algebra();

/// Shared immutable instance.
const MajoranaAlgebra& algebra();

enum class Parity : int { even = +1, odd = -1 };

int sign(Parity p);
Parity parity_from_sign(int s);

struct ParitySector {
  Parity parity;
  ComplexMatrix basis;  // 4x2 isometry; even (|00>,|11>), odd (|01>,|10>)
};

ParitySector parity_sector(Parity p);

/// 2x2 restriction of a 4x4 operator to the sector.
HermitianOperator project(const HermitianOperator& op, const ParitySector& sector);

/// max - min eigenvalue of the sector restriction.
double sector_splitting(const HermitianOperator& op, const ParitySector& sector);

/// i gamma_i gamma_j with 1-based indices; throws when i == j or out of range.
HermitianOperator bilinear(const MajoranaAlgebra& alg, int i, int j);

enum class ConfigLabel { A, B, C, D, E, F };

char to_char(ConfigLabel label);
ConfigLabel config_from_char(char c);
bool is_charge_config(ConfigLabel label);

enum class Island { a, b };

struct Bilinear {
  int i;
  int j;
  double overlap;  // alpha_ij in [0, 1]
};

struct MajoranaConfig {
  ConfigLabel label;
  std::optional<std::array<Island, 4>> islands;  // A, B
  std::vector<Bilinear> bilinears;               // C-F

  /// Standard geometry for a label; phase-coupled configurations get
  /// alpha_ij = 1 on every active pair.
  static MajoranaConfig make(ConfigLabel label);
  /// Phase-coupled configuration with explicit overlaps (one per active
  /// bilinear, in the order of make(label).bilinears).
  static MajoranaConfig with_overlaps(ConfigLabel label, const std::vector<double>& alphas);
};

struct IslandOccupations {
  HermitianOperator m_q;  // (m_a - m_b) / 2
  HermitianOperator m_r;  // (m_a + m_b) / 2
};

IslandOccupations island_occupations(const MajoranaConfig& cfg, const MajoranaAlgebra& alg = algebra());

struct ChargeOffsets {
  double a = 0.0;
  double b = 0.0;

  double resonator() const { return a + b; }
  double transmon() const { return a - b; }
};

struct ChargingTerms {
  HermitianOperator resonator;  // 4 E_Cr (m_r - n_g^(r))^2
  HermitianOperator transmon;   // 4 E_Cq (m_q - n_g^(q))^2
  HermitianOperator total() const { return resonator + transmon; }
};

ChargingTerms majorana_charging_terms(const MajoranaConfig& cfg, const circuit::EnergyScales& scales,
                                      const ChargeOffsets& offsets, const MajoranaAlgebra& alg = algebra());

HermitianOperator majorana_charging(const MajoranaConfig& cfg, const circuit::EnergyScales& scales,
                                    const ChargeOffsets& offsets, const MajoranaAlgebra& alg = algebra());

struct DegeneracyPoint {
  double ng_a;
  double splitting;  // GHz
};

std::vector<DegeneracyPoint> degeneracy_scan(const MajoranaConfig& cfg, const circuit::EnergyScales& scales,
                                             Parity parity, const std::vector<double>& ng_a_values,
                                             double ng_b = 0.0);

}  // namespace tlt::majorana
