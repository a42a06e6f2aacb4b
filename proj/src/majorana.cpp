#include "tlt/majorana.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tlt::majorana {

using num::complex;
using num::Pauli;

MajoranaAlgebra build_algebra() {
  const auto& i2 = num::pauli_matrix(Pauli::I);
  const auto& x = num::pauli_matrix(Pauli::X);
  const auto& y = num::pauli_matrix(Pauli::Y);
  const auto& z = num::pauli_matrix(Pauli::Z);

  MajoranaAlgebra alg{
      {HermitianOperator(num::kron(x, i2)), HermitianOperator(num::kron(y, i2) * complex(-1.0)),
       HermitianOperator(num::kron(z, x)), HermitianOperator(num::kron(z, y) * complex(-1.0))},
      HermitianOperator::zero(4)};
  alg.parity = HermitianOperator((bilinear(alg, 1, 2).matrix() * bilinear(alg, 3, 4).matrix()));
  return alg;
}

const MajoranaAlgebra& algebra() {
  static const MajoranaAlgebra alg = build_algebra();
  return alg;
}

int sign(Parity p) { return static_cast<int>(p); }

Parity parity_from_sign(int s) {
  if (s == 1) return Parity::even;
  if (s == -1) return Parity::odd;
  throw std::invalid_argument("parity sign must be +1 or -1");
}

ParitySector parity_sector(Parity p) {
  ComplexMatrix basis(4, 2);
  if (p == Parity::even) {
    basis(0, 0) = 1.0;  // |00>
    basis(3, 1) = 1.0;  // |11>
  } else {
    basis(1, 0) = 1.0;  // |01>
    basis(2, 1) = 1.0;  // |10>
  }
  return {p, basis};
}

HermitianOperator project(const HermitianOperator& op, const ParitySector& sector) {
  if (op.dim() != 4) throw std::invalid_argument("majorana::project: operator must be 4x4");
  return num::project(op, sector.basis);
}

double sector_splitting(const HermitianOperator& op, const ParitySector& sector) {
  const auto eig = num::eigh(project(op, sector));
  return eig.eigenvalues.back() - eig.eigenvalues.front();
}

HermitianOperator bilinear(const MajoranaAlgebra& alg, int i, int j) {
  if (i < 1 || i > 4 || j < 1 || j > 4) throw std::invalid_argument("bilinear: Majorana index out of range 1..4");
  if (i == j) throw std::invalid_argument("bilinear: indices must differ");
  const auto& gi = alg.gammas[static_cast<std::size_t>(i - 1)].matrix();
  const auto& gj = alg.gammas[static_cast<std::size_t>(j - 1)].matrix();
  return HermitianOperator((gi * gj) * complex(0.0, 1.0));
}

char to_char(ConfigLabel label) { return static_cast<char>('A' + static_cast<int>(label)); }

ConfigLabel config_from_char(char c) {
  if (c < 'A' || c > 'F') throw std::invalid_argument(std::string("unknown configuration label '") + c + "'");
  return static_cast<ConfigLabel>(c - 'A');
}

bool is_charge_config(ConfigLabel label) { return label == ConfigLabel::A || label == ConfigLabel::B; }

MajoranaConfig MajoranaConfig::make(ConfigLabel label) {
  switch (label) {
    case ConfigLabel::A: return {label, std::array{Island::a, Island::a, Island::a, Island::a}, {}};
    case ConfigLabel::B: return {label, std::array{Island::a, Island::a, Island::b, Island::b}, {}};
    case ConfigLabel::C: return {label, std::nullopt, {{2, 3, 1.0}}};
    case ConfigLabel::D: return {label, std::nullopt, {{2, 3, 1.0}, {1, 4, 1.0}}};
    case ConfigLabel::E: return {label, std::nullopt, {{1, 3, 1.0}}};
    case ConfigLabel::F: return {label, std::nullopt, {{1, 3, 1.0}, {2, 4, 1.0}}};
  }
  throw std::invalid_argument("MajoranaConfig::make: bad label");
}

MajoranaConfig MajoranaConfig::with_overlaps(ConfigLabel label, const std::vector<double>& alphas) {
  auto cfg = make(label);
  if (is_charge_config(label)) throw std::invalid_argument("overlaps apply to configurations C-F only");
  if (alphas.size() != cfg.bilinears.size()) {
    throw std::invalid_argument("configuration " + std::string(1, to_char(label)) + " expects " +
                                std::to_string(cfg.bilinears.size()) + " overlap value(s)");
  }
  for (std::size_t k = 0; k < alphas.size(); ++k) {
    if (!(alphas[k] >= 0.0 && alphas[k] <= 1.0)) throw std::invalid_argument("overlap alpha must lie in [0, 1]");
    cfg.bilinears[k].overlap = alphas[k];
  }
  return cfg;
}

IslandOccupations island_occupations(const MajoranaConfig& cfg, const MajoranaAlgebra& alg) {
  if (!is_charge_config(cfg.label) || !cfg.islands) {
    throw std::invalid_argument(std::string("island_occupations: configuration ") + to_char(cfg.label) +
                                " is not charge-coupled (A or B required)");
  }
  const auto& islands = *cfg.islands;
  auto occupation = [&](Island which) {
    // Pairs (1,2) and (3,4) each form one fermion; a pair contributes when
    // both of its Majoranas sit on the island.
    auto m = HermitianOperator::zero(4);
    const auto id = HermitianOperator::identity(4);
    for (int first : {1, 3}) {
      const auto i0 = static_cast<std::size_t>(first - 1);
      if (islands[i0] == which && islands[i0 + 1] == which) m += 0.5 * (id + bilinear(alg, first, first + 1));
    }
    return m;
  };
  const auto m_a = occupation(Island::a);
  const auto m_b = occupation(Island::b);
  return {0.5 * (m_a - m_b), 0.5 * (m_a + m_b)};
}

ChargingTerms majorana_charging_terms(const MajoranaConfig& cfg, const circuit::EnergyScales& scales,
                                      const ChargeOffsets& offsets, const MajoranaAlgebra& alg) {
  const auto occ = island_occupations(cfg, alg);
  const auto id = HermitianOperator::identity(4);
  auto squared = [](const HermitianOperator& h) { return HermitianOperator(h.matrix() * h.matrix()); };
  const auto shifted_r = occ.m_r - offsets.resonator() * id;
  const auto shifted_q = occ.m_q - offsets.transmon() * id;
  return {4.0 * scales.E_Cr * squared(shifted_r), 4.0 * scales.E_Cq * squared(shifted_q)};
}

HermitianOperator majorana_charging(const MajoranaConfig& cfg, const circuit::EnergyScales& scales,
                                    const ChargeOffsets& offsets, const MajoranaAlgebra& alg) {
  return majorana_charging_terms(cfg, scales, offsets, alg).total();
}

std::vector<DegeneracyPoint> degeneracy_scan(const MajoranaConfig& cfg, const circuit::EnergyScales& scales,
                                             Parity parity, const std::vector<double>& ng_a_values, double ng_b) {
  if (ng_a_values.empty()) throw std::invalid_argument("degeneracy_scan: empty offset range");
  const auto sector = parity_sector(parity);
  std::vector<DegeneracyPoint> out;
  out.reserve(ng_a_values.size());
  for (double ng_a : ng_a_values) {
    const auto h = majorana_charging(cfg, scales, {ng_a, ng_b});
    out.push_back({ng_a, sector_splitting(h, sector)});
  }
  return out;
}

}  // namespace tlt::majorana
