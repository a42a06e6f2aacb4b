#include "tlt/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tlt::ham {

using num::complex;

FockSpace::FockSpace(int cutoff_, circuit::ModeZeroPoint zpf_) : cutoff(cutoff_), zpf(zpf_) {
  if (cutoff < 2) throw std::invalid_argument("FockSpace: cutoff must be >= 2 (got " + std::to_string(cutoff) + ")");
}

SubsystemLayout SubsystemLayout::make(const circuit::EnergyScales& scales, int transmon_cutoff, int resonator_cutoff) {
  const auto zpf = circuit::zero_point_amplitudes(scales);
  return {FockSpace(transmon_cutoff, zpf.transmon), FockSpace(resonator_cutoff, zpf.resonator)};
}

HermitianOperator SubsystemLayout::embed(const std::optional<HermitianOperator>& op_q,
                                         const std::optional<HermitianOperator>& op_r,
                                         const std::optional<HermitianOperator>& op_m) const {
  auto pick = [](const std::optional<HermitianOperator>& op, std::size_t dim, const char* name) {
    if (!op) return ComplexMatrix::identity(dim);
    if (op->dim() != dim) {
      throw std::invalid_argument(std::string("SubsystemLayout::embed: ") + name + " factor has dimension " +
                                  std::to_string(op->dim()) + ", layout expects " + std::to_string(dim));
    }
    return op->matrix();
  };
  const auto q = pick(op_q, transmon.dim(), "transmon");
  const auto r = pick(op_r, resonator.dim(), "resonator");
  const auto m = pick(op_m, majorana_dim, "majorana");
  return HermitianOperator(num::kron(num::kron(q, r), m));
}

HermitianOperator SubsystemLayout::parity() const {
  return embed(std::nullopt, std::nullopt, majorana::algebra().parity);
}

std::string_view to_string(PotentialMode mode) {
  switch (mode) {
    case PotentialMode::quartic_ejq: return "quartic_ejq";
    case PotentialMode::quartic_ejstar: return "quartic_ejstar";
    case PotentialMode::full_cosine: return "full_cosine";
    case PotentialMode::harmonic: return "harmonic";
  }
  return "quartic_ejq";
}

PotentialMode potential_mode_from_string(std::string_view name) {
  if (name == "quartic_ejq") return PotentialMode::quartic_ejq;
  if (name == "quartic_ejstar") return PotentialMode::quartic_ejstar;
  if (name == "full_cosine") return PotentialMode::full_cosine;
  if (name == "harmonic") return PotentialMode::harmonic;
  throw std::invalid_argument("potential_mode: unknown mode '" + std::string(name) +
                              "' (quartic_ejq|quartic_ejstar|full_cosine|harmonic)");
}

ComplexMatrix ladder(const FockSpace& space) {
  const std::size_t dim = space.dim();
  ComplexMatrix a(dim, dim);
  for (std::size_t n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

Quadratures quadratures(const FockSpace& space) {
  const auto a = ladder(space);
  const auto ad = a.adjoint();
  return {HermitianOperator((ad + a) * complex(space.zpf.phi)),
          HermitianOperator((ad - a) * complex(0.0, space.zpf.n))};
}

namespace {

HermitianOperator square(const HermitianOperator& h) { return HermitianOperator(h.matrix() * h.matrix()); }

}  // namespace

HermitianOperator transmon_h(const circuit::EnergyScales& s, const FockSpace& space, PotentialMode mode) {
  const auto [phi, n] = quadratures(space);
  const auto phi2 = square(phi);
  auto h = 4.0 * s.E_Cq * square(n);
  switch (mode) {
    case PotentialMode::quartic_ejq:
      h += 0.5 * s.E_Jq_star * phi2 - (s.E_Jq_tuned / 24.0) * square(phi2);
      break;
    case PotentialMode::quartic_ejstar:
      h += 0.5 * s.E_Jq_star * phi2 - (s.E_Jq_star / 24.0) * square(phi2);
      break;
    case PotentialMode::full_cosine:
      h += 0.5 * (s.E_Jq_star - s.E_Jq_tuned) * phi2 -
           s.E_Jq_tuned * num::operator_function(phi, [](double x) { return std::cos(x); });
      break;
    case PotentialMode::harmonic:
      h += 0.5 * s.E_Jq_star * phi2;
      break;
  }
  return h;
}

HermitianOperator resonator_h(const circuit::EnergyScales& s, const FockSpace& space, ResonatorForm form) {
  if (form == ResonatorForm::number) {
    const auto a = ladder(space);
    return HermitianOperator((a.adjoint() * a) * complex(s.omega_r));
  }
  const auto [phi, n] = quadratures(space);
  return 4.0 * s.E_Cr * square(n) + 0.5 * s.E_Lr * square(phi) -
         0.5 * s.omega_r * HermitianOperator::identity(space.dim());
}

HermitianOperator longitudinal_h(const circuit::EnergyScales& s, const SubsystemLayout& layout) {
  const double k = static_cast<double>(s.junction_count);
  const auto phi_q = quadratures(layout.transmon).phi;
  const auto phi_r = quadratures(layout.resonator).phi;
  return (-s.E_J / (8.0 * k * k)) * layout.embed(square(phi_q), phi_r, std::nullopt);
}

ChargeCoupling charge_coupling_h(const majorana::MajoranaConfig& cfg, const circuit::EnergyScales& s,
                                 const SubsystemLayout& layout, const ChargeCouplingPrefactors& prefactors) {
  const auto occ = majorana::island_occupations(cfg);
  const auto n_q = quadratures(layout.transmon).n;
  const auto n_r = quadratures(layout.resonator).n;
  return {(prefactors.resonator * s.E_Cr) * layout.embed(std::nullopt, n_r, occ.m_r),
          (prefactors.transmon * s.E_Cq) * layout.embed(n_q, std::nullopt, occ.m_q)};
}

HermitianOperator cos_half_phase(const FockSpace& space) {
  return num::operator_function(quadratures(space).phi, [](double x) { return std::cos(0.5 * x); });
}

HermitianOperator fje_h(const majorana::MajoranaConfig& cfg, const circuit::EnergyScales& s,
                        const SubsystemLayout& layout) {
  if (majorana::is_charge_config(cfg.label)) {
    throw std::invalid_argument(std::string("fje_h: configuration ") + majorana::to_char(cfg.label) +
                                " is not phase-coupled (C-F required)");
  }
  auto pairs = HermitianOperator::zero(4);
  for (const auto& b : cfg.bilinears) {
    if (!(b.overlap >= 0.0 && b.overlap <= 1.0)) throw std::invalid_argument("fje_h: overlap outside [0, 1]");
    pairs += b.overlap * majorana::bilinear(majorana::algebra(), b.i, b.j);
  }
  return s.gap * layout.embed(cos_half_phase(layout.transmon), std::nullopt, pairs);
}

Assembly Assembly::all(const majorana::MajoranaConfig& cfg) {
  Assembly a;
  a.transmon = a.resonator = a.longitudinal = true;
  const bool charge = majorana::is_charge_config(cfg.label);
  a.majorana_charging = charge;
  a.charge_coupling = charge;
  a.fje = !charge;
  a.config = cfg;
  return a;
}

HermitianOperator full_h(const SubsystemLayout& layout, const circuit::EnergyScales& s, const Assembly& parts) {
  auto h = HermitianOperator::zero(layout.total_dim());
  auto need_config = [&](const char* what) -> const majorana::MajoranaConfig& {
    if (!parts.config) throw std::invalid_argument(std::string("full_h: ") + what + " requires a Majorana configuration");
    return *parts.config;
  };
  if (parts.transmon) h += layout.embed(transmon_h(s, layout.transmon, parts.mode), std::nullopt, std::nullopt);
  if (parts.resonator) h += layout.embed(std::nullopt, resonator_h(s, layout.resonator, parts.resonator_form), std::nullopt);
  if (parts.longitudinal) h += longitudinal_h(s, layout);
  if (parts.majorana_charging) {
    h += layout.embed(std::nullopt, std::nullopt,
                      majorana::majorana_charging(need_config("majorana_charging"), s, parts.offsets));
  }
  if (parts.charge_coupling) h += charge_coupling_h(need_config("charge_coupling"), s, layout, parts.prefactors).total();
  if (parts.fje) h += fje_h(need_config("fje"), s, layout);
  return h;
}

}  // namespace tlt::ham
