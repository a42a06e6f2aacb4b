#include "tlt/projection.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <utility>

namespace tlt::proj {

using num::complex;

namespace {

constexpr double kMinGap = 1e-6;
constexpr double kDecoupled = 1e-9;
constexpr double kResidualFlag = 1e-4;

std::string format_gap(double gap) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", gap);
  return buf;
}

}  // namespace

DegenerateSubspaceError::DegenerateSubspaceError(const std::string& subsystem, double gap)
    : std::runtime_error(subsystem + ": lowest two levels are degenerate (gap " + format_gap(gap) +
                         " GHz), qubit projection refused"),
      gap_(gap) {}

ComplexMatrix QubitSubspace::pauli(Pauli p) const {
  const std::size_t dim = basis.rows();
  const auto bd = basis.adjoint();
  return basis * num::pauli_matrix(p) * bd + (ComplexMatrix::identity(dim) - basis * bd);
}

QubitSubspace qubit_subspace(const HermitianOperator& h_bare, std::string subsystem) {
  if (h_bare.dim() < 2) throw std::invalid_argument(subsystem + ": need at least two levels");
  const auto eig = num::eigh(h_bare);
  const double gap = eig.eigenvalues[1] - eig.eigenvalues[0];
  if (!(gap > kMinGap)) throw DegenerateSubspaceError(subsystem, gap);
  ComplexMatrix basis(h_bare.dim(), 2);
  for (std::size_t i = 0; i < h_bare.dim(); ++i) {
    basis(i, 0) = eig.eigenvectors(i, 1);
    basis(i, 1) = eig.eigenvectors(i, 0);
  }
  return {std::move(subsystem), std::move(basis), eig.eigenvalues[0], gap};
}

ComplexMatrix qubit_isometry(const ProjectionBasis& basis, const majorana::ParitySector& sector) {
  return num::kron(num::kron(basis.transmon.basis, basis.resonator.basis), sector.basis);
}

HermitianOperator project_to_qubits(const HermitianOperator& h_int, const ProjectionBasis& basis,
                                    const majorana::ParitySector& sector) {
  const auto w = qubit_isometry(basis, sector);
  if (w.rows() != h_int.dim()) {
    throw std::invalid_argument("project_to_qubits: operator dimension " + std::to_string(h_int.dim()) +
                                " does not match projection basis " + std::to_string(w.rows()));
  }
  return num::project(h_int, w);
}

double cross_sector_norm(const HermitianOperator& h_int, const ProjectionBasis& basis) {
  const auto we = qubit_isometry(basis, majorana::parity_sector(Parity::even));
  const auto wo = qubit_isometry(basis, majorana::parity_sector(Parity::odd));
  return (we.adjoint() * (h_int.matrix() * wo)).max_norm();
}

bool in_support(const std::array<Pauli, 3>& l, Support support) {
  if (l[2] == Pauli::I) return false;
  switch (support) {
    case Support::majorana: return l[0] == Pauli::I && l[1] == Pauli::I;
    case Support::transmon_majorana: return l[0] != Pauli::I && l[1] == Pauli::I;
    case Support::resonator_majorana: return l[0] == Pauli::I && l[1] != Pauli::I;
  }
  return false;
}

NumericCoupling numeric_coupling(const HermitianOperator& h_int, const ProjectionBasis& basis,
                                 const majorana::ParitySector& sector, Support support) {
  const auto h8 = project_to_qubits(h_int, basis, sector);
  NumericCoupling out;
  double total = 0.0;
  double best = -1.0;
  for (const auto& term : num::pauli_decomposition(h8)) {
    const std::array<Pauli, 3> labels{term.labels[0], term.labels[1], term.labels[2]};
    if (!in_support(labels, support)) continue;
    const double c = term.coefficient;
    total += c * c;
    if (std::abs(c) > best) {
      best = std::abs(c);
      out.labels = labels;
      out.coefficient = c;
    }
  }
  out.residual_weight = std::max(0.0, total - out.coefficient * out.coefficient);
  out.decoupled = std::abs(out.coefficient) < kDecoupled;
  if (out.decoupled) out.labels = {Pauli::I, Pauli::I, Pauli::I};
  out.flagged = !out.decoupled && out.residual_weight > kResidualFlag * out.coefficient * out.coefficient;
  return out;
}

std::string_view to_string(Term term) {
  switch (term) {
    case Term::majorana_charging: return "H_gamma";
    case Term::resonator_charge: return "H_r_gamma";
    case Term::transmon_charge: return "H_q_gamma";
    case Term::phase: return "H_fje";
  }
  return "";
}

Support support_of(Term term) {
  switch (term) {
    case Term::majorana_charging: return Support::majorana;
    case Term::resonator_charge: return Support::resonator_majorana;
    case Term::transmon_charge:
    case Term::phase: return Support::transmon_majorana;
  }
  return Support::majorana;
}

std::string_view to_string(Convention c) { return c == Convention::splitting ? "splitting" : "coefficient"; }

Convention convention_of(Term term) {
  return term == Term::majorana_charging ? Convention::splitting : Convention::coefficient;
}

const std::vector<Cell>& table_cells(int table_id) {
  using C = ConfigLabel;
  using P = Parity;
  static const std::vector<Cell> t1{{C::A, P::even, Term::majorana_charging},
                                    {C::A, P::even, Term::resonator_charge},
                                    {C::A, P::even, Term::transmon_charge}};
  static const std::vector<Cell> t2{{C::B, P::even, Term::majorana_charging},
                                    {C::B, P::even, Term::resonator_charge},
                                    {C::B, P::odd, Term::transmon_charge}};
  static const std::vector<Cell> t3{{C::C, P::even, Term::phase}, {C::C, P::odd, Term::phase},
                                    {C::D, P::even, Term::phase}, {C::E, P::even, Term::phase},
                                    {C::E, P::odd, Term::phase},  {C::F, P::odd, Term::phase}};
  switch (table_id) {
    case 1: return t1;
    case 2: return t2;
    case 3: return t3;
    default: throw std::invalid_argument("unknown table id " + std::to_string(table_id) + " (expected 1, 2 or 3)");
  }
}

namespace {

void check_cell(const Cell& cell) {
  const bool charge = majorana::is_charge_config(cell.config);
  if (charge == (cell.term == Term::phase)) {
    throw std::invalid_argument(std::string("unknown row: term ") + std::string(to_string(cell.term)) +
                                " does not exist in configuration " + majorana::to_char(cell.config));
  }
}

}  // namespace

double analytic_coupling(const Cell& cell, const circuit::EnergyScales& s) {
  check_cell(cell);
  const bool even = cell.parity == Parity::even;
  const double g_r = std::pow(s.E_Lr * s.E_Cr * s.E_Cr * s.E_Cr / 2.0, 0.25);
  const double g_q = std::pow(s.E_Jq_star * s.E_Cq * s.E_Cq * s.E_Cq / 2.0, 0.25);
  const double single = s.gap * std::sqrt(s.E_Cq / (32.0 * s.E_Jq_star));
  const double pair = s.gap * std::sqrt(s.E_Cq / (8.0 * s.E_Jq_star));
  switch (cell.config) {
    case ConfigLabel::A:
      if (!even) return 0.0;
      switch (cell.term) {
        case Term::majorana_charging: return 4.0 * (s.E_Cr + s.E_Cq);
        case Term::resonator_charge: return g_r;
        default: return g_q;
      }
    case ConfigLabel::B:
      switch (cell.term) {
        case Term::majorana_charging: return even ? 4.0 * s.E_Cr : 0.0;
        case Term::resonator_charge: return even ? g_r : 0.0;
        default: return even ? 0.0 : g_q;
      }
    case ConfigLabel::C:
    case ConfigLabel::E: return single;
    case ConfigLabel::D: return even ? pair : 0.0;
    case ConfigLabel::F: return even ? 0.0 : pair;
  }
  return 0.0;
}

CouplingPipeline::CouplingPipeline(const circuit::EnergyScales& scales, const PipelineOptions& options)
    : scales_(scales), options_(options), layout_(ham::SubsystemLayout::make(scales, options.cutoff)),
      basis_{qubit_subspace(ham::transmon_h(scales, layout_.transmon, options.mode), "transmon"),
             qubit_subspace(ham::resonator_h(scales, layout_.resonator), "resonator")} {}

HermitianOperator CouplingPipeline::interaction(const Cell& cell) const {
  check_cell(cell);
  const auto cfg = majorana::MajoranaConfig::make(cell.config);
  switch (cell.term) {
    case Term::majorana_charging:
      return layout_.embed(std::nullopt, std::nullopt, majorana::majorana_charging(cfg, scales_, options_.offsets));
    case Term::resonator_charge: return ham::charge_coupling_h(cfg, scales_, layout_, options_.prefactors).resonator;
    case Term::transmon_charge: return ham::charge_coupling_h(cfg, scales_, layout_, options_.prefactors).transmon;
    case Term::phase: return ham::fje_h(cfg, scales_, layout_);
  }
  throw std::invalid_argument("CouplingPipeline: bad term");
}

CouplingReport CouplingPipeline::evaluate(const Cell& cell) const {
  const auto nc = numeric_coupling(interaction(cell), basis_, majorana::parity_sector(cell.parity),
                                   support_of(cell.term));
  const auto conv = convention_of(cell.term);
  const double scale = conv == Convention::splitting ? 2.0 : 1.0;
  const double analytic = analytic_coupling(cell, scales_);
  const double numeric = scale * std::abs(nc.coefficient);
  const double ratio = analytic == 0.0 ? std::numeric_limits<double>::quiet_NaN() : numeric / analytic;
  return {cell,   nc.labels, analytic, numeric, scale * nc.coefficient, ratio, conv, nc.residual_weight,
          nc.flagged, nc.decoupled};
}

std::vector<CouplingReport> coupling_table(int table_id, const circuit::EnergyScales& scales,
                                           const PipelineOptions& options) {
  const auto& cells = table_cells(table_id);
  const CouplingPipeline pipeline(scales, options);
  std::vector<CouplingReport> out;
  out.reserve(cells.size());
  for (const auto& c : cells) out.push_back(pipeline.evaluate(c));
  return out;
}

std::vector<CouplingReport> parity_selection_table(const circuit::EnergyScales& scales,
                                                   const PipelineOptions& options) {
  const CouplingPipeline pipeline(scales, options);
  std::vector<CouplingReport> out;
  for (int l = 0; l < 6; ++l) {
    const auto label = static_cast<ConfigLabel>(l);
    for (Parity p : {Parity::even, Parity::odd}) {
      if (majorana::is_charge_config(label)) {
        for (Term t : {Term::majorana_charging, Term::resonator_charge, Term::transmon_charge}) {
          out.push_back(pipeline.evaluate({label, p, t}));
        }
      } else {
        out.push_back(pipeline.evaluate({label, p, Term::phase}));
      }
    }
  }
  return out;
}

ParityProbe ng_parity_probe(const circuit::EnergyScales& scales) {
  const auto cfg = majorana::MajoranaConfig::make(ConfigLabel::A);
  const auto even = majorana::parity_sector(Parity::even);
  const auto odd = majorana::parity_sector(Parity::odd);
  auto split = [&](const majorana::ParitySector& sector, double ng_a) {
    return majorana::sector_splitting(majorana::majorana_charging(cfg, scales, {ng_a, 0.0}), sector);
  };
  ParityProbe p{split(even, 0.0), split(even, 0.5), split(odd, 0.0), split(odd, 0.5), false};
  const double expected = 4.0 * (scales.E_Cr + scales.E_Cq);
  p.matches_expectation = std::abs(p.even_at_zero - expected) <= 1e-9 * expected && p.even_at_half <= 1e-10 &&
                          p.odd_at_zero <= 1e-10 && p.odd_at_half <= 1e-10;
  return p;
}

}  // namespace tlt::proj
