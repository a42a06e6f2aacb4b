#pragma once

// Two-level projection of each subsystem and extraction of effective Pauli
// couplings between the transmon/resonator qubits and the Majorana qubit.

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tlt/circuit.hpp"
#include "tlt/hamiltonian.hpp"
#include "tlt/majorana.hpp"
#include "tlt/numerics.hpp"

namespace tlt::proj {

using num::ComplexMatrix;
using num::HermitianOperator;
using num::Pauli;
using majorana::ConfigLabel;
using majorana::Parity;

/// Lowest two eigenvectors of a bare subsystem Hamiltonian. Columns are
/// ordered (excited, ground), so sigma_z = +1 on the excited state and -1 on
/// the ground state and the textbook Pauli matrices apply unchanged.
struct QubitSubspace {
  std::string subsystem;
  ComplexMatrix basis;  // dim x 2
  double ground_energy;
  double gap;           // E_1 - E_0

  /// B sigma B^dagger on the qubit block, identity on its complement.
  ComplexMatrix pauli(Pauli p) const;
};

class DegenerateSubspaceError : public std::runtime_error {
 public:
  DegenerateSubspaceError(const std::string& subsystem, double gap);
  double gap() const { return gap_; }

 private:
  double gap_;
};

/// Throws DegenerateSubspaceError when E_1 - E_0 <= 1e-6 GHz.
QubitSubspace qubit_subspace(const HermitianOperator& h_bare, std::string subsystem);

struct ProjectionBasis {
  QubitSubspace transmon;
  QubitSubspace resonator;
};

/// Transmon (x) resonator (x) sector isometry, (d_q d_r 4) x 8.
ComplexMatrix qubit_isometry(const ProjectionBasis& basis, const majorana::ParitySector& sector);

/// 8x8 operator in the (transmon, resonator, Majorana) qubit basis.
HermitianOperator project_to_qubits(const HermitianOperator& h_int, const ProjectionBasis& basis,
                                    const majorana::ParitySector& sector);

/// max |<even block| h |odd block>| after the subsystem projections.
double cross_sector_norm(const HermitianOperator& h_int, const ProjectionBasis& basis);

/// Which factors a reported coupling acts on non-trivially.
enum class Support { majorana, transmon_majorana, resonator_majorana };

bool in_support(const std::array<Pauli, 3>& labels, Support support);

struct NumericCoupling {
  std::array<Pauli, 3> labels{Pauli::I, Pauli::I, Pauli::I};
  double coefficient = 0.0;      // signed Pauli coefficient of the dominant label
  double residual_weight = 0.0;  // sum of squares of the other labels with the same support
  bool decoupled = true;         // |coefficient| < 1e-9 GHz
  bool flagged = false;          // residual_weight > 1e-4 coefficient^2
};

NumericCoupling numeric_coupling(const HermitianOperator& h_int, const ProjectionBasis& basis,
                                 const majorana::ParitySector& sector, Support support);

enum class Term {
  majorana_charging,  // H_gamma
  resonator_charge,   // H_r,gamma
  transmon_charge,    // H_q,gamma
  phase,              // fractional Josephson coupling
};

std::string_view to_string(Term term);
Support support_of(Term term);

/// Majorana-charging rows compare energy splittings; all other rows compare
/// single Pauli coefficients (|<0|.|1>| matrix elements).
enum class Convention { splitting, coefficient };

std::string_view to_string(Convention c);
Convention convention_of(Term term);

struct Cell {
  ConfigLabel config;
  Parity parity;
  Term term;
};

/// Rows of coupling table 1, 2 or 3 in their printed order. Throws
/// std::invalid_argument for any other id.
const std::vector<Cell>& table_cells(int table_id);

/// Closed-form value at zero charge offset and unit overlaps, in GHz:
///   4(E_Cr + E_Cq), 4 E_Cr, (E_Lr E_Cr^3 / 2)^(1/4), (E_Jq* E_Cq^3 / 2)^(1/4),
///   Delta sqrt(E_Cq / 32 E_Jq*), Delta sqrt(E_Cq / 8 E_Jq*),
/// and 0 for cells whose Majorana factor cancels in that parity sector.
/// Throws for terms that do not exist in the configuration.
double analytic_coupling(const Cell& cell, const circuit::EnergyScales& scales);

struct PipelineOptions {
  int cutoff = 5;
  ham::PotentialMode mode = ham::PotentialMode::quartic_ejq;
  majorana::ChargeOffsets offsets{};
  ham::ChargeCouplingPrefactors prefactors{};
};

struct CouplingReport {
  Cell cell;
  std::array<Pauli, 3> labels;
  double analytic;
  double numeric;         // magnitude, in the row's convention
  double numeric_signed;  // signed Pauli coefficient (doubled for splittings)
  double ratio;           // numeric / analytic, NaN when analytic == 0
  Convention convention;
  double residual_weight;
  bool flagged;
  bool decoupled;
};

/// Caches the layout and qubit subspaces for one (scales, options) pair.
class CouplingPipeline {
 public:
  CouplingPipeline(const circuit::EnergyScales& scales, const PipelineOptions& options);

  const ham::SubsystemLayout& layout() const { return layout_; }
  const ProjectionBasis& basis() const { return basis_; }

  HermitianOperator interaction(const Cell& cell) const;
  CouplingReport evaluate(const Cell& cell) const;

 private:
  circuit::EnergyScales scales_;
  PipelineOptions options_;
  ham::SubsystemLayout layout_;
  ProjectionBasis basis_;
};

std::vector<CouplingReport> coupling_table(int table_id, const circuit::EnergyScales& scales,
                                           const PipelineOptions& options = {});

/// Every configuration A-F in both parity sectors (and every term of the
/// charge configurations), sorted by configuration then parity (+1 first).
std::vector<CouplingReport> parity_selection_table(const circuit::EnergyScales& scales,
                                                   const PipelineOptions& options = {});

struct ParityProbe {
  double even_at_zero;  // H_gamma splitting, config A, n_g^(a) = 0
  double even_at_half;  // n_g^(a) = 1/2
  double odd_at_zero;
  double odd_at_half;
  bool matches_expectation;  // even: 4(E_Cr+E_Cq) then 0; odd: 0 at both
};

ParityProbe ng_parity_probe(const circuit::EnergyScales& scales);

}  // namespace tlt::proj
