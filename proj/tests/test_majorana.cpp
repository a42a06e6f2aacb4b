#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tlt/majorana.hpp"

using namespace tlt;
using namespace tlt::majorana;
using num::complex;
using num::Pauli;

namespace {

double max_diff(const num::ComplexMatrix& a, const num::ComplexMatrix& b) { return (a - b).max_norm(); }

num::ComplexMatrix pauli4(Pauli a, Pauli b) { return num::kron(num::pauli_matrix(a), num::pauli_matrix(b)); }

const circuit::EnergyScales& scales() {
  static const auto s = circuit::derive_scales({});
  return s;
}

}  // namespace

TEST_CASE("Clifford algebra is exact") {
  const auto& g = algebra().gammas;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const auto ac = num::anticommutator(g[i].matrix(), g[j].matrix());
      const auto expected = i == j ? num::ComplexMatrix::identity(4) * complex(2.0) : num::ComplexMatrix(4, 4);
      CHECK(max_diff(ac, expected) == 0.0);
    }
  }
}

TEST_CASE("representation and parity operator") {
  const auto& alg = algebra();
  CHECK(max_diff(alg.gammas[0].matrix(), pauli4(Pauli::X, Pauli::I)) == 0.0);
  CHECK(max_diff(alg.gammas[1].matrix(), pauli4(Pauli::Y, Pauli::I) * complex(-1.0)) == 0.0);
  CHECK(max_diff(alg.gammas[2].matrix(), pauli4(Pauli::Z, Pauli::X)) == 0.0);
  CHECK(max_diff(alg.gammas[3].matrix(), pauli4(Pauli::Z, Pauli::Y) * complex(-1.0)) == 0.0);
  CHECK(max_diff(alg.parity.matrix(), pauli4(Pauli::Z, Pauli::Z)) == 0.0);
  for (const auto& g : alg.gammas) CHECK(max_diff(num::anticommutator(g.matrix(), alg.parity.matrix()), {4, 4}) == 0.0);
}

TEST_CASE("sector projections follow the Pauli convention") {
  const auto& alg = algebra();
  const auto& x = num::pauli_matrix(Pauli::X);
  const auto& y = num::pauli_matrix(Pauli::Y);
  const auto& z = num::pauli_matrix(Pauli::Z);
  for (Parity p : {Parity::even, Parity::odd}) {
    const auto s = parity_sector(p);
    CHECK(max_diff(project(bilinear(alg, 1, 2), s).matrix(), z) == 0.0);
    CHECK(max_diff(project(bilinear(alg, 1, 3), s).matrix(), y) == 0.0);
    CHECK(max_diff(project(bilinear(alg, 2, 3), s).matrix(), x) == 0.0);
    const double sg = sign(p);
    CHECK(max_diff(project(bilinear(alg, 1, 4), s).matrix(), x * complex(sg)) == 0.0);
    CHECK(max_diff(project(bilinear(alg, 2, 4), s).matrix(), y * complex(-sg)) == 0.0);
    CHECK(max_diff(project(alg.parity, s).matrix(), num::ComplexMatrix::identity(2) * complex(sg)) == 0.0);
  }
}

TEST_CASE("bilinear rejects bad indices") {
  CHECK_THROWS_AS(bilinear(algebra(), 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(bilinear(algebra(), 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(bilinear(algebra(), 1, 5), std::invalid_argument);
  CHECK(max_diff(bilinear(algebra(), 2, 1).matrix(), bilinear(algebra(), 1, 2).matrix() * complex(-1.0)) == 0.0);
}

TEST_CASE("labels and parities") {
  CHECK(config_from_char('D') == ConfigLabel::D);
  CHECK(to_char(ConfigLabel::F) == 'F');
  CHECK_THROWS_AS(config_from_char('G'), std::invalid_argument);
  CHECK(parity_from_sign(-1) == Parity::odd);
  CHECK_THROWS_AS(parity_from_sign(0), std::invalid_argument);
  CHECK(is_charge_config(ConfigLabel::B));
  CHECK_FALSE(is_charge_config(ConfigLabel::C));
}

TEST_CASE("island occupations") {
  const auto z = num::pauli_matrix(Pauli::Z);
  const auto half_one_plus_z = (num::ComplexMatrix::identity(2) + z) * complex(0.5);
  const auto half = num::ComplexMatrix::identity(2) * complex(0.5);
  const auto even = parity_sector(Parity::even);
  const auto odd = parity_sector(Parity::odd);

  const auto a = island_occupations(MajoranaConfig::make(ConfigLabel::A));
  CHECK(max_diff(project(a.m_q, even).matrix(), half_one_plus_z) < 1e-15);
  CHECK(max_diff(project(a.m_r, even).matrix(), half_one_plus_z) < 1e-15);
  CHECK(max_diff(project(a.m_q, odd).matrix(), half) < 1e-15);
  CHECK(max_diff(project(a.m_r, odd).matrix(), half) < 1e-15);

  const auto b = island_occupations(MajoranaConfig::make(ConfigLabel::B));
  CHECK(project(b.m_q, even).matrix().max_norm() < 1e-15);
  CHECK(max_diff(project(b.m_r, even).matrix(), half_one_plus_z) < 1e-15);
  CHECK(max_diff(project(b.m_q, odd).matrix(), z * complex(0.5)) < 1e-15);
  CHECK(max_diff(project(b.m_r, odd).matrix(), half) < 1e-15);

  CHECK_THROWS_AS(island_occupations(MajoranaConfig::make(ConfigLabel::C)), std::invalid_argument);
}

TEST_CASE("configuration geometry") {
  CHECK(MajoranaConfig::make(ConfigLabel::D).bilinears.size() == 2);
  CHECK(MajoranaConfig::make(ConfigLabel::E).bilinears[0].j == 3);
  const auto f = MajoranaConfig::with_overlaps(ConfigLabel::F, {0.5, 0.25});
  CHECK(f.bilinears[1].overlap == 0.25);
  CHECK_THROWS_AS(MajoranaConfig::with_overlaps(ConfigLabel::C, {1.5}), std::invalid_argument);
  CHECK_THROWS_AS(MajoranaConfig::with_overlaps(ConfigLabel::C, {0.5, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(MajoranaConfig::with_overlaps(ConfigLabel::A, {}), std::invalid_argument);
}

TEST_CASE("charging energy splittings at zero offset") {
  const auto even = parity_sector(Parity::even);
  const auto odd = parity_sector(Parity::odd);
  const auto ha = majorana_charging(MajoranaConfig::make(ConfigLabel::A), scales(), {});
  const auto hb = majorana_charging(MajoranaConfig::make(ConfigLabel::B), scales(), {});
  CHECK(sector_splitting(ha, even) == doctest::Approx(1.9689869330141383).epsilon(1e-12));
  CHECK(sector_splitting(hb, even) == doctest::Approx(1.3590290244173673).epsilon(1e-12));
  CHECK(sector_splitting(ha, odd) <= 1e-12);
  CHECK(sector_splitting(hb, odd) <= 1e-12);
  const auto tb = majorana_charging_terms(MajoranaConfig::make(ConfigLabel::B), scales(), {});
  CHECK(sector_splitting(tb.transmon, odd) <= 1e-10);
  for (const auto& h : {ha, hb}) CHECK(num::commutator(h.matrix(), algebra().parity.matrix()).max_norm() <= 1e-12);
}

TEST_CASE("degeneracy scan") {
  std::vector<double> grid;
  for (int k = 0; k <= 20; ++k) grid.push_back(0.05 * k);
  const auto cfg = MajoranaConfig::make(ConfigLabel::A);
  const auto even = degeneracy_scan(cfg, scales(), Parity::even, grid);
  CHECK(even.front().splitting == doctest::Approx(1.9689869330141383));
  CHECK(even[10].ng_a == 0.5);
  CHECK(even[10].splitting <= 1e-10);
  for (std::size_t k = 0; k < even.size(); ++k)
    CHECK(even[k].splitting == doctest::Approx(1.9689869330141383 * std::abs(1.0 - 2.0 * grid[k])).epsilon(1e-9));
  for (const auto& p : degeneracy_scan(cfg, scales(), Parity::odd, grid)) CHECK(p.splitting <= 1e-10);
  CHECK_THROWS_AS(degeneracy_scan(cfg, scales(), Parity::even, {}), std::invalid_argument);
}
