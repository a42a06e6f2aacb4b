#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tlt/hamiltonian.hpp"

using namespace tlt;
using namespace tlt::ham;
using num::complex;

namespace {

const circuit::EnergyScales& scales() {
  static const auto s = circuit::derive_scales({});
  return s;
}

FockSpace transmon_space(int cutoff) { return {cutoff, circuit::zero_point_amplitudes(scales()).transmon}; }

std::vector<double> levels(PotentialMode mode, int cutoff) {
  return num::eigh(transmon_h(scales(), transmon_space(cutoff), mode)).eigenvalues;
}

double commutator_with_parity(const SubsystemLayout& layout, const HermitianOperator& h) {
  return num::commutator(h.matrix(), layout.parity().matrix()).max_norm();
}

}  // namespace

TEST_CASE("Fock space bounds") {
  CHECK_THROWS_AS(transmon_space(1), std::invalid_argument);
  CHECK(transmon_space(5).dim() == 6);
  const auto layout = SubsystemLayout::make(scales(), 3, 4);
  CHECK(layout.total_dim() == 4 * 5 * 4);
  CHECK_THROWS_AS(layout.embed(HermitianOperator::identity(3), std::nullopt, std::nullopt), std::invalid_argument);
}

TEST_CASE("canonical commutator below the truncation edge") {
  const auto space = transmon_space(8);
  const auto [phi, n] = quadratures(space);
  const auto c = num::commutator(phi.matrix(), n.matrix());
  for (std::size_t i = 0; i + 1 < space.dim(); ++i) CHECK(std::abs(c(i, i) - complex(0.0, 1.0)) < 1e-12);
}

TEST_CASE("potential mode names") {
  for (auto m : {PotentialMode::quartic_ejq, PotentialMode::quartic_ejstar, PotentialMode::full_cosine,
                 PotentialMode::harmonic})
    CHECK(potential_mode_from_string(to_string(m)) == m);
  CHECK_THROWS_AS(potential_mode_from_string("sextic"), std::invalid_argument);
}

// Reference spectra from tests/oracle/reference_values.py.
TEST_CASE("transmon spectrum at cutoff 5") {
  const auto q = levels(PotentialMode::quartic_ejq, 5);
  CHECK(q[0] == doctest::Approx(2.9172029357).epsilon(1e-9));
  CHECK(q[1] - q[0] == doctest::Approx(5.8062501192).epsilon(1e-9));
  CHECK((q[2] - q[1]) - (q[1] - q[0]) == doctest::Approx(-0.0879975800).epsilon(1e-7));

  const auto s = levels(PotentialMode::quartic_ejstar, 5);
  CHECK(s[1] - s[0] == doctest::Approx(5.6970859069).epsilon(1e-9));

  const auto c = levels(PotentialMode::full_cosine, 5);
  CHECK(c[0] == doctest::Approx(-7.0825566217).epsilon(1e-9));
  CHECK(c[1] - c[0] == doctest::Approx(5.8077490942).epsilon(1e-9));
}

TEST_CASE("harmonic transmon spacing equals omega_q") {
  for (int cutoff : {3, 5, 12}) {
    const auto h = levels(PotentialMode::harmonic, cutoff);
    CHECK(std::abs((h[1] - h[0]) - scales().omega_q) <= 1e-8);
    // The truncated quadratures pull the top Fock level down to about
    // (cutoff/2) omega, so only the first spacing is clean at small cutoffs.
    if (cutoff >= 8) CHECK(std::abs((h[2] - h[1]) - scales().omega_q) <= 1e-8);
  }
}

TEST_CASE("transmon spectrum converges with cutoff") {
  const auto a = levels(PotentialMode::quartic_ejq, 15);
  const auto b = levels(PotentialMode::quartic_ejq, 20);
  const double ref[] = {2.91720278099, 8.723797326702, 14.47398146605};
  for (int k = 0; k < 3; ++k) {
    CHECK(std::abs(a[k] - b[k]) <= 1e-8);
    CHECK(b[k] == doctest::Approx(ref[k]).epsilon(1e-10));
  }
  const auto c = levels(PotentialMode::full_cosine, 20);
  CHECK((c[2] - c[1]) - (c[1] - c[0]) == doctest::Approx(-0.0533801533).epsilon(1e-7));
}

TEST_CASE("resonator forms agree below the edge") {
  const FockSpace space{6, circuit::zero_point_amplitudes(scales()).resonator};
  const auto q = num::eigh(resonator_h(scales(), space)).eigenvalues;
  const auto n = num::eigh(resonator_h(scales(), space, ResonatorForm::number)).eigenvalues;
  for (int k = 0; k < 3; ++k) CHECK(q[k] == doctest::Approx(n[k]).epsilon(1e-10));
  CHECK(std::abs(q[0]) < 1e-10);
  CHECK(q[1] == doctest::Approx(7.026862397068702).epsilon(1e-10));
}

TEST_CASE("longitudinal coupling matrix element") {
  for (int k : {1, 2}) {
    circuit::CircuitParams p;
    p.junction_count = k;
    const auto s = circuit::derive_scales(p);
    const auto layout = SubsystemLayout::make(s, 5);
    const auto h = longitudinal_h(s, layout).matrix();
    const std::size_t dr = layout.resonator.dim();
    auto idx = [&](std::size_t q, std::size_t r) { return (q * dr + r) * 4; };
    const double g = (h(idx(1, 0), idx(1, 1)) - h(idx(0, 0), idx(0, 1))).real();
    CHECK(g == doctest::Approx(-0.1144048485788158 / (k * k)).epsilon(1e-10));
    CHECK(g < 0.0);
    CHECK(commutator_with_parity(layout, longitudinal_h(s, layout)) <= 1e-12);
  }
}

TEST_CASE("cos(phi/2) diagonal elements") {
  const auto space = transmon_space(20);
  const auto c = cos_half_phase(space).matrix();
  const double x = space.zpf.phi * space.zpf.phi / 4.0;
  CHECK(c(0, 0).real() == doctest::Approx(std::exp(-x / 2.0)).epsilon(1e-10));
  CHECK(((c(0, 0) - c(1, 1)).real() / x) == doctest::Approx(0.9870771174538174).epsilon(1e-9));
  CHECK(std::abs(c(0, 1)) < 1e-14);
}

TEST_CASE("charge coupling prefactor scales linearly") {
  const auto layout = SubsystemLayout::make(scales(), 4);
  const auto cfg = majorana::MajoranaConfig::make(majorana::ConfigLabel::A);
  const auto four = charge_coupling_h(cfg, scales(), layout);
  const auto eight = charge_coupling_h(cfg, scales(), layout, {8.0, 8.0});
  CHECK((eight.resonator.matrix() - four.resonator.matrix() * complex(2.0)).max_norm() < 1e-13);
  CHECK((eight.transmon.matrix() - four.transmon.matrix() * complex(2.0)).max_norm() < 1e-13);
}

TEST_CASE("every term preserves fermion parity") {
  const auto layout = SubsystemLayout::make(scales(), 4);
  for (char l = 'A'; l <= 'F'; ++l) {
    const auto cfg = majorana::MajoranaConfig::make(majorana::config_from_char(l));
    auto parts = Assembly::all(cfg);
    CHECK(commutator_with_parity(layout, full_h(layout, scales(), parts)) <= 1e-12);
    if (majorana::is_charge_config(cfg.label)) {
      const auto cc = charge_coupling_h(cfg, scales(), layout);
      CHECK(commutator_with_parity(layout, cc.resonator) <= 1e-12);
      CHECK(commutator_with_parity(layout, cc.transmon) <= 1e-12);
      CHECK_THROWS_AS(fje_h(cfg, scales(), layout), std::invalid_argument);
    } else {
      CHECK(commutator_with_parity(layout, fje_h(cfg, scales(), layout)) <= 1e-12);
      CHECK_THROWS_AS(charge_coupling_h(cfg, scales(), layout), std::invalid_argument);
    }
  }
}

TEST_CASE("assembly requires a configuration for Majorana terms") {
  const auto layout = SubsystemLayout::make(scales(), 3);
  Assembly parts;
  parts.transmon = true;
  CHECK(full_h(layout, scales(), parts).dim() == layout.total_dim());
  parts.fje = true;
  CHECK_THROWS_AS(full_h(layout, scales(), parts), std::invalid_argument);
}
