#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "eurkit/entropy.hpp"
#include "eurkit/errors.hpp"
#include "eurkit/measurements.hpp"
#include "eurkit/states.hpp"
#include "test_util.hpp"

using namespace eurkit;

namespace {

const double kLog2_3 = std::log2(3.0);
// shannon of {5/8, 1/8, 1/8, 1/8}
const double kWernerHalfEntropy = 3.0 - 0.625 * std::log2(5.0);

DensityMatrix singlet_state() {
  return DensityMatrix(outer(singlet_vector()), 2, 2);
}

DensityMatrix maximally_mixed_4() {
  ComplexMatrix q = ComplexMatrix::identity(4);
  q *= 0.25;
  return DensityMatrix(std::move(q), 2, 2);
}

}  // namespace

TEST_CASE("ProbabilityVector validation") {
  REQUIRE_NOTHROW(ProbabilityVector({0.5, 0.5}));
  REQUIRE_THROWS_AS(ProbabilityVector({0.6, 0.6}), DomainError);
  REQUIRE_THROWS_AS(ProbabilityVector({1.5, -0.5}), DomainError);
  // a tiny negative is clamped, not rejected
  const ProbabilityVector p({1.0, -1e-13});
  REQUIRE(p[1] == 0.0);
}

TEST_CASE("shannon entropy") {
  REQUIRE(shannon(ProbabilityVector({1.0, 0.0})) == 0.0);
  REQUIRE(shannon(ProbabilityVector({0.5, 0.5})) == Catch::Approx(1.0).margin(1e-14));
  REQUIRE(shannon(ProbabilityVector({1.0 / 3, 1.0 / 3, 1.0 / 3})) ==
          Catch::Approx(kLog2_3).margin(1e-12));
}

TEST_CASE("von Neumann entropy") {
  REQUIRE(von_neumann(singlet_state()) == Catch::Approx(0.0).margin(1e-12));
  REQUIRE(von_neumann(maximally_mixed_4()) == Catch::Approx(2.0).margin(1e-12));
  REQUIRE(von_neumann(werner(0.5)) ==
          Catch::Approx(kWernerHalfEntropy).margin(1e-12));
}

TEST_CASE("von Neumann matches Shannon on diagonal states") {
  for (std::size_t n = 2; n <= 9; ++n) {
    Sampler s(RngStream{700, n});
    for (int rep = 0; rep < 30; ++rep) {
      const ProbabilityVector p = random_simplex_probs(n, s);
      REQUIRE(von_neumann(diagonal_state(p)) ==
              Catch::Approx(shannon(p)).margin(1e-12));
    }
  }
}

TEST_CASE("conditional entropy") {
  REQUIRE(conditional_entropy(singlet_state()) == Catch::Approx(-1.0).margin(1e-9));
  REQUIRE(conditional_entropy(maximally_mixed_4()) ==
          Catch::Approx(1.0).margin(1e-12));
  REQUIRE(conditional_entropy(werner(0.5)) ==
          Catch::Approx(kWernerHalfEntropy - 1.0).margin(1e-12));
}

TEST_CASE("post_measurement_state") {
  const MeasurementSet paulis = pauli_bases();

  SECTION("sigma_z dephases the singlet to a classical mixture") {
    const DensityMatrix pm = post_measurement_state(singlet_state(), paulis.basis(2));
    ComplexMatrix expect(4);
    expect(1, 1) = 0.5;  // |01><01|
    expect(2, 2) = 0.5;  // |10><10|
    REQUIRE(pm.matrix().max_abs_diff(expect) < 1e-12);
  }

  SECTION("the maximally mixed state is a fixed point") {
    for (std::size_t m = 0; m < 3; ++m) {
      const DensityMatrix pm =
          post_measurement_state(maximally_mixed_4(), paulis.basis(m));
      REQUIRE(pm.matrix().max_abs_diff(maximally_mixed_4().matrix()) < 1e-12);
    }
  }

  SECTION("measuring a product state in the eigenbasis of rho_A is a no-op") {
    for (std::uint64_t rep = 0; rep < 10; ++rep) {
      const DensityMatrix rho_a = random_density(2, 1, RngStream{701, 2 * rep});
      const DensityMatrix rho_b = random_density(2, 1, RngStream{701, 2 * rep + 1});
      const DensityMatrix product(kron(rho_a.matrix(), rho_b.matrix()), 2, 2);
      const EigenDecomposition e = hermitian_eig(rho_a.matrix());
      const ProjectiveBasis eigenbasis({e.eigenvector(0), e.eigenvector(1)}, "eig");
      const DensityMatrix pm = post_measurement_state(product, eigenbasis);
      REQUIRE(pm.matrix().max_abs_diff(product.matrix()) < 1e-12);
    }
  }

  SECTION("B marginal is untouched and trace is preserved") {
    const DensityMatrix rho = random_density(2, 2, RngStream{702, 0});
    const DensityMatrix pm = post_measurement_state(rho, paulis.basis(0));
    REQUIRE(std::abs(pm.matrix().trace().real() - 1.0) < 1e-12);
    REQUIRE(marginal_b(pm).matrix().max_abs_diff(marginal_b(rho).matrix()) < 1e-12);
  }

  SECTION("dimension mismatch") {
    REQUIRE_THROWS_AS(post_measurement_state(singlet_state(), qutrit_mub().basis(0)),
                      DimensionError);
  }
}

TEST_CASE("measured_conditional") {
  const MeasurementSet paulis = pauli_bases();
  REQUIRE(measured_conditional(singlet_state(), paulis.basis(2)) ==
          Catch::Approx(0.0).margin(1e-9));
  for (std::size_t m = 0; m < 3; ++m)
    REQUIRE(measured_conditional(maximally_mixed_4(), paulis.basis(m)) ==
            Catch::Approx(1.0).margin(1e-12));
  REQUIRE(measured_conditional(werner(0.0), paulis.basis(2)) ==
          Catch::Approx(1.0).margin(1e-12));
  REQUIRE(measured_conditional(werner(1.0), paulis.basis(2)) ==
          Catch::Approx(0.0).margin(1e-9));
}

TEST_CASE("mutual information") {
  SECTION("product states carry none") {
    const DensityMatrix rho_a = random_density(2, 1, RngStream{703, 0});
    const DensityMatrix rho_b = random_density(2, 1, RngStream{703, 1});
    const DensityMatrix product(kron(rho_a.matrix(), rho_b.matrix()), 2, 2);
    REQUIRE(mutual_information(product) == Catch::Approx(0.0).margin(1e-10));
  }
  REQUIRE(mutual_information(singlet_state()) == Catch::Approx(2.0).margin(1e-9));
  REQUIRE(mutual_information(werner(0.5)) ==
          Catch::Approx(2.0 - kWernerHalfEntropy).margin(1e-12));
}

TEST_CASE("holevo quantity") {
  const MeasurementSet paulis = pauli_bases();

  SECTION("product states carry none, any basis") {
    const DensityMatrix rho_a = random_density(2, 1, RngStream{704, 0});
    const DensityMatrix rho_b = random_density(2, 1, RngStream{704, 1});
    const DensityMatrix product(kron(rho_a.matrix(), rho_b.matrix()), 2, 2);
    for (std::size_t m = 0; m < 3; ++m)
      REQUIRE(holevo(product, paulis.basis(m)) == Catch::Approx(0.0).margin(1e-10));
  }

  REQUIRE(holevo(singlet_state(), paulis.basis(2)) == Catch::Approx(1.0).margin(1e-9));
  REQUIRE(holevo(werner(0.0), paulis.basis(2)) == Catch::Approx(0.0).margin(1e-12));

  SECTION("equals the mutual information of the dephased state") {
    for (std::uint64_t rep = 0; rep < 20; ++rep) {
      const DensityMatrix rho = random_density(2, 2, RngStream{705, rep});
      const ProjectiveBasis basis = testutil::random_basis(2, 706, rep);
      const double via_register = holevo(rho, basis);
      const double via_dephased =
          mutual_information(post_measurement_state(rho, basis));
      REQUIRE(via_register == Catch::Approx(via_dephased).margin(1e-10));
    }
  }
}

TEST_CASE("uncertainty_sum") {
  const MeasurementSet paulis = pauli_bases();
  REQUIRE(uncertainty_sum(singlet_state(), paulis) == Catch::Approx(0.0).margin(1e-9));
  REQUIRE(uncertainty_sum(maximally_mixed_4(), paulis) ==
          Catch::Approx(3.0).margin(1e-12));
}

TEST_CASE("entropic inequalities on random states") {
  const MeasurementSet paulis = pauli_bases();
  const MeasurementSet qutrits = qutrit_mub();

  SECTION("data processing and positivity, two qubits") {
    for (std::uint64_t rep = 0; rep < 60; ++rep) {
      const DensityMatrix rho = random_density(2, 2, RngStream{707, rep});
      const double cond = conditional_entropy(rho);
      const double mutual = mutual_information(rho);
      for (std::size_t m = 0; m < 3; ++m) {
        const double mc = measured_conditional(rho, paulis.basis(m));
        REQUIRE(mc >= cond - 1e-9);
        REQUIRE(mc >= -1e-9);
        REQUIRE(holevo(rho, paulis.basis(m)) <= mutual + 1e-9);
      }
    }
  }

  SECTION("data processing and positivity, two qutrits") {
    for (std::uint64_t rep = 0; rep < 20; ++rep) {
      const DensityMatrix rho = random_density(3, 3, RngStream{708, rep});
      const double cond = conditional_entropy(rho);
      const double mutual = mutual_information(rho);
      for (std::size_t m = 0; m < 3; ++m) {
        const double mc = measured_conditional(rho, qutrits.basis(m));
        REQUIRE(mc >= cond - 1e-9);
        REQUIRE(mc >= -1e-9);
        REQUIRE(holevo(rho, qutrits.basis(m)) <= mutual + 1e-9);
      }
    }
  }

  SECTION("conditional entropy chain") {
    for (std::uint64_t rep = 0; rep < 40; ++rep) {
      const DensityMatrix rho = random_density(2, 2, RngStream{709, rep});
      const double cond = conditional_entropy(rho);
      const double s_a = von_neumann(marginal_a(rho));
      REQUIRE(cond <= s_a + 1e-9);
      REQUIRE(s_a <= 1.0 + 1e-9);
    }
  }
}
