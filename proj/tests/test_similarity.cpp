#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qgestalt/selftest.hpp"
#include "qgestalt/similarity.hpp"

using namespace qgestalt;

namespace {

PureState plus_state() { return PureState::normalized(Eigen::Vector2d(1, 1)); }

}  // namespace

TEST_SUITE("similarity") {

TEST_CASE("pure fidelity frozen examples") {
  const PureState zero = PureState::basis(2, 0);
  const PureState one = PureState::basis(2, 1);
  CHECK(fidelity_pure(zero, zero) == 1.0);
  CHECK(fidelity_pure(zero, one) == 0.0);
  CHECK(std::abs(fidelity_pure(zero, plus_state()) - 0.5) <= 1e-15);
  CHECK_THROWS_AS(fidelity_pure(zero, PureState::basis(3, 0)), dimension_mismatch_error);
}

TEST_CASE("mixed fidelity agrees with the Jacobi-route oracle") {
  selftest::Rng rng(31);
  double max_gap = 0.0;
  for (int i = 0; i < 60; ++i) {
    const int dim = 2 + i % 6;
    const DensityOperator rho = selftest::random_density_operator(rng, dim, rng.next_int(1, dim));
    const DensityOperator sigma =
        selftest::random_density_operator(rng, dim, rng.next_int(1, dim));
    const double via_library = fidelity(rho, sigma);
    const double via_oracle = oracles::fidelity(rho.matrix(), sigma.matrix());
    max_gap = std::max(max_gap, std::abs(via_library - via_oracle));
  }
  CHECK(max_gap <= 1e-8);
}

TEST_CASE("fidelity reduces to the pure overlap on rank-1 inputs") {
  selftest::Rng rng(32);
  double max_gap = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int dim = 2 + i % 7;
    const PureState psi = selftest::random_pure_state(rng, dim);
    const PureState phi = selftest::random_pure_state(rng, dim);
    max_gap = std::max(
        max_gap, std::abs(fidelity(projector(psi), projector(phi)) - fidelity_pure(psi, phi)));
  }
  CHECK(max_gap <= 1e-8);
}

TEST_CASE("fidelity axioms on random mixtures") {
  selftest::Rng rng(33);
  for (int i = 0; i < 50; ++i) {
    const int dim = 2 + i % 7;
    const DensityOperator rho = selftest::random_density_operator(rng, dim, rng.next_int(1, dim));
    const DensityOperator sigma =
        selftest::random_density_operator(rng, dim, rng.next_int(1, dim));

    const double raw = fidelity_unclamped(rho, sigma);
    CHECK(raw >= -1e-9);
    CHECK(raw <= 1.0 + 1e-9);

    const double f = fidelity(rho, sigma);
    CHECK(f >= 0.0);
    CHECK(f <= 1.0);
    CHECK(std::abs(f - fidelity(sigma, rho)) <= 1e-9);
    CHECK(fidelity(rho, rho) >= 1.0 - 1e-8);
  }
}

TEST_CASE("zero law on orthogonal-support pairs, both directions") {
  const DensityOperator p0 = projector(PureState::basis(4, 0));
  const DensityOperator p1 = projector(PureState::basis(4, 1));
  CHECK(fidelity(p0, p1) <= 1e-9);
  CHECK((p0.matrix() * p1.matrix()).cwiseAbs().maxCoeff() <= 1e-12);

  selftest::Rng rng(34);
  for (int i = 0; i < 20; ++i) {
    const int dim = 4 + i % 4;
    const PureState a = selftest::random_pure_state(rng, dim);
    Eigen::VectorXd b_raw(dim);
    for (int k = 0; k < dim; ++k) b_raw(k) = rng.next_gaussian();
    b_raw -= a.amplitudes() * a.amplitudes().dot(b_raw);
    const PureState b = PureState::normalized(b_raw);
    const DensityOperator pa = projector(a);
    const DensityOperator pb = projector(b);
    const double f = fidelity(pa, pb);
    const double product_max = (pa.matrix() * pb.matrix()).cwiseAbs().maxCoeff();
    CHECK(f <= 1e-9);
    CHECK(product_max <= 1e-12);
  }
}

TEST_CASE("identity law on a corpus of identical and separated pairs") {
  selftest::Rng rng(35);
  for (int i = 0; i < 20; ++i) {
    const int dim = 2 + i % 5;
    const DensityOperator rho = selftest::random_density_operator(rng, dim, rng.next_int(1, dim));
    CHECK(fidelity(rho, rho) >= 1.0 - 1e-8);

    DensityOperator sigma = selftest::random_density_operator(rng, dim, rng.next_int(1, dim));
    while ((rho.matrix() - sigma.matrix()).cwiseAbs().maxCoeff() <= 1e-3) {
      sigma = selftest::random_density_operator(rng, dim, rng.next_int(1, dim));
    }
    CHECK(fidelity(rho, sigma) < 1.0 - 1e-8);
  }
}

TEST_CASE("transition-probability form for rank-1 first argument") {
  selftest::Rng rng(36);
  for (int i = 0; i < 30; ++i) {
    const int dim = 2 + i % 6;
    const PureState psi = selftest::random_pure_state(rng, dim);
    const DensityOperator sigma =
        selftest::random_density_operator(rng, dim, rng.next_int(1, dim));
    const double quadratic_form =
        psi.amplitudes().dot(sigma.matrix() * psi.amplitudes());
    CHECK(std::abs(fidelity(projector(psi), sigma) - quadratic_form) <= 1e-8);
  }
}

TEST_CASE("r-similarity boundary and reflexivity") {
  selftest::Rng rng(37);
  const DensityOperator rho = selftest::random_density_operator(rng, 3, 2);
  CHECK(r_similar(rho, rho, SimilarityThreshold(1.0)));
  CHECK(!r_similar(projector(PureState::basis(2, 0)), projector(PureState::basis(2, 1)),
                   SimilarityThreshold(0.1)));
}

TEST_CASE("r-similarity is symmetric and reflexive over random thresholds") {
  selftest::Rng rng(38);
  for (int i = 0; i < 30; ++i) {
    const int dim = 2 + i % 4;
    const DensityOperator rho = selftest::random_density_operator(rng, dim, rng.next_int(1, dim));
    const DensityOperator sigma =
        selftest::random_density_operator(rng, dim, rng.next_int(1, dim));
    const SimilarityThreshold r(rng.next_unit());
    CHECK(r_similar(rho, rho, r));
    CHECK(r_similar(rho, sigma, r) == r_similar(sigma, rho, r));
  }
}

TEST_CASE("non-transitivity witness at r = 0.5") {
  const DensityOperator p0 = projector(PureState::basis(2, 0));
  const DensityOperator p1 = projector(PureState::basis(2, 1));
  const DensityOperator pp = projector(plus_state());
  const SimilarityThreshold r(0.5);

  CHECK(std::abs(fidelity(p0, pp) - 0.5) <= 1e-12);
  CHECK(std::abs(fidelity(pp, p1) - 0.5) <= 1e-12);
  CHECK(std::abs(fidelity(p0, p1)) <= 1e-12);
  CHECK(r_similar(p0, pp, r));
  CHECK(r_similar(pp, p1, r));
  CHECK(!r_similar(p0, p1, r));
}

TEST_CASE("threshold validation") {
  CHECK_THROWS_AS(SimilarityThreshold(-0.1), invalid_threshold_error);
  CHECK_THROWS_AS(SimilarityThreshold(1.1), invalid_threshold_error);
  CHECK(SimilarityThreshold(0.0).value() == 0.0);
  CHECK(SimilarityThreshold(1.0).value() == 1.0);
}

TEST_CASE("dimension mismatch propagates") {
  const DensityOperator p2 = projector(PureState::basis(2, 0));
  const DensityOperator p3 = projector(PureState::basis(3, 0));
  CHECK_THROWS_AS(fidelity(p2, p3), dimension_mismatch_error);
  CHECK_THROWS_AS(r_similar(p2, p3, SimilarityThreshold(0.5)), dimension_mismatch_error);
}

}  // TEST_SUITE
