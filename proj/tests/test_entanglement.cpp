#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "ionlink/entanglement.hpp"

namespace {

using namespace ionlink;

TEST(BellStates, TraceOverlapPurity) {
  EXPECT_NEAR(psi_g().rho().trace().real(), 1.0, 1e-15);
  EXPECT_NEAR(psi_b().rho().trace().real(), 1.0, 1e-15);
  EXPECT_NEAR(overlap(psi_g(), psi_b()), 0.0, 1e-15);
  EXPECT_NEAR(fidelity(psi_g(), psi_g()), 1.0, 1e-15);
  EXPECT_NEAR(psi_b().purity(), 1.0, 1e-15);
  // |V1> and |H0> carry the weight of psi_g
  EXPECT_NEAR(psi_g().rho()(kV1, kV1).real(), 0.5, 1e-15);
  EXPECT_NEAR(psi_g().rho()(kH0, kV1).real(), 0.5, 1e-15);
  EXPECT_NEAR(psi_b().rho()(kH1, kV0).real(), 0.5, 1e-15);
}

TEST(TwoQubitState, RejectsInvalidDensityMatrices) {
  DensityMatrix rho = DensityMatrix::Zero();
  rho(0, 0) = 0.5;
  EXPECT_THROW(TwoQubitState{rho}, DomainError);
  rho(1, 1) = 0.5;
  rho(0, 1) = 0.3;
  EXPECT_THROW(TwoQubitState{rho}, DomainError);  // not Hermitian
  rho(1, 0) = 0.3;
  EXPECT_NO_THROW(TwoQubitState{rho});
  rho(0, 1) = rho(1, 0) = 0.8;
  EXPECT_THROW(TwoQubitState{rho}, DomainError);  // negative eigenvalue
}

TEST(Fidelity, TargetMustBePure) {
  EXPECT_THROW(fidelity(mixed_state(0.5, 0.5), psi_g()), DomainError);
  EXPECT_NEAR(fidelity(psi_g(), psi_b()), 0.0, 1e-15);
}

TEST(MixedState, Examples) {
  EXPECT_NEAR(fidelity(psi_g(), mixed_state(0.844, 0.103)), 0.844 / 0.947, 1e-12);
  EXPECT_NEAR(fidelity(psi_g(), mixed_state(0.844, 0.103)), 0.8912, 5e-5);
  EXPECT_NEAR(fidelity(psi_g(), mixed_state(0.3, 0.0)), 1.0, 1e-15);
  EXPECT_NEAR(fidelity(psi_g(), mixed_state(0.5, 0.5)), 0.5, 1e-15);
  EXPECT_THROW(mixed_state(0.0, 0.0), DomainError);
  EXPECT_THROW(mixed_state(-0.1, 0.5), DomainError);
}

TEST(MixedState, FidelityEqualsGoodWeightProperty) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double pg = u(rng), pb = u(rng);
    const auto rho = mixed_state(pg, pb);
    const double f = fidelity(psi_g(), rho);
    EXPECT_NEAR(f, pg / (pg + pb), 1e-12);
    EXPECT_GE(f, 0.0);
    EXPECT_LE(f, 1.0);
  }
}

TEST(GeometricSuccess, QuotedGoodBranch) {
  const auto model = default_barium_model();
  const auto s = geometric_success(model, CycleCoefficients::from_model(model));
  EXPECT_NEAR(s.p_g, 0.844, 1e-3);
  EXPECT_NEAR(s.p_g, 0.7304 / (1.0 - 0.2696 / 2.0), 1e-12);
  // closed form for the bad branch with c2^2 = 1/3, c3^2 = 1/6
  EXPECT_NEAR(s.p_b, 0.7304 * 0.2696 / 3.0 / (1.0 - 0.2696 / 6.0), 1e-12);
  EXPECT_NEAR(s.p_g + s.p_b + s.p_dark, 1.0, 1e-15);
}

TEST(GeometricSuccess, ZeroCoefficientsCollapseToSingleShot) {
  const auto model = default_barium_model();
  const auto s = geometric_success(model, {0.0, 0.0, 0.0});
  EXPECT_DOUBLE_EQ(s.p_g, 0.7304);
  EXPECT_DOUBLE_EQ(s.p_b, 0.0);
}

TEST(GeometricSuccess, DivergentSeries) {
  const auto table = default_barium_model().table();
  // no 493 nm decay and a certain return: the good-branch denominator vanishes
  std::map<BranchingModel::Key, double> cg = table;
  const BranchingModel shelf_only(0.0, 1.0, cg);
  EXPECT_THROW(geometric_success(shelf_only, {1.0, 0.0, 0.0}), DomainError);
  EXPECT_THROW(CycleCoefficients(1.5, 0.0, 0.0), DomainError);
}

TEST(FidelityVsNa, Examples) {
  EXPECT_NEAR(fidelity_vs_na(0.89, 0.6), 0.8684, 1e-12);
  EXPECT_NEAR(fidelity_vs_na(1.0, 0.6), 0.9784, 1e-12);
  EXPECT_DOUBLE_EQ(fidelity_vs_na(0.77, 0.0), 0.77);
  EXPECT_NEAR(fidelity_vs_na(1.0, 1.0), 0.94, 1e-15);
  EXPECT_THROW(fidelity_vs_na(1.0, 1.5), DomainError);
  EXPECT_THROW(fidelity_vs_na(1.0, -0.1), DomainError);
}

TEST(FidelityVsNa, StrictlyDecreasing) {
  double prev = fidelity_vs_na(0.9, 0.0);
  for (int i = 1; i <= 100; ++i) {
    const double f = fidelity_vs_na(0.9, i / 100.0);
    EXPECT_LT(f, prev);
    prev = f;
  }
}

TEST(EntanglementProbability, Examples) {
  EXPECT_NEAR(entanglement_probability(d_shelving_scheme(), 0.6), 0.947 * 0.09, 1e-15);
  EXPECT_NEAR(entanglement_probability(d_shelving_scheme(), 0.6), 0.0852, 1e-4);
  EXPECT_NEAR(entanglement_probability(strong_scheme(), 0.6), 0.0657, 1e-4);
  EXPECT_DOUBLE_EQ(entanglement_probability(weak_scheme(), 0.0), 0.0);
  EXPECT_THROW(entanglement_probability(weak_scheme(), 1.01), DomainError);
}

TEST(EntanglementProbability, QuadraticScalingIsExact) {
  // doubling a binary fraction scales NA^2 by exactly 4 in floating point
  for (const auto& spec : {d_shelving_scheme(), weak_scheme(), strong_scheme()}) {
    for (int i = 1; i <= 64; ++i) {
      const double na = i / 128.0;
      EXPECT_EQ(entanglement_probability(spec, 2.0 * na), 4.0 * entanglement_probability(spec, na));
      EXPECT_GT(entanglement_probability(spec, na + 1.0 / 256.0), entanglement_probability(spec, na));
    }
  }
}

TEST(DoubleExcitation, Examples) {
  EXPECT_DOUBLE_EQ(double_excitation_probability(0.0, 8e-9), 0.0);
  EXPECT_NEAR(double_excitation_probability(8e-9, 8e-9), 1.0 - std::exp(-1.0), 1e-15);
  EXPECT_NEAR(double_excitation_probability(8e-9, 8e-9), 0.6321, 1e-4);
  EXPECT_NEAR(double_excitation_probability(1000.0, 1.0), 1.0, 1e-15);
  EXPECT_THROW(double_excitation_probability(1.0, 0.0), DomainError);
  double prev = 0.0;
  for (int i = 1; i < 50; ++i) {
    const double p = double_excitation_probability(0.1 * i, 1.0);
    EXPECT_GT(p, prev);
    prev = p;
  }
}

TEST(SchemeTable, TableAtNa06) {
  const auto rows = scheme_table(0.6);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_NEAR(rows[0].spec.pe_ps(), 0.947, 1e-12);
  EXPECT_NEAR(rows[0].spec.f_max, 0.891, 5e-4);
  EXPECT_NEAR(rows[1].spec.pe_ps(), 0.146, 5e-4);
  EXPECT_NEAR(rows[2].spec.pe_ps(), 0.730, 5e-4);
  // published values, ±0.005 for the table's rounding
  const double published[3][2] = {{0.085, 0.87}, {0.014, 0.98}, {0.068, 0.98}};
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(rows[i].probability, published[i][0], 0.005);
    EXPECT_NEAR(rows[i].fidelity, published[i][1], 0.005);
  }
  for (const auto& r : scheme_table(0.0)) EXPECT_EQ(r.probability, 0.0);
}

TEST(SchemeSpec, Validation) {
  EXPECT_THROW(SchemeSpec(Scheme::Weak, 1.2, 0.5, 1.0), DomainError);
  EXPECT_THROW(SchemeSpec(Scheme::Weak, 0.2, 0.5, -0.1), DomainError);
}

}  // namespace
