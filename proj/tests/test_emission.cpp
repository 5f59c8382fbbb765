#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "ionlink/emission.hpp"

namespace {

using namespace ionlink;
using std::numbers::pi;

TEST(Emission, PatternsAtKnownAngles) {
  EXPECT_NEAR(pi_emission({pi / 2, 0.0}).intensity(), 1.0, 1e-15);
  EXPECT_NEAR(pi_emission({0.0, 0.0}).intensity(), 0.0, 1e-15);
  EXPECT_NEAR(sigma_emission({0.0, 0.0}, +1).intensity(), 1.0, 1e-15);
  EXPECT_NEAR(sigma_emission({pi / 2, 1.0}, -1).intensity(), 0.5, 1e-15);
  EXPECT_THROW(sigma_emission({0.0, 0.0}, 0), DomainError);
  EXPECT_THROW(EmissionDirection(-0.1, 0.0), DomainError);
  EXPECT_THROW(EmissionDirection(0.1, 2 * pi), DomainError);
}

TEST(Emission, UnpolarisedSumIsIsotropic) {
  // Midpoint quadrature over the sphere; pi and sigma patterns each average 2/3.
  const int nt = 400, np = 64;
  double pi_avg = 0.0, sigma_avg = 0.0;
  for (int i = 0; i < nt; ++i) {
    const double theta = (i + 0.5) * pi / nt;
    for (int j = 0; j < np; ++j) {
      const EmissionDirection dir(theta, (j + 0.5) * 2 * pi / np);
      const double w = std::sin(theta) * (pi / nt) * (2 * pi / np) / (4 * pi);
      pi_avg += w * pi_emission(dir).intensity();
      sigma_avg += w * 0.5 * (sigma_emission(dir, +1).intensity() + sigma_emission(dir, -1).intensity());
    }
  }
  EXPECT_NEAR(pi_avg, 2.0 / 3.0, 1e-5);
  EXPECT_NEAR(sigma_avg, 2.0 / 3.0, 1e-5);
  // pointwise: pi + sigma+ + sigma- does not depend on direction
  for (double theta : {0.0, 0.3, 1.2, pi / 2, 2.9}) {
    const EmissionDirection dir(theta, 0.7);
    EXPECT_NEAR(pi_emission(dir).intensity() + sigma_emission(dir, 1).intensity() + sigma_emission(dir, -1).intensity(),
                2.0, 1e-14);
  }
}

TEST(Emission, OverlapVanishesOnAxisAndEquator) {
  for (int sign : {-1, 1}) {
    EXPECT_NEAR(std::abs(polarization_overlap({0.0, 0.0}, sign)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(polarization_overlap({pi / 2, 0.4}, sign)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(polarization_overlap({pi, 0.0}, sign)), 0.0, 1e-15);
  }
  const double t = 0.6;
  EXPECT_NEAR(std::abs(polarization_overlap({t, 1.3}, +1)), std::sin(t) * std::cos(t) / std::sqrt(2.0), 1e-15);
}

TEST(Collection, ExactAndQuadraticModels) {
  EXPECT_DOUBLE_EQ(collection_fraction(0.6), 0.09);
  EXPECT_NEAR(collection_fraction(0.6, CollectionModel::ExactSolidAngle), 0.1, 1e-15);
  EXPECT_NEAR(collection_fraction(1.0, CollectionModel::ExactSolidAngle), 0.5, 1e-15);
  EXPECT_NEAR(collection_fraction(0.05, CollectionModel::ExactSolidAngle) / collection_fraction(0.05), 1.0, 1e-3);
  for (int i = 1; i <= 100; ++i) {
    const double na = i / 100.0;
    EXPECT_GE(collection_fraction(na, CollectionModel::ExactSolidAngle), collection_fraction(na));
  }
  EXPECT_THROW(collection_fraction(1.5), DomainError);
  EXPECT_THROW(CollectionOptic(0.0), DomainError);
  EXPECT_DOUBLE_EQ(collection_fraction(CollectionOptic(0.5)), 0.0625);
}

TEST(Collection, ErrorMentionsNa) {
  try {
    collection_fraction(1.5);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("NA out of range"), std::string::npos);
  }
}

TEST(ConeMixing, GrowsWithAperture) {
  EXPECT_EQ(cone_averaged_mixing(0.0), 0.0);
  double prev = 0.0;
  for (double na : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const double m = cone_averaged_mixing(na, 60, 60);
    EXPECT_GT(m, prev);
    EXPECT_LT(m, 1.0);
    prev = m;
  }
}

}  // namespace
