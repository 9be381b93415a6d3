#include <doctest.h>

#include <cmath>

#include "bandlab/model.hpp"

using namespace bandlab;

TEST_CASE("derived constants match their formulas") {
    const ModelParams p = derive_params(0.05, 0.25, 1.5, 0.25, 25.0, 1.0, 1.0,
                                        ModelKind::UnlimitedNoCrowd);
    CHECK(p.d == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(p.gamma == doctest::Approx(6.25).epsilon(1e-15));
    CHECK(p.alpha == doctest::Approx(0.0625).epsilon(1e-12));
    CHECK(p.B == doctest::Approx(0.09).epsilon(1e-14));
    CHECK(p.lambda_plus == doctest::Approx(0.1125).epsilon(1e-14));
    CHECK(p.lambda_minus == doctest::Approx(-0.1125).epsilon(1e-14));
    CHECK(p.Q == doctest::Approx(0.9).epsilon(1e-15));
    CHECK(p.Q1 == doctest::Approx(0.9).epsilon(1e-15));
    CHECK(p.Q2 == doctest::Approx(0.9).epsilon(1e-15));
}

TEST_CASE("B and lambda scale as the theorem says") {
    const ModelParams p = derive_params(0.05, 0.25, 1.5, 0.1625, 25.0, 1.0, 1.0,
                                        ModelKind::UnlimitedNoCrowd);
    // d = 1.3: B = (1/0.3) * tau^2 c^2 / mu^2
    CHECK(p.B == doctest::Approx((1.0 / 0.3) * 0.0025 * 2.25 / 0.0625)
                     .epsilon(1e-13));
    CHECK(p.lambda_plus == doctest::Approx(p.alpha * p.B / p.tau).epsilon(1e-13));
}

TEST_CASE("non-positive raw parameters are rejected by field name") {
    CHECK_THROWS_AS(derive_params(0.0, 0.25, 1.5, 0.25, 25.0, 1.0, 1.0,
                                  ModelKind::LimitedCrowd),
                    NonPositiveParameter);
    try {
        derive_params(0.05, -1.0, 1.5, 0.25, 25.0, 1.0, 1.0,
                      ModelKind::LimitedCrowd);
        FAIL("expected NonPositiveParameter");
    } catch (const NonPositiveParameter& e) {
        CHECK(e.field == "mu");
    }
    CHECK_THROWS_AS(derive_params(0.05, 0.25, 1.5, 0.25, 25.0, 1.0,
                                  std::nan(""), ModelKind::LimitedCrowd),
                    NonPositiveParameter);
}

TEST_CASE("d <= 1 is fatal for unlimited kinds, fine for limited ones") {
    CHECK_THROWS_AS(derive_params(0.05, 0.25, 1.5, 0.1, 25.0, 1.0, 1.0,
                                  ModelKind::UnlimitedNoCrowd),
                    ConstraintViolation);
    CHECK_THROWS_AS(derive_params(0.05, 0.25, 1.5, 0.125, 25.0, 1.0, 1.0,
                                  ModelKind::UnlimitedCrowd),
                    ConstraintViolation);
    const ModelParams p = derive_params(0.05, 0.25, 1.5, 0.1, 25.0, 1.0, 1.0,
                                        ModelKind::LimitedNoCrowd);
    CHECK(p.d == doctest::Approx(0.8));
    CHECK(std::isnan(p.B));
    CHECK(std::isnan(p.lambda_plus));
    CHECK(std::isnan(p.lambda_minus));
}

TEST_CASE("kind names round-trip in both spellings") {
    for (ModelKind k : {ModelKind::UnlimitedNoCrowd, ModelKind::UnlimitedCrowd,
                        ModelKind::LimitedCrowd, ModelKind::LimitedNoCrowd})
        CHECK(kind_from_string(to_string(k)) == k);
    CHECK(kind_from_string("LimitedNoCrowd") == ModelKind::LimitedNoCrowd);
    CHECK(kind_from_string("UnlimitedCrowd") == ModelKind::UnlimitedCrowd);
    CHECK_THROWS_AS(kind_from_string("model1"), Error);
}

TEST_CASE("crowd_neutral flags gamma0 = 1/tau") {
    const ModelParams neutral = derive_params(
        0.05, 0.25, 1.5, 0.25, 20.0, 1.0, 1.0, ModelKind::UnlimitedCrowd);
    CHECK(crowd_neutral(neutral));
    const ModelParams active = derive_params(
        0.05, 0.25, 1.5, 0.25, 25.0, 1.0, 1.0, ModelKind::UnlimitedCrowd);
    CHECK(!crowd_neutral(active));
}

TEST_CASE("kind predicates") {
    CHECK(is_limited(ModelKind::LimitedCrowd));
    CHECK(is_limited(ModelKind::LimitedNoCrowd));
    CHECK(!is_limited(ModelKind::UnlimitedNoCrowd));
    CHECK(is_no_crowd(ModelKind::UnlimitedNoCrowd));
    CHECK(is_no_crowd(ModelKind::LimitedNoCrowd));
    CHECK(!is_no_crowd(ModelKind::LimitedCrowd));
}
