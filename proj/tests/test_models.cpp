#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "wged/datasets.hpp"
#include "wged/models.hpp"

using namespace wged;
using models::Kind;

namespace {

mle::Sample glass() { return mle::make_sample(datasets::glass_fibre()); }

}  // namespace

TEST_CASE("kind names round trip and parameter counts match the layouts") {
    for (Kind k : {Kind::ED, Kind::GED, Kind::BED, Kind::BGED, Kind::WGED}) {
        CHECK(models::kind_from_name(models::kind_name(k)) == k);
    }
    CHECK(models::param_count(Kind::ED) == 1);
    CHECK(models::param_count(Kind::GED) == 2);
    CHECK(models::param_count(Kind::BED) == 3);
    CHECK(models::param_count(Kind::BGED) == 4);
    CHECK(models::param_count(Kind::WGED) == 3);
    CHECK_THROWS_AS(models::kind_from_name("weibull"), std::invalid_argument);
}

TEST_CASE("make_spec validates shape and positivity") {
    CHECK_NOTHROW(models::make_spec(Kind::GED, {1.0, 2.0}));
    CHECK_THROWS_AS(models::make_spec(Kind::GED, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(models::make_spec(Kind::GED, {1.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(models::make_spec(Kind::ED, {-1.0}), std::domain_error);
}

TEST_CASE("exponential density and cdf in closed form") {
    CHECK(models::ed_cdf(2.0, 0.5) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-14));
    CHECK(models::ed_logpdf(2.0, 0.5) ==
          doctest::Approx(std::log(2.0) - 1.0).epsilon(1e-14));
    CHECK(models::ed_cdf(2.0, 0.0) == 0.0);
}

TEST_CASE("exponential fit is the reciprocal mean") {
    const mle::Sample s = glass();
    const models::GenericFit ed = models::ed_fit(s);
    CHECK(ed.converged);
    CHECK(ed.spec.params[0] == doctest::Approx(1.0 / s.mean()).epsilon(1e-14));
    CHECK(ed.spec.params[0] == doctest::Approx(0.6636468977141052).epsilon(1e-13));
    CHECK(ed.loglik == doctest::Approx(-88.83031824463698).epsilon(1e-12));
}

TEST_CASE("generalized exponential density and cdf at hand points") {
    // F(x) = (1 - e^{-lambda x})^alpha
    const double x = std::log(2.0);
    CHECK(models::ged_cdf(2.0, 1.0, x) == doctest::Approx(0.25).epsilon(1e-14));
    const double f = 2.0 * (1.0 - std::exp(-x)) * std::exp(-x);
    CHECK(models::ged_logpdf(2.0, 1.0, x) == doctest::Approx(std::log(f)).epsilon(1e-13));
    // alpha = 1 reduces to the exponential
    for (double t : {0.1, 0.7, 2.0}) {
        CHECK(models::ged_cdf(1.0, 0.8, t) ==
              doctest::Approx(models::ed_cdf(0.8, t)).epsilon(1e-13));
        CHECK(models::ged_logpdf(1.0, 0.8, t) ==
              doctest::Approx(models::ed_logpdf(0.8, t)).epsilon(1e-13));
    }
}

TEST_CASE("generalized exponential fit on the glass fibre data") {
    const models::GenericFit ged = models::ged_fit(glass());
    CHECK(ged.converged);
    CHECK(ged.spec.params[0] == doctest::Approx(31.348915).epsilon(1e-6));
    CHECK(ged.spec.params[1] == doctest::Approx(2.6115705).epsilon(1e-6));
    CHECK(ged.loglik == doctest::Approx(-31.3834721).epsilon(1e-8));
}

TEST_CASE("beta exponential reduces to the exponential at a = b = 1") {
    for (double t : {0.2, 1.0, 3.0}) {
        CHECK(models::bed_cdf(1.0, 1.0, 0.7, t) ==
              doctest::Approx(models::ed_cdf(0.7, t)).epsilon(1e-12));
        CHECK(models::bed_logpdf(1.0, 1.0, 0.7, t) ==
              doctest::Approx(models::ed_logpdf(0.7, t)).epsilon(1e-12));
    }
    // cdf slope matches the density
    const double h = 1e-6;
    const double fd =
        (models::bed_cdf(2.0, 3.0, 0.5, 1.0 + h) - models::bed_cdf(2.0, 3.0, 0.5, 1.0 - h)) /
        (2.0 * h);
    CHECK(std::exp(models::bed_logpdf(2.0, 3.0, 0.5, 1.0)) == doctest::Approx(fd).epsilon(1e-7));
}

TEST_CASE("beta exponential likelihood and fit on the glass fibre data") {
    const mle::Sample s = glass();
    const auto paper_point = models::make_spec(Kind::BED, {17.7786, 22.7222, 0.3898});
    CHECK(models::loglik(paper_point, s) == doctest::Approx(-24.12708).epsilon(1e-6));
    const models::GenericFit bed = models::bed_fit(s);
    CHECK(bed.converged);
    CHECK(bed.loglik == doctest::Approx(-23.9515388).epsilon(1e-7));
    // the fitted optimum dominates the published parameter point
    CHECK(bed.loglik > models::loglik(paper_point, s));
}

TEST_CASE("beta generalized exponential reduces to its special cases") {
    for (double t : {0.2, 1.0, 3.0}) {
        // a = b = 1 gives the generalized exponential
        CHECK(models::bged_cdf(1.0, 1.0, 2.5, 0.7, t) ==
              doctest::Approx(models::ged_cdf(2.5, 0.7, t)).epsilon(1e-12));
        CHECK(models::bged_logpdf(1.0, 1.0, 2.5, 0.7, t) ==
              doctest::Approx(models::ged_logpdf(2.5, 0.7, t)).epsilon(1e-12));
        // alpha = 1 on top of that gives the exponential
        CHECK(models::bged_cdf(1.0, 1.0, 1.0, 0.7, t) ==
              doctest::Approx(models::ed_cdf(0.7, t)).epsilon(1e-12));
    }
}

TEST_CASE("beta generalized exponential fit on the glass fibre data") {
    const mle::Sample s = glass();
    const models::GenericFit bged = models::bged_fit(s);
    CHECK(bged.converged);
    CHECK(bged.loglik == doctest::Approx(-14.5851755).epsilon(1e-7));
    // the four-parameter family nests the two- and three-parameter ones
    CHECK(bged.loglik >= models::ged_fit(s).loglik);
    CHECK(bged.loglik >= models::bed_fit(s).loglik);
}

TEST_CASE("generic dispatcher agrees with the dedicated fitters") {
    const mle::Sample s = glass();
    const models::GenericFit via_dispatch = models::fit(Kind::GED, s);
    const models::GenericFit direct = models::ged_fit(s);
    CHECK(via_dispatch.loglik == doctest::Approx(direct.loglik).epsilon(1e-13));
    CHECK(via_dispatch.spec.params == direct.spec.params);

    const models::GenericFit w = models::fit(Kind::WGED, s);
    const mle::FitResult ref = mle::fit_mle(s);
    CHECK(w.loglik == doctest::Approx(ref.loglik).epsilon(1e-13));
    CHECK(w.spec.params[0] == doctest::Approx(ref.params.a).epsilon(1e-13));
    CHECK(w.spec.params[1] == doctest::Approx(ref.params.b).epsilon(1e-13));
    CHECK(w.spec.params[2] == doctest::Approx(ref.params.lambda).epsilon(1e-13));
}

TEST_CASE("model_cdf dispatches every family") {
    const double x = 1.3;
    CHECK(models::model_cdf(models::make_spec(Kind::ED, {0.7}), x) ==
          doctest::Approx(models::ed_cdf(0.7, x)).epsilon(1e-14));
    CHECK(models::model_cdf(models::make_spec(Kind::GED, {2.0, 0.7}), x) ==
          doctest::Approx(models::ged_cdf(2.0, 0.7, x)).epsilon(1e-14));
    CHECK(models::model_cdf(models::make_spec(Kind::BED, {2.0, 3.0, 0.7}), x) ==
          doctest::Approx(models::bed_cdf(2.0, 3.0, 0.7, x)).epsilon(1e-14));
    CHECK(models::model_cdf(models::make_spec(Kind::BGED, {2.0, 3.0, 1.5, 0.7}), x) ==
          doctest::Approx(models::bged_cdf(2.0, 3.0, 1.5, 0.7, x)).epsilon(1e-14));
    CHECK(models::model_cdf(models::make_spec(Kind::WGED, {1.0, 1.0, 1.0}), x) ==
          doctest::Approx(cdf(Params(1.0, 1.0, 1.0), x)).epsilon(1e-14));
}
