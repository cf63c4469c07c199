#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "support.hpp"
#include "thermocone/core.hpp"

using namespace thermocone;
using doctest::Approx;

namespace {

const EnergySpectrum kE3(double beta) { return EnergySpectrum({0.0, 1.0, 2.0}, beta); }

}  // namespace

TEST_CASE("gibbs_vector at infinite, zero and finite temperature") {
    const Dist u = gibbs_vector(kE3(0.0));
    for (double x : u.values()) CHECK(x == Approx(1.0 / 3.0).epsilon(1e-15));

    const Dist sharp = gibbs_vector(kE3(std::numeric_limits<double>::infinity()));
    CHECK(sharp[0] == 1.0);
    CHECK(sharp[1] == 0.0);
    CHECK(sharp[2] == 0.0);

    const Dist g = gibbs_vector(kE3(0.2));
    const auto ref = testsupport::gibbs_weights({0.0, 1.0, 2.0}, 0.2);
    for (std::size_t i = 0; i < 3; ++i) CHECK(g[i] == Approx(ref[i]).epsilon(1e-14));
    CHECK(g[0] == Approx(0.4018).epsilon(1e-4));
    CHECK(g[1] == Approx(0.3290).epsilon(1e-4));
    CHECK(g[2] == Approx(0.2693).epsilon(1e-4));
}

TEST_CASE("gibbs_vector rejects negative beta and survives large energy offsets") {
    CHECK_THROWS_AS(kE3(-0.1), Error);
    const EnergySpectrum far({1000.0, 1001.0, 1002.0}, 3.0);
    const auto ref = testsupport::gibbs_weights({0.0, 1.0, 2.0}, 3.0);
    for (std::size_t i = 0; i < 3; ++i) CHECK(far.gibbs()[i] == Approx(ref[i]).epsilon(1e-13));
}

TEST_CASE("beta_order") {
    const EnergySpectrum spec = kE3(0.2);
    const SlopeVector gs = beta_order(gibbs_vector(spec), spec);
    CHECK(gs.order == Order{0, 1, 2});
    for (double s : gs.slopes) CHECK(s == Approx(1.0).epsilon(1e-14));

    const Dist p{0.42, 0.51, 0.07};
    const SlopeVector sv = beta_order(p, spec);
    CHECK(sv.order == Order{1, 0, 2});
    const auto g = testsupport::gibbs_weights({0.0, 1.0, 2.0}, 0.2);
    CHECK(sv.slopes[0] == Approx(0.51 / g[1]).epsilon(1e-14));
    CHECK(sv.slopes[1] == Approx(0.42 / g[0]).epsilon(1e-14));
    CHECK(sv.slopes[2] == Approx(0.07 / g[2]).epsilon(1e-14));
    CHECK(sv.slopes[0] == Approx(1.550).epsilon(1e-3));
    CHECK(sv.slopes[1] == Approx(1.045).epsilon(1e-3));
    CHECK(sv.slopes[2] == Approx(0.260).epsilon(1e-3));

    const EnergySpectrum flat({0.0, 1.0, 2.0, 3.0}, 0.0);
    CHECK(beta_order(Dist{0.43, 0.37, 0.18, 0.02}, flat).order == Order{0, 1, 2, 3});
}

TEST_CASE("beta_order slope vector normalisation") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t d = 2 + trial % 5;
        const EnergySpectrum spec = testsupport::random_spectrum(rng, d, 0.7);
        const Dist p = testsupport::random_dist(rng, d);
        const SlopeVector sv = beta_order(p, spec);
        double s = 0.0;
        for (std::size_t k = 0; k < d; ++k) {
            s += sv.slopes[k] * spec.gibbs()[sv.order[k]];
            if (k) CHECK(sv.slopes[k] <= sv.slopes[k - 1]);
        }
        CHECK(s == Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("tm_curve examples") {
    const EnergySpectrum spec = kE3(0.2);
    const auto& g = spec.gibbs();

    const TMCurve diag = tm_curve(gibbs_vector(spec), spec);
    for (const Point& e : diag.elbows()) CHECK(e.y == Approx(e.x).epsilon(1e-14));

    const TMCurve sharp = tm_curve(Dist{1.0, 0.0, 0.0}, spec);
    REQUIRE(sharp.elbows().size() == 4);
    CHECK(sharp.elbows()[1].x == Approx(g[0]));
    CHECK(sharp.elbows()[1].y == Approx(1.0));
    CHECK(sharp.elbows()[2].x == Approx(g[0] + g[1]));
    CHECK(sharp.elbows()[2].y == Approx(1.0));
    CHECK(sharp.elbows()[3].x == 1.0);

    const TMCurve c = tm_curve(Dist{0.42, 0.51, 0.07}, spec);
    CHECK(c.elbows()[1].x == Approx(0.3290).epsilon(1e-4));
    CHECK(c.elbows()[1].y == Approx(0.51).epsilon(1e-14));
}

TEST_CASE("curve_eval") {
    const EnergySpectrum spec = kE3(0.2);
    const TMCurve diag = tm_curve(gibbs_vector(spec), spec);
    CHECK(curve_eval(diag, 0.37) == Approx(0.37).epsilon(1e-14));

    const TMCurve sharp = tm_curve(Dist{1.0, 0.0, 0.0}, spec);
    CHECK(curve_eval(sharp, spec.gibbs()[0] / 2.0) == Approx(0.5).epsilon(1e-14));

    const EnergySpectrum flat({0.0, 1.0, 2.0, 3.0}, 0.0);
    const std::vector<double> flat_state{0.43, 0.37, 0.18, 0.02};
    const TMCurve f = tm_curve(Dist(flat_state), flat);
    CHECK(curve_eval(f, 0.25) == Approx(0.43).epsilon(1e-14));
    for (double x : {0.1, 0.33, 0.5, 0.61, 0.9}) {
        CHECK(curve_eval(f, x) ==
              Approx(testsupport::curve_at(flat_state, {0.25, 0.25, 0.25, 0.25}, x)).epsilon(1e-14));
    }
    CHECK_THROWS_AS(curve_eval(f, -0.1), Error);
    CHECK_THROWS_AS(curve_eval(f, 1.1), Error);
}

TEST_CASE("thermo_majorizes and compare examples") {
    const EnergySpectrum spec = kE3(0.2);
    const Dist p{0.42, 0.51, 0.07};
    const Dist q{0.52, 0.43, 0.05};
    const Dist g = gibbs_vector(spec);
    CHECK(thermo_majorizes(p, g, spec));
    CHECK(thermo_majorizes(p, p, spec));
    CHECK_FALSE(thermo_majorizes(p, q, spec));
    CHECK_FALSE(thermo_majorizes(q, p, spec));

    CHECK(compare(g, p, spec) == Relation::MajorizedBy);
    CHECK(compare(p, p, spec) == Relation::Equivalent);
    CHECK(compare(p, q, spec) == Relation::Incomparable);
    CHECK(compare(p, g, spec) == Relation::Majorizes);
}

TEST_CASE("tensor examples") {
    const EnergySpectrum spec = kE3(0.2);
    const Dist p{0.42, 0.51, 0.07};

    const Composite trivial = tensor(p, spec, Dist{1.0}, EnergySpectrum({0.0}, 0.2));
    CHECK(testsupport::linf(trivial.state.values(), p.values()) == 0.0);
    CHECK(testsupport::linf(trivial.spectrum.gibbs(), spec.gibbs()) < 1e-15);

    const Composite uu = tensor(Dist{0.5, 0.5}, EnergySpectrum({0.0, 1.0}, 0.0),
                                Dist{1.0 / 3, 1.0 / 3, 1.0 / 3}, EnergySpectrum({0.0, 1.0, 2.0}, 0.0));
    for (double x : uu.state.values()) CHECK(x == Approx(1.0 / 6.0).epsilon(1e-15));
    for (double x : uu.spectrum.gibbs()) CHECK(x == Approx(1.0 / 6.0).epsilon(1e-15));

    const Composite pr = tensor(p, spec, Dist{0.55, 0.45}, EnergySpectrum({0.0, 0.0}, 0.2));
    const std::vector<double> expect{0.231, 0.189, 0.2805, 0.2295, 0.0385, 0.0315};
    CHECK(testsupport::linf(pr.state.values(), expect) < 1e-15);
    CHECK(pr.spectrum.energies() == std::vector<double>{0.0, 0.0, 1.0, 1.0, 2.0, 2.0});

    CHECK_THROWS_AS(tensor(p, spec, Dist{0.5, 0.5}, EnergySpectrum({0.0, 0.0}, 0.3)), Error);
}

TEST_CASE("order axioms: reflexive and transitive") {
    std::mt19937_64 rng(21);
    int chains = 0;
    int mixed = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t d = 2 + trial % 4;
        const EnergySpectrum spec = testsupport::random_spectrum(rng, d, 0.1 + 0.002 * trial);
        const auto& g = spec.gibbs();
        const Dist p = testsupport::random_dist(rng, d);
        const Dist q(testsupport::thermal_descendant(rng, p.values(), g));
        const Dist r(testsupport::thermal_descendant(rng, q.values(), g));
        CHECK(thermo_majorizes(p, p, spec));
        REQUIRE(thermo_majorizes(p, q, spec));
        REQUIRE(thermo_majorizes(q, r, spec));
        CHECK(thermo_majorizes(p, r, spec));
        ++chains;

        // Unconstrained triples: whenever the premises hold, so does the conclusion.
        const Dist a = testsupport::random_dist(rng, d);
        const Dist b = testsupport::random_dist(rng, d);
        const Dist c = testsupport::random_dist(rng, d);
        if (thermo_majorizes(a, b, spec) && thermo_majorizes(b, c, spec)) {
            CHECK(thermo_majorizes(a, c, spec));
            ++mixed;
        }
    }
    CHECK(chains == 1000);
    MESSAGE("unconstrained transitive triples checked: " << mixed);
}

TEST_CASE("beta = 0 reduces to classical majorisation") {
    std::mt19937_64 rng(31);
    int agree = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t d = 2 + trial % 5;
        const EnergySpectrum spec = testsupport::random_spectrum(rng, d, 0.0);
        const Dist p = testsupport::random_dist(rng, d);
        Dist q = testsupport::random_dist(rng, d);
        if (trial % 3 == 0) q = Dist(testsupport::thermal_descendant(rng, p.values(), spec.gibbs()));
        const bool cl_pq = testsupport::classical_majorizes(p.values(), q.values());
        const bool cl_qp = testsupport::classical_majorizes(q.values(), p.values());
        Relation expect = Relation::Incomparable;
        if (cl_pq && cl_qp) expect = Relation::Equivalent;
        else if (cl_pq) expect = Relation::Majorizes;
        else if (cl_qp) expect = Relation::MajorizedBy;
        CHECK(compare(p, q, spec) == expect);
        agree += compare(p, q, spec) == expect;
    }
    CHECK(agree == 2000);
}

TEST_CASE("thermo_majorizes agrees with an independent dense reference") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t d = 2 + trial % 5;
        const EnergySpectrum spec = testsupport::random_spectrum(rng, d, 1.3);
        const Dist p = testsupport::random_dist(rng, d);
        const Dist q = trial % 2 ? testsupport::random_dist(rng, d)
                                 : Dist(testsupport::thermal_descendant(rng, p.values(), spec.gibbs()));
        CHECK(thermo_majorizes(p, q, spec) ==
              testsupport::thermo_majorizes_ref(p.values(), q.values(), spec.gibbs()));
    }
}

TEST_CASE("tensor monotonicity") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t d = 2 + trial % 3;
        const std::size_t k = 2 + trial % 2;
        const double beta = 0.05 + 0.01 * (trial % 100);
        const EnergySpectrum spec = testsupport::random_spectrum(rng, d, beta);
        const EnergySpectrum spec_r = testsupport::random_spectrum(rng, k, beta);
        const Dist p = testsupport::random_dist(rng, d);
        const Dist q(testsupport::thermal_descendant(rng, p.values(), spec.gibbs()));
        const Dist r = testsupport::random_dist(rng, k);
        REQUIRE(thermo_majorizes(p, q, spec));
        const Composite pr = tensor(p, spec, r, spec_r);
        const Composite qr = tensor(q, spec, r, spec_r);
        CHECK(thermo_majorizes(pr.state, qr.state, pr.spectrum));
    }
}

TEST_CASE("Gibbs state is at the bottom; curves are concave with fixed endpoints") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t d = 2 + trial % 6;
        const EnergySpectrum spec = testsupport::random_spectrum(rng, d, 0.01 * (trial % 300));
        const Dist p = testsupport::random_dist(rng, d);
        CHECK(thermo_majorizes(p, gibbs_vector(spec), spec));
        const TMCurve c = tm_curve(p, spec);
        CHECK(c.elbows().size() == d + 1);
        CHECK(c.elbows().front().x == 0.0);
        CHECK(c.elbows().front().y == 0.0);
        CHECK(c.elbows().back().x == 1.0);
        CHECK(c.elbows().back().y == 1.0);
        CHECK(c.concave(kEpsSlope));
        for (std::size_t i = 1; i <= d; ++i) CHECK(c.elbows()[i].x > c.elbows()[i - 1].x);
    }
}

TEST_CASE("tie-break invariance of the curve") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t d = 3 + trial % 3;
        const EnergySpectrum spec = testsupport::random_spectrum(rng, d, 0.8);
        const auto& g = spec.gibbs();
        // Levels 0 and 1 share a slope.
        std::vector<double> p = testsupport::random_simplex(rng, d);
        const double s = (p[0] + p[1]) / (g[0] + g[1]);
        p[0] = s * g[0];
        p[1] = s * g[1];
        const Dist pd(p);
        Order a = beta_order(pd, spec).order;
        auto i0 = std::find(a.begin(), a.end(), std::size_t{0});
        auto i1 = std::find(a.begin(), a.end(), std::size_t{1});
        Order b = a;
        std::iter_swap(b.begin() + (i0 - a.begin()), b.begin() + (i1 - a.begin()));
        const TMCurve ca = curve_from_order(pd.span(), g, a).simplified(1e-9);
        const TMCurve cb = curve_from_order(pd.span(), g, b).simplified(1e-9);
        REQUIRE(ca.elbows().size() == cb.elbows().size());
        for (std::size_t k = 0; k < ca.elbows().size(); ++k) {
            CHECK(ca.elbows()[k].x == Approx(cb.elbows()[k].x).epsilon(1e-12));
            CHECK(ca.elbows()[k].y == Approx(cb.elbows()[k].y).epsilon(1e-12));
        }
    }
}

TEST_CASE("Dist validation") {
    CHECK_THROWS_AS(Dist({0.5, 0.6}), Error);
    CHECK_THROWS_AS(Dist({1.1, -0.1}), Error);
    const Dist clamped({1.0 + 1e-13, -1e-13});
    CHECK(clamped[1] == 0.0);
    CHECK_NOTHROW(QuasiDist({1.3, -0.3}));
    CHECK_THROWS_AS(QuasiDist({1.3, -0.2}), Error);
    CHECK_THROWS_AS(EnergySpectrum({}, 1.0), Error);
}
