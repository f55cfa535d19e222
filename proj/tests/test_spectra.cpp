#include <doctest.h>

#include "qosc/hamiltonian.hpp"
#include "qosc/spectra.hpp"

#include <cmath>
#include <string>
#include <vector>

using namespace qosc;

TEST_SUITE("spectra") {

TEST_CASE("eigendecompose returns ascending values and true eigenpairs") {
    const OperatorMatrix h = build_harmonic_ladder(Basis::energy, 8);
    const Spectrum s = eigendecompose(h);
    REQUIRE(s.dim() == 8);
    for (int k = 0; k < 8; ++k) {
        CHECK(std::abs(s.eigenvalues[k] - (k + 0.5)) < 1e-12);
        if (k > 0) CHECK(s.eigenvalues[k] >= s.eigenvalues[k - 1]);
    }
    // Residuals H v = lambda v and orthonormal columns.
    for (int k = 0; k < 8; ++k) {
        const Vector v = s.eigenvectors.col(k);
        const Vector residual = h.entries * v - s.eigenvalues[k] * v;
        CHECK(residual.cwiseAbs().maxCoeff() < 1e-12);
    }
    const Matrix gram = s.eigenvectors.adjoint() * s.eigenvectors;
    CHECK((gram - Matrix::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("eigendecompose rejects non-Hermitian input with the defect") {
    Matrix bad = Matrix::Zero(2, 2);
    bad(0, 1) = 1.0;
    try {
        eigendecompose(OperatorMatrix(bad, false));
        FAIL("expected a rejection");
    } catch (const std::invalid_argument& e) {
        const std::string message = e.what();
        CHECK(message.find("asymmetry") != std::string::npos);
        CHECK(message.find("1") != std::string::npos);  // measured defect
    }
}

TEST_CASE("relative error floors the denominator") {
    CHECK(relative_error(1.02, 1.0) == doctest::Approx(0.02));
    CHECK(relative_error(1.0, -2.0) == doctest::Approx(1.5));
    // A zero reference divides by the 1e-12 floor instead.
    CHECK(relative_error(1e-15, 0.0) == doctest::Approx(1e-3));
    CHECK(relative_error(0.0, 0.0) == 0.0);
}

TEST_CASE("closed-form reference energies match frozen spot values") {
    CHECK(exact_ho_energy(0) == 0.5);
    CHECK(exact_ho_energy(3) == 3.5);

    // Cubic second-order correction at lambda = 0.05.
    CHECK(heisenberg_cubic_energy(0, 0.05) ==
          doctest::Approx(0.49961805555555555).epsilon(1e-14));
    CHECK(heisenberg_cubic_energy(1, 0.05) ==
          doctest::Approx(1.4975347222222222).epsilon(1e-14));
    // Quartic first-plus-second order at lambda = 0.05.
    CHECK(heisenberg_quartic_energy(0, 0.05) ==
          doctest::Approx(0.50896484375).epsilon(1e-14));
    CHECK(heisenberg_quartic_energy(2, 0.05) ==
          doctest::Approx(2.60986328125).epsilon(1e-14));
    // SUSY perturbative levels at g = 0.05.
    CHECK(musin_susy_energy(0, 0, 0.05) ==
          doctest::Approx(-0.0025).epsilon(1e-12));
    CHECK(musin_susy_energy(1, 0, 0.05) ==
          doctest::Approx(0.9825).epsilon(1e-12));
    CHECK(musin_susy_energy(0, 1, 0.05) ==
          doctest::Approx(0.9975).epsilon(1e-12));

    CHECK_THROWS_AS(exact_ho_energy(-1), std::invalid_argument);
    CHECK_THROWS_AS(heisenberg_cubic_energy(-2, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(musin_susy_energy(0, 2, 0.1), std::invalid_argument);
}

TEST_CASE("unit-free parameters scale the reference energies") {
    // hbar omega0 multiplies the harmonic part; the corrections carry their
    // own powers of omega0 and mass.
    ReferenceCurve curve;
    curve.model = ReferenceModel::exact_ho;
    curve.omega0 = 2.0;
    curve.hbar = 3.0;
    CHECK(curve.evaluate(1) == doctest::Approx(9.0));  // 2*3*(1+1/2)

    const double base = heisenberg_cubic_energy(2, 0.1, 1.0, 1.0, 1.0);
    const double heavier = heisenberg_cubic_energy(2, 0.1, 2.0, 1.0, 1.0);
    // Doubling the mass halves the second-order correction.
    const double correction_base = 2.5 - base;
    const double correction_heavier = 2.5 - heavier;
    CHECK(correction_heavier == doctest::Approx(correction_base / 2.0));
}

TEST_CASE("susy reference enumerates boson-fermion pairs by energy") {
    ReferenceCurve curve;
    curve.model = ReferenceModel::musin_susy;
    curve.coupling = 0.05;
    // Index order (n_b, n_f): (0,0), (1,0), (0,1), (2,0), (1,1), ...
    CHECK(curve.evaluate(0) == doctest::Approx(musin_susy_energy(0, 0, 0.05)));
    CHECK(curve.evaluate(1) == doctest::Approx(musin_susy_energy(1, 0, 0.05)));
    CHECK(curve.evaluate(2) == doctest::Approx(musin_susy_energy(0, 1, 0.05)));
    CHECK(curve.evaluate(3) == doctest::Approx(musin_susy_energy(2, 0, 0.05)));
    CHECK(curve.evaluate(4) == doctest::Approx(musin_susy_energy(1, 1, 0.05)));
    CHECK(curve.evaluate(5) == doctest::Approx(musin_susy_energy(3, 0, 0.05)));
    CHECK(curve.evaluate(6) == doctest::Approx(musin_susy_energy(2, 1, 0.05)));
}

TEST_CASE("compare_spectrum on the exact ladder model is error-free") {
    const Spectrum s = eigendecompose(build_harmonic_ladder(Basis::energy, 8));
    ReferenceCurve curve;  // exact-ho defaults
    const ComparisonReport report = compare_spectrum(s, curve, 8, 0.02);
    REQUIRE(report.rows.size() == 8);
    CHECK(report.fraction_within == 1.0);
    for (const ComparisonRow& row : report.rows) {
        CHECK(row.relative_error <= 1e-12);
        CHECK(row.reference == doctest::Approx(row.index + 0.5));
    }
}

TEST_CASE("compare_spectrum fractions match the frozen measurements") {
    // Calibration: a cubic term -alpha X^3 enters the reference with
    // lambda = 3 alpha, a quartic +beta X^4 with lambda = 4 beta.
    SUBCASE("cubic, first 8 at 1%") {
        const Spectrum s = eigendecompose(
            build_anharmonic(Basis::energy, 16, AnharmonicKind::cubic, 0.05));
        ReferenceCurve curve;
        curve.model = ReferenceModel::heisenberg_cubic;
        curve.coupling = 3 * 0.05;
        const ComparisonReport report = compare_spectrum(s, curve, 8, 0.01);
        CHECK(report.fraction_within == doctest::Approx(0.625));  // 5 of 8
        CHECK(report.rows[7].relative_error ==
              doctest::Approx(1.9396e-2).epsilon(1e-3));
    }
    SUBCASE("quartic, first 8 at 5%") {
        const Spectrum s = eigendecompose(build_anharmonic(
            Basis::energy, 16, AnharmonicKind::quartic, 0.05));
        ReferenceCurve curve;
        curve.model = ReferenceModel::heisenberg_quartic;
        curve.coupling = 4 * 0.05;
        const ComparisonReport report = compare_spectrum(s, curve, 8, 0.05);
        CHECK(report.fraction_within == doctest::Approx(0.375));  // 3 of 8
    }
    SUBCASE("susy at 2%: every level except the ground state") {
        const Spectrum s = eigendecompose(build_susy_musin(16, 0.05, 1.0));
        ReferenceCurve curve;
        curve.model = ReferenceModel::musin_susy;
        curve.coupling = 0.05;
        const ComparisonReport report = compare_spectrum(s, curve, 16, 0.02);
        CHECK(report.fraction_within == doctest::Approx(15.0 / 16.0));
        // The interacting ground state computes to ~0 while the perturbative
        // reference is -0.0025, so index 0 misses by construction.
        CHECK(report.rows[0].relative_error > 0.9);
        for (int k = 1; k < 16; ++k) {
            CHECK(report.rows[k].relative_error <= 0.02);
        }
    }
    SUBCASE("position-basis harmonic, first 12 of n=16 at 2%") {
        const Spectrum s =
            eigendecompose(build_harmonic_xp(Basis::position, 16));
        ReferenceCurve curve;
        const ComparisonReport report = compare_spectrum(s, curve, 12, 0.02);
        CHECK(report.fraction_within == doctest::Approx(11.0 / 12.0));
        // Worst offender is the last level at about 4.1%.
        CHECK(report.rows[11].relative_error ==
              doctest::Approx(4.108e-2).epsilon(1e-3));
    }
}

TEST_CASE("compare_spectrum validates the requested count") {
    const Spectrum s = eigendecompose(build_harmonic_ladder(Basis::energy, 4));
    ReferenceCurve curve;
    CHECK_THROWS_AS(compare_spectrum(s, curve, 5, 0.02),
                    std::invalid_argument);
    CHECK_THROWS_AS(compare_spectrum(s, curve, 0, 0.02),
                    std::invalid_argument);
    CHECK_NOTHROW(compare_spectrum(s, curve, 4, 0.02));
}

TEST_CASE("ground-state density is normalized, symmetric, and centered") {
    const Spectrum s = eigendecompose(build_harmonic_xp(Basis::position, 16));
    const std::vector<DensityPoint> d = wavefunction_density(s, 0, 16);
    REQUIRE(d.size() == 16);
    double sum = 0.0;
    for (const DensityPoint& p : d) sum += p.density;
    CHECK(std::abs(sum - 1.0) < 1e-12);
    for (int j = 0; j < 16; ++j) {
        CHECK(std::abs(d[j].density - d[15 - j].density) < 1e-10);
        CHECK(d[j].x == doctest::Approx(-d[15 - j].x).epsilon(1e-12));
    }
    // Leftmost lattice site at -7.5 sqrt(2 pi / 16).
    CHECK(d[0].x == doctest::Approx(-4.699928014933126).epsilon(1e-12));
    // The peak sits beside the center (even n has no site at x = 0).
    CHECK(d[7].density == doctest::Approx(d[8].density).epsilon(1e-10));
    CHECK(d[7].density > d[0].density);
}

TEST_CASE("first excited density vanishes toward the center") {
    const Spectrum s = eigendecompose(build_harmonic_xp(Basis::position, 16));
    const std::vector<DensityPoint> d = wavefunction_density(s, 1, 16);
    // Odd state: the two central sites carry less weight than the lobes on
    // either side of them (the node sits between the central sites).
    CHECK(d[7].density < d[6].density);
    CHECK(d[8].density < d[9].density);
    double peak = 0.0;
    for (const DensityPoint& p : d) peak = std::max(peak, p.density);
    CHECK(d[7].density < 0.3 * peak);
    double sum = 0.0;
    for (const DensityPoint& p : d) sum += p.density;
    CHECK(std::abs(sum - 1.0) < 1e-12);
}

TEST_CASE("wavefunction_density validates its arguments") {
    const Spectrum s = eigendecompose(build_harmonic_xp(Basis::position, 8));
    CHECK_THROWS_AS(wavefunction_density(s, -1, 8), std::invalid_argument);
    CHECK_THROWS_AS(wavefunction_density(s, 8, 8), std::invalid_argument);
    CHECK_THROWS_AS(wavefunction_density(s, 0, 16), std::invalid_argument);
}

TEST_CASE("reference model names round-trip through strings") {
    for (ReferenceModel model :
         {ReferenceModel::exact_ho, ReferenceModel::heisenberg_cubic,
          ReferenceModel::heisenberg_quartic, ReferenceModel::musin_susy}) {
        CHECK(reference_model_from_string(to_string(model)) == model);
    }
    CHECK(to_string(ReferenceModel::exact_ho) == "exact-ho");
    CHECK_THROWS_AS(reference_model_from_string("bogus"),
                    std::invalid_argument);
}

}  // TEST_SUITE
