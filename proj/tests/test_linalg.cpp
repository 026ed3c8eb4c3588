#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qdm/linalg.hpp"

using namespace qdm;

TEST_CASE("angle helpers") {
    CHECK(deg_to_rad(180.0) == doctest::Approx(std::numbers::pi).epsilon(1e-12));
    CHECK(normalize_deg(0.0) == 0.0);
    CHECK(normalize_deg(360.0) == 0.0);
    CHECK(normalize_deg(-90.0) == 270.0);
    CHECK(normalize_deg(720.0 + 45.0) == doctest::Approx(45.0).epsilon(1e-12));
}

TEST_CASE("state vector enforces unit norm") {
    CHECK_NOTHROW(StateVector({Complex(1.0, 0.0), Complex(0.0, 0.0)}));
    CHECK_THROWS_AS(StateVector({Complex(1.0, 0.0), Complex(0.5, 0.0)}), std::invalid_argument);
    CHECK_THROWS_AS(StateVector({}), std::invalid_argument);

    const StateVector v = StateVector::normalized({Complex(3.0, 0.0), Complex(4.0, 0.0)});
    CHECK(v[0].real() == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(v[1].real() == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(std::abs(v.norm() - 1.0) <= kUnitNormTol);
    CHECK_THROWS_AS(StateVector::normalized({Complex(0.0, 0.0)}), std::invalid_argument);
}

TEST_CASE("polar construction") {
    const StateVector v = StateVector::from_polar_deg({0.6, 0.8}, {90.0, 0.0});
    CHECK(v[0].real() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(v[0].imag() == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(v[1].real() == doctest::Approx(0.8).epsilon(1e-12));
    CHECK_THROWS_AS(StateVector::from_polar_deg({1.0}, {0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("basis states") {
    const StateVector e1 = StateVector::basis(3, 1);
    CHECK(e1.dim() == 3);
    CHECK(e1[0] == Complex(0.0, 0.0));
    CHECK(e1[1] == Complex(1.0, 0.0));
    CHECK_THROWS_AS(StateVector::basis(2, 5), std::invalid_argument);
}

TEST_CASE("operator algebra") {
    const Operator id = Operator::identity(2);
    CHECK(id.at(0, 0) == Complex(1.0, 0.0));
    CHECK(id.at(0, 1) == Complex(0.0, 0.0));

    Operator a(2);
    a.at(0, 0) = Complex(1.0, 0.0);
    a.at(0, 1) = Complex(0.0, 2.0);
    a.at(1, 0) = Complex(0.0, -2.0);
    a.at(1, 1) = Complex(3.0, 0.0);

    CHECK(a.hermiticity_deviation() <= 1e-15);
    CHECK(a.trace() == Complex(4.0, 0.0));
    CHECK(a.max_abs_diff(a.adjoint()) <= 1e-15);

    const Operator sum = a + a;
    CHECK(sum.at(1, 1) == Complex(6.0, 0.0));
    const Operator diff = a - a;
    CHECK(diff.max_abs_diff(Operator(2)) == 0.0);
    const Operator sq = a * a;
    // [[1,2i],[-2i,3]]^2 = [[5,8i],[-8i,13]]
    CHECK(sq.at(0, 0) == Complex(5.0, 0.0));
    CHECK(sq.at(0, 1) == Complex(0.0, 8.0));
    CHECK(sq.at(1, 1) == Complex(13.0, 0.0));
    CHECK(a.scaled(Complex(0.0, 1.0)).at(0, 1) == Complex(-2.0, 0.0));

    const auto w = a.apply({Complex(1.0, 0.0), Complex(0.0, 0.0)});
    CHECK(w[0] == Complex(1.0, 0.0));
    CHECK(w[1] == Complex(0.0, -2.0));
}

TEST_CASE("diagonal operator") {
    const Operator d = Operator::diagonal({2.0, -1.0, 0.5});
    CHECK(d.dim() == 3);
    CHECK(d.at(1, 1) == Complex(-1.0, 0.0));
    CHECK(d.at(0, 2) == Complex(0.0, 0.0));
}

TEST_CASE("dimension mismatches rejected") {
    CHECK_THROWS_AS(Operator::identity(2) + Operator::identity(3), std::invalid_argument);
    CHECK_THROWS_AS(Operator::identity(2) * Operator::identity(3), std::invalid_argument);
    CHECK_THROWS_AS(Operator(2).apply({Complex(1.0, 0.0)}), std::invalid_argument);
}
