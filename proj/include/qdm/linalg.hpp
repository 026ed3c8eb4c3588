#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdm {

using Complex = std::complex<double>;

constexpr double kUnitNormTol = 1e-12;
constexpr double kAlgebraTol = 1e-10;

double deg_to_rad(double degrees);

/// Angle normalized to [0, 360).
double normalize_deg(double degrees);

/// Unit ket in C^n. Construction enforces the unit-length invariant;
/// use normalized() to build from un-normalized amplitudes.
class StateVector {
public:
    explicit StateVector(std::vector<Complex> components);

    static StateVector normalized(std::vector<Complex> components);

    /// Polar amplitudes: component i is moduli[i] * e^{i * phases_deg[i] * pi/180}.
    static StateVector from_polar_deg(const std::vector<double>& moduli,
                                      const std::vector<double>& phases_deg);

    static StateVector basis(std::size_t dimension, std::size_t index);

    std::size_t dim() const { return components_.size(); }
    const Complex& operator[](std::size_t i) const { return components_[i]; }
    const std::vector<Complex>& components() const { return components_; }

    double norm() const;

private:
    std::vector<Complex> components_;
};

/// Dense square operator on C^n, row-major storage.
class Operator {
public:
    explicit Operator(std::size_t dim);
    Operator(std::size_t dim, std::vector<Complex> entries);

    static Operator identity(std::size_t dim);
    static Operator diagonal(const std::vector<double>& values);

    std::size_t dim() const { return dim_; }
    Complex& at(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const Complex& at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

    Operator operator+(const Operator& other) const;
    Operator operator-(const Operator& other) const;
    Operator operator*(const Operator& other) const;
    Operator scaled(Complex factor) const;
    Operator adjoint() const;
    Complex trace() const;

    std::vector<Complex> apply(const std::vector<Complex>& v) const;

    /// Largest entrywise |a_ij - b_ij|.
    double max_abs_diff(const Operator& other) const;
    /// Largest deviation from hermiticity, max |a_ij - conj(a_ji)|.
    double hermiticity_deviation() const;

private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

inline void require(bool condition, const std::string& message) {
    if (!condition) throw std::invalid_argument(message);
}

}  // namespace qdm
