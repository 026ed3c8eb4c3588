#include "qdm/linalg.hpp"

#include <cmath>
#include <numbers>

namespace qdm {

double deg_to_rad(double degrees) { return degrees * std::numbers::pi / 180.0; }

double normalize_deg(double degrees) {
    double d = std::fmod(degrees, 360.0);
    if (d < 0.0) d += 360.0;
    return d;
}

StateVector::StateVector(std::vector<Complex> components)
    : components_(std::move(components)) {
    require(!components_.empty(), "StateVector: dimension must be >= 1");
    double norm2 = 0.0;
    for (const Complex& c : components_) {
        norm2 += std::norm(c);
        require(std::isfinite(c.real()) && std::isfinite(c.imag()),
                "StateVector: components must be finite");
    }
    require(std::abs(norm2 - 1.0) <= kUnitNormTol,
            "StateVector: not unit length (sum |c|^2 = " + std::to_string(norm2) + ")");
}

StateVector StateVector::normalized(std::vector<Complex> components) {
    require(!components.empty(), "StateVector: dimension must be >= 1");
    double norm2 = 0.0;
    for (const Complex& c : components) norm2 += std::norm(c);
    require(norm2 > 0.0, "StateVector: cannot normalize the zero vector");
    const double inv = 1.0 / std::sqrt(norm2);
    for (Complex& c : components) c *= inv;
    return StateVector(std::move(components));
}

StateVector StateVector::from_polar_deg(const std::vector<double>& moduli,
                                        const std::vector<double>& phases_deg) {
    require(moduli.size() == phases_deg.size(),
            "StateVector: moduli and phases must have equal length");
    std::vector<Complex> comps;
    comps.reserve(moduli.size());
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        require(moduli[i] >= 0.0, "StateVector: polar modulus must be >= 0");
        const double theta = deg_to_rad(phases_deg[i]);
        comps.emplace_back(moduli[i] * std::cos(theta), moduli[i] * std::sin(theta));
    }
    return StateVector(std::move(comps));
}

StateVector StateVector::basis(std::size_t dimension, std::size_t index) {
    require(dimension >= 1, "StateVector: dimension must be >= 1");
    require(index < dimension, "StateVector: basis index out of range");
    std::vector<Complex> comps(dimension, Complex(0.0, 0.0));
    comps[index] = Complex(1.0, 0.0);
    return StateVector(std::move(comps));
}

double StateVector::norm() const {
    double norm2 = 0.0;
    for (const Complex& c : components_) norm2 += std::norm(c);
    return std::sqrt(norm2);
}

Operator::Operator(std::size_t dim)
    : dim_(dim), entries_(dim * dim, Complex(0.0, 0.0)) {
    require(dim >= 1, "Operator: dimension must be >= 1");
}

Operator::Operator(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
    require(dim >= 1, "Operator: dimension must be >= 1");
    require(entries_.size() == dim * dim, "Operator: entry count must be dim*dim");
}

Operator Operator::identity(std::size_t dim) {
    Operator id(dim);
    for (std::size_t i = 0; i < dim; ++i) id.at(i, i) = Complex(1.0, 0.0);
    return id;
}

Operator Operator::diagonal(const std::vector<double>& values) {
    Operator d(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) d.at(i, i) = Complex(values[i], 0.0);
    return d;
}

Operator Operator::operator+(const Operator& other) const {
    require(dim_ == other.dim_, "Operator: dimension mismatch");
    Operator out(dim_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] + other.entries_[k];
    return out;
}

Operator Operator::operator-(const Operator& other) const {
    require(dim_ == other.dim_, "Operator: dimension mismatch");
    Operator out(dim_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] - other.entries_[k];
    return out;
}

Operator Operator::operator*(const Operator& other) const {
    require(dim_ == other.dim_, "Operator: dimension mismatch");
    Operator out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t k = 0; k < dim_; ++k) {
            const Complex aik = at(i, k);
            if (aik == Complex(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < dim_; ++j) out.at(i, j) += aik * other.at(k, j);
        }
    return out;
}

Operator Operator::scaled(Complex factor) const {
    Operator out(dim_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] * factor;
    return out;
}

Operator Operator::adjoint() const {
    Operator out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out.at(i, j) = std::conj(at(j, i));
    return out;
}

Complex Operator::trace() const {
    Complex t(0.0, 0.0);
    for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

std::vector<Complex> Operator::apply(const std::vector<Complex>& v) const {
    require(v.size() == dim_, "Operator: dimension mismatch applying to vector");
    std::vector<Complex> out(dim_, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

double Operator::max_abs_diff(const Operator& other) const {
    require(dim_ == other.dim_, "Operator: dimension mismatch");
    double m = 0.0;
    for (std::size_t k = 0; k < entries_.size(); ++k)
        m = std::max(m, std::abs(entries_[k] - other.entries_[k]));
    return m;
}

double Operator::hermiticity_deviation() const {
    double m = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            m = std::max(m, std::abs(at(i, j) - std::conj(at(j, i))));
    return m;
}

}  // namespace qdm
