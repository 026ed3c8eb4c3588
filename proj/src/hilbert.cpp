#include "qdm/hilbert.hpp"

#include <cmath>

namespace qdm {

namespace {

constexpr double kCollapseFloor = 1e-14;

}  // namespace

Projector Projector::from_operator(const Operator& op, double tol) {
    const ProjectorReport report = validate_projector(op, tol);
    require(report.hermitian,
            "Projector: not Hermitian (deviation " +
                std::to_string(report.hermiticity_deviation) + ")");
    require(report.idempotent,
            "Projector: not idempotent (deviation " +
                std::to_string(report.idempotency_deviation) + ")");
    return Projector(op);
}

Projector Projector::complement() const {
    return Projector(Operator::identity(dim()) - base_);
}

SpectralFamily SpectralFamily::from_projectors(std::vector<Projector> members, double tol) {
    require(!members.empty(), "SpectralFamily: needs at least one projector");
    const std::size_t dim = members.front().dim();
    Operator sum(dim);
    for (const Projector& p : members) {
        require(p.dim() == dim, "SpectralFamily: mixed dimensions");
        sum = sum + p.base();
    }
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const Operator prod = members[i].base() * members[j].base();
            require(prod.max_abs_diff(Operator(dim)) <= tol,
                    "SpectralFamily: members " + std::to_string(i) + " and " +
                        std::to_string(j) + " are not orthogonal");
        }
    require(sum.max_abs_diff(Operator::identity(dim)) <= tol,
            "SpectralFamily: members do not sum to the identity");
    return SpectralFamily(std::move(members));
}

Complex inner_product(const StateVector& bra, const StateVector& ket) {
    require(bra.dim() == ket.dim(), "inner_product: dimension mismatch");
    Complex sum(0.0, 0.0);
    for (std::size_t i = 0; i < bra.dim(); ++i) sum += std::conj(bra[i]) * ket[i];
    return sum;
}

Projector projector_from_ket(const StateVector& ket) {
    const std::size_t n = ket.dim();
    Operator op(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) op.at(i, j) = ket[i] * std::conj(ket[j]);
    return Projector::from_operator(op);
}

ProjectorReport validate_projector(const Operator& op, double tol) {
    ProjectorReport report;
    report.hermiticity_deviation = op.hermiticity_deviation();
    report.idempotency_deviation = (op * op).max_abs_diff(op);
    report.trace = op.trace().real();
    report.trace_deviation = std::abs(report.trace - 1.0);
    report.hermitian = report.hermiticity_deviation <= tol;
    report.idempotent = report.idempotency_deviation <= tol;
    report.trace_one = report.trace_deviation <= tol;
    return report;
}

double born_probability(const StateVector& state, const Projector& event) {
    require(state.dim() == event.dim(), "born_probability: dimension mismatch");
    const std::vector<Complex> pv = event.base().apply(state.components());
    Complex value(0.0, 0.0);
    for (std::size_t i = 0; i < state.dim(); ++i) value += std::conj(state[i]) * pv[i];
    require(std::abs(value.imag()) <= kUnitNormTol,
            "born_probability: non-real quadratic form (imag " +
                std::to_string(value.imag()) + ")");
    double p = value.real();
    require(p >= -kUnitNormTol && p <= 1.0 + kUnitNormTol,
            "born_probability: value " + std::to_string(p) + " outside [0,1]");
    if (p < 0.0) p = 0.0;
    if (p > 1.0) p = 1.0;
    return p;
}

StateVector collapse(const StateVector& state, const Projector& event) {
    require(state.dim() == event.dim(), "collapse: dimension mismatch");
    const double p = born_probability(state, event);
    require(p > kCollapseFloor, "collapse: undefined for a (near-)zero-probability event");
    return StateVector::normalized(event.base().apply(state.components()));
}

double expectation(const StateVector& state, const Operator& op) {
    require(state.dim() == op.dim(), "expectation: dimension mismatch");
    require(op.hermiticity_deviation() <= kAlgebraTol, "expectation: operator is not Hermitian");
    const std::vector<Complex> ov = op.apply(state.components());
    Complex value(0.0, 0.0);
    for (std::size_t i = 0; i < state.dim(); ++i) value += std::conj(state[i]) * ov[i];
    return value.real();
}

SpectralFamily spectral_family_from_basis(std::size_t dimension) {
    require(dimension >= 1, "spectral_family_from_basis: dimension must be >= 1");
    std::vector<Projector> members;
    members.reserve(dimension);
    for (std::size_t i = 0; i < dimension; ++i)
        members.push_back(projector_from_ket(StateVector::basis(dimension, i)));
    return SpectralFamily::from_projectors(std::move(members));
}

MeasureReport check_generalized_measure(const StateVector& state, const SpectralFamily& family,
                                        double tol) {
    MeasureReport report;
    Operator sum(state.dim());
    for (const Projector& p : family.members()) {
        report.probabilities.push_back(born_probability(state, p));
        report.total += report.probabilities.back();
        sum = sum + p.base();
    }
    const double mu_of_sum = expectation(state, sum);
    report.unit_deviation = std::abs(mu_of_sum - 1.0);
    report.additivity_deviation = std::abs(report.total - mu_of_sum);
    report.passes = report.unit_deviation <= tol && report.additivity_deviation <= tol;
    return report;
}

}  // namespace qdm
