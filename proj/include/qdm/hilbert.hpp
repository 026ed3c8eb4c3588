#pragma once

#include <vector>

#include "qdm/linalg.hpp"

namespace qdm {

/// Hermitian idempotent operator. Construction validates the projector
/// axioms at kAlgebraTol; rank-1 projectors additionally have trace 1.
class Projector {
public:
    static Projector from_operator(const Operator& op, double tol = kAlgebraTol);

    const Operator& base() const { return base_; }
    std::size_t dim() const { return base_.dim(); }

    Projector complement() const;

private:
    explicit Projector(Operator base) : base_(std::move(base)) {}
    Operator base_;
};

/// Mutually orthogonal projectors summing to the identity.
class SpectralFamily {
public:
    static SpectralFamily from_projectors(std::vector<Projector> members,
                                          double tol = kAlgebraTol);

    const std::vector<Projector>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }

private:
    explicit SpectralFamily(std::vector<Projector> members) : members_(std::move(members)) {}
    std::vector<Projector> members_;
};

struct ProjectorReport {
    double hermiticity_deviation = 0.0;
    double idempotency_deviation = 0.0;
    double trace = 0.0;
    double trace_deviation = 0.0;  // |trace - 1|, the rank-1 check
    bool hermitian = false;
    bool idempotent = false;
    bool trace_one = false;

    bool is_projector() const { return hermitian && idempotent; }
    bool is_rank_one_projector() const { return hermitian && idempotent && trace_one; }
};

struct MeasureReport {
    std::vector<double> probabilities;
    double total = 0.0;
    double unit_deviation = 0.0;        // |mu(1) - 1|
    double additivity_deviation = 0.0;  // |sum mu(P_i) - mu(sum P_i)|
    bool passes = false;
};

Complex inner_product(const StateVector& bra, const StateVector& ket);

Projector projector_from_ket(const StateVector& ket);

ProjectorReport validate_projector(const Operator& op, double tol = kAlgebraTol);

double born_probability(const StateVector& state, const Projector& event);

StateVector collapse(const StateVector& state, const Projector& event);

double expectation(const StateVector& state, const Operator& op);

SpectralFamily spectral_family_from_basis(std::size_t dimension);

MeasureReport check_generalized_measure(const StateVector& state, const SpectralFamily& family,
                                        double tol = kAlgebraTol);

}  // namespace qdm
