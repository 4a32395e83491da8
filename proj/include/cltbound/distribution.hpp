#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace cltbound {

struct Atom {
    double value = 0.0;
    double probability = 0.0;
};

/// Finite-atom law with E X = 0, E X^2 = 1 (each to 1e-12).
class DiscreteDistribution {
public:
    static constexpr double kMomentTolerance = 1e-12;

    /// Validates positivity, total mass and the first two moments; throws
    /// std::invalid_argument otherwise. Equal values are merged.
    static DiscreteDistribution from_atoms(std::vector<Atom> atoms, std::string id = "atoms");

    // +-1 with probability 1/2 each.
    static DiscreteDistribution rademacher();

    /// -sqrt((1-p)/p) with probability p, sqrt(p/(1-p)) otherwise.
    /// Rejects p outside [1e-6, 1 - 1e-6].
    static DiscreteDistribution two_point(double p);

    /// The two-point law whose third absolute moment equals rho (>= 1); the
    /// mass p <= 1/2 sits on the negative atom.
    static DiscreteDistribution two_point_with_rho(double rho);

    /// 0 with probability p0 and +-1/sqrt(1 - p0) with (1 - p0)/2 each.
    static DiscreteDistribution symmetric_three_point(double p0);

    const std::vector<Atom>& atoms() const { return atoms_; }
    const std::string& id() const { return id_; }
    double rho() const { return rho_; }
    bool symmetric() const;

    // Law of -X.
    DiscreteDistribution reflected() const;

private:
    DiscreteDistribution(std::vector<Atom> atoms, std::string id);

    std::vector<Atom> atoms_;  // sorted by value
    std::string id_;
    double rho_ = 0.0;
};

/// Exact law of (X_1 + ... + X_n) / sqrt(n), built by n - 1 sparse
/// convolutions. Immutable once built.
class SumDistribution {
public:
    static constexpr std::size_t kDefaultSupportCap = 2'000'000;

    /// Throws std::invalid_argument when n < 1 and std::length_error when
    /// the support outgrows `support_cap`.
    SumDistribution(const DiscreteDistribution& dist, int n,
                    std::size_t support_cap = kDefaultSupportCap);

    int n() const { return n_; }

    // Normalized support points, ascending, and their probabilities.
    const std::vector<double>& points() const { return points_; }
    const std::vector<double>& probabilities() const { return probs_; }

    double total_mass() const;

    double cdf(double x) const;       // P(S <= x)
    double cdf_left(double x) const;  // P(S < x)
    double sf(double x) const;        // P(S > x)
    double sf_left(double x) const;   // P(S >= x)

private:
    int n_;
    std::vector<double> points_;
    std::vector<double> probs_;
    std::vector<double> prefix_;  // prefix_[i] = sum of probs_[0..i)
    std::vector<double> suffix_;  // suffix_[i] = sum of probs_[i..end)
};

// F_n(x) = P((X_1 + ... + X_n) / sqrt(n) <= x)
double exact_convolution_cdf(const DiscreteDistribution& dist, int n, double x,
                             std::size_t support_cap = SumDistribution::kDefaultSupportCap);

}  // namespace cltbound
