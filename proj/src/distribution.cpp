#include "cltbound/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace cltbound {
namespace {

bool same_point(double x, double y) {
    return std::abs(x - y) <= 1e-10 * std::max(1.0, std::max(std::abs(x), std::abs(y)));
}

// Sorts by value and merges coincident points.
std::vector<Atom> merge_sorted(std::vector<Atom> atoms) {
    std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) { return a.value < b.value; });
    std::vector<Atom> merged;
    merged.reserve(atoms.size());
    for (const Atom& a : atoms) {
        if (!merged.empty() && same_point(merged.back().value, a.value)) {
            merged.back().probability += a.probability;
        } else {
            merged.push_back(a);
        }
    }
    return merged;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

DiscreteDistribution::DiscreteDistribution(std::vector<Atom> atoms, std::string id)
    : atoms_(std::move(atoms)), id_(std::move(id)) {
    for (const Atom& a : atoms_) rho_ += a.probability * std::abs(a.value * a.value * a.value);
}

DiscreteDistribution DiscreteDistribution::from_atoms(std::vector<Atom> atoms, std::string id) {
    if (atoms.empty()) throw std::invalid_argument("distribution needs at least one atom");
    for (const Atom& a : atoms) {
        if (!std::isfinite(a.value) || !std::isfinite(a.probability)) {
            throw std::invalid_argument("atom values and probabilities must be finite");
        }
        if (!(a.probability > 0.0)) {
            throw std::invalid_argument("atom probabilities must be > 0, got " + fmt(a.probability));
        }
    }
    atoms = merge_sorted(std::move(atoms));

    double mass = 0.0, mean = 0.0, second = 0.0;
    for (const Atom& a : atoms) {
        mass += a.probability;
        mean += a.probability * a.value;
        second += a.probability * a.value * a.value;
    }
    if (std::abs(mass - 1.0) > kMomentTolerance) {
        throw std::invalid_argument("probabilities sum to " + fmt(mass) + ", expected 1");
    }
    if (std::abs(mean) > kMomentTolerance) {
        throw std::invalid_argument("E X = " + fmt(mean) + ", expected 0");
    }
    if (std::abs(second - 1.0) > kMomentTolerance) {
        throw std::invalid_argument("E X^2 = " + fmt(second) + ", expected 1");
    }
    return DiscreteDistribution(std::move(atoms), std::move(id));
}

DiscreteDistribution DiscreteDistribution::rademacher() {
    return from_atoms({{-1.0, 0.5}, {1.0, 0.5}}, "rademacher");
}

DiscreteDistribution DiscreteDistribution::two_point(double p) {
    if (!(p >= 1e-6 && p <= 1.0 - 1e-6)) {
        throw std::invalid_argument("two-point mass p must lie in [1e-6, 1 - 1e-6], got " + fmt(p));
    }
    const double q = 1.0 - p;
    return from_atoms({{-std::sqrt(q / p), p}, {std::sqrt(p / q), q}}, "two-point(p=" + fmt(p) + ")");
}

DiscreteDistribution DiscreteDistribution::two_point_with_rho(double rho) {
    if (!(rho >= 1.0) || !std::isfinite(rho)) {
        throw std::invalid_argument("rho must be finite and >= 1, got " + fmt(rho));
    }
    // With u = sqrt(p(1-p)), rho = (1 - 2u^2)/u, so 2u^2 + rho u - 1 = 0.
    const double u = (-rho + std::sqrt(rho * rho + 8.0)) / 4.0;
    const double pq = u * u;
    const double p = 2.0 * pq / (1.0 + std::sqrt(std::max(0.0, 1.0 - 4.0 * pq)));
    DiscreteDistribution d = two_point(p);
    d.id_ = "two-point(rho=" + fmt(rho) + ")";
    return d;
}

DiscreteDistribution DiscreteDistribution::symmetric_three_point(double p0) {
    if (!(p0 > 0.0 && p0 <= 1.0 - 1e-6)) {
        throw std::invalid_argument("three-point mass p0 must lie in (0, 1 - 1e-6], got " + fmt(p0));
    }
    const double x = 1.0 / std::sqrt(1.0 - p0);
    const double side = 0.5 * (1.0 - p0);
    return from_atoms({{-x, side}, {0.0, p0}, {x, side}}, "three-point(p0=" + fmt(p0) + ")");
}

bool DiscreteDistribution::symmetric() const {
    const std::size_t k = atoms_.size();
    for (std::size_t i = 0; i < k; ++i) {
        const Atom& lo = atoms_[i];
        const Atom& hi = atoms_[k - 1 - i];
        if (!same_point(lo.value, -hi.value) || lo.probability != hi.probability) return false;
    }
    return true;
}

DiscreteDistribution DiscreteDistribution::reflected() const {
    std::vector<Atom> flipped;
    flipped.reserve(atoms_.size());
    for (auto it = atoms_.rbegin(); it != atoms_.rend(); ++it) flipped.push_back({-it->value, it->probability});
    return DiscreteDistribution(std::move(flipped), id_ + "-reflected");
}

SumDistribution::SumDistribution(const DiscreteDistribution& dist, int n, std::size_t support_cap) : n_(n) {
    if (n < 1) throw std::invalid_argument("sample size n must be >= 1");

    std::vector<Atom> current = dist.atoms();
    std::vector<Atom> next;
    for (int step = 1; step < n; ++step) {
        next.clear();
        next.reserve(current.size() * dist.atoms().size());
        for (const Atom& s : current) {
            for (const Atom& a : dist.atoms()) next.push_back({s.value + a.value, s.probability * a.probability});
        }
        current = merge_sorted(std::move(next));
        next = {};
        if (current.size() > support_cap) {
            throw std::length_error("convolution support " + std::to_string(current.size()) +
                                    " exceeds the cap " + std::to_string(support_cap));
        }
    }

    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    points_.reserve(current.size());
    probs_.reserve(current.size());
    for (const Atom& a : current) {
        points_.push_back(a.value * scale);
        probs_.push_back(a.probability);
    }
    prefix_.assign(probs_.size() + 1, 0.0);
    suffix_.assign(probs_.size() + 1, 0.0);
    for (std::size_t i = 0; i < probs_.size(); ++i) prefix_[i + 1] = prefix_[i] + probs_[i];
    for (std::size_t i = probs_.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] + probs_[i];
}

double SumDistribution::total_mass() const { return suffix_.front(); }

double SumDistribution::cdf(double x) const {
    const auto idx = std::upper_bound(points_.begin(), points_.end(), x) - points_.begin();
    return prefix_[idx];
}

double SumDistribution::cdf_left(double x) const {
    const auto idx = std::lower_bound(points_.begin(), points_.end(), x) - points_.begin();
    return prefix_[idx];
}

double SumDistribution::sf(double x) const {
    const auto idx = std::upper_bound(points_.begin(), points_.end(), x) - points_.begin();
    return suffix_[idx];
}

double SumDistribution::sf_left(double x) const {
    const auto idx = std::lower_bound(points_.begin(), points_.end(), x) - points_.begin();
    return suffix_[idx];
}

double exact_convolution_cdf(const DiscreteDistribution& dist, int n, double x, std::size_t support_cap) {
    return SumDistribution(dist, n, support_cap).cdf(x);
}

}  // namespace cltbound
