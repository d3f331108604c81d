#include "sgs/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace sgs {

namespace {

double off_diagonal_norm(const std::vector<double>& a, int n) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) sum += a[static_cast<std::size_t>(i * n + j)] * a[static_cast<std::size_t>(i * n + j)];
    return std::sqrt(sum);
}

}  // namespace

std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n) {
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i * n + j)]; };
    const double target = 1e-12 * std::max(n, 1);
    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a, n) > target; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                // Rotation angle from the classic stable formulation.
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = at(p, k);
                    const double aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> values(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = at(i, i);
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

Spectrum eigenvalues(const SignedGraph& g) {
    const int n = g.order();
    std::vector<double> a(static_cast<std::size_t>(n * n), 0.0);
    for (const auto& e : g.edges()) {
        a[static_cast<std::size_t>(e.u * n + e.v)] = e.sign;
        a[static_cast<std::size_t>(e.v * n + e.u)] = e.sign;
    }
    return Spectrum{jacobi_eigenvalues(std::move(a), n), kDefaultPairingTolerance};
}

bool numeric_symmetry_check(const Spectrum& s) {
    const auto n = s.values.size();
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(s.values[i] + s.values[n - 1 - i]) > s.pairing_tolerance) return false;
    return true;
}

}  // namespace sgs
