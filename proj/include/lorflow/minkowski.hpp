#pragma once

#include <Eigen/Dense>
#include <stdexcept>

namespace lorflow {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// A vector of the ambient Minkowski space R^{d+2,1}: the first d+1
/// coordinates are space-like, the last one is time-like.
struct MinkowskiVector {
    Vec coords;

    explicit MinkowskiVector(Vec c) : coords(std::move(c)) {
        if (coords.size() < 4)
            throw std::invalid_argument("MinkowskiVector needs at least 4 coordinates (d >= 2)");
    }

    /// Dimension d of the space whose hyperplanes this geometry parametrizes.
    int ambient_dim() const { return static_cast<int>(coords.size()) - 2; }
};

/// Index-1 inner product: sum of the first d+1 products minus the last one.
inline double lorentz_inner_raw(const Vec& v, const Vec& w) {
    if (v.size() != w.size())
        throw std::invalid_argument("lorentz_inner: dimension mismatch");
    const Eigen::Index n = v.size();
    return v.head(n - 1).dot(w.head(n - 1)) - v[n - 1] * w[n - 1];
}

inline double lorentz_inner(const MinkowskiVector& v, const MinkowskiVector& w) {
    return lorentz_inner_raw(v.coords, w.coords);
}

/// Lorentzian magnitude sqrt(|<v,v>_L|).
inline double lorentz_magnitude(const MinkowskiVector& v) {
    return std::sqrt(std::abs(lorentz_inner(v, v)));
}

} // namespace lorflow
