#pragma once

#include "lorflow/minkowski.hpp"

namespace lorflow {

/// An oriented affine hyperplane {x in R^d : n.x = c} with unit normal n,
/// i.e. a point of the submanifold T^d = {(n, c, c) : |n| = 1} of the
/// Lorentzian unit quadric in R^{d+2,1}.
class HyperplanePoint {
  public:
    /// Normalizes the supplied normal; throws on a (near-)zero normal.
    HyperplanePoint(Vec normal, double offset);

    /// Trusts that `normal` is already unit length. Used where unit norm is
    /// structural (geodesic combinations) and drift itself is under test.
    static HyperplanePoint unit_unchecked(Vec normal, double offset);

    const Vec& normal() const { return normal_; }
    double offset() const { return offset_; }
    int dim() const { return static_cast<int>(normal_.size()); }

    /// The Minkowski embedding (n, c, c); Lorentzian norm 1 by cancellation.
    MinkowskiVector embed() const;

  private:
    HyperplanePoint() = default;
    Vec normal_;
    double offset_ = 0.0;
};

/// Tangent-plane representation of an oriented hypersurface point: the
/// hyperplane through `point` with the given normal, offset c = n.point.
/// The normal is renormalized; it must be unit within 1e-9.
HyperplanePoint lorentz_map(const Vec& point, const Vec& unit_normal);

/// A point of the dual projective space: a line of linear forms on R^{d+1},
/// stored as any nonzero representative.
struct DualProjectivePoint {
    Vec homogeneous;

    explicit DualProjectivePoint(Vec h) : homogeneous(std::move(h)) {
        if (homogeneous.size() < 3)
            throw std::invalid_argument("DualProjectivePoint needs at least 3 coordinates");
        if (homogeneous.norm() == 0.0)
            throw std::invalid_argument("DualProjectivePoint must be nonzero");
    }
};

/// Diffeomorphism from the dual projective space minus the point at infinity
/// onto T^d. Normalizes by the reciprocal norm of the first d coordinates and
/// negates the last one, so that nu_map(<(n, -c)>) = (n, c) and the dual map
/// of a hypersurface composes with nu_map to its tangent-plane map.
HyperplanePoint nu_map(const DualProjectivePoint& p);

/// Inverse of nu_map: (n, c) -> <(n_1, ..., n_d, -c)>.
DualProjectivePoint nu_inverse(const HyperplanePoint& z);

} // namespace lorflow
