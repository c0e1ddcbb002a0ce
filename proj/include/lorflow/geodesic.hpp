#pragma once

#include "lorflow/hyperplane.hpp"
#include "lorflow/scalar_functions.hpp"

namespace lorflow {

/// The closed-form Lorentzian geodesic in the unit quadric between two
/// hyperplane points z0, z1 with non-antipodal normals:
///   gamma(t) = lambda(t, theta) z1 + lambda(1-t, theta) z0,
/// where cos(theta) = n0.n1. The curve stays in T^d, has constant Lorentzian
/// speed |theta|, and traverses the family of hyperplanes interpolating
/// between the two inputs.
class GeodesicSegment {
  public:
    /// Throws if dimensions differ or the normals are antipodal
    /// (n0.n1 <= -1 + 1e-9).
    GeodesicSegment(HyperplanePoint z0, HyperplanePoint z1);

    const HyperplanePoint& z0() const { return z0_; }
    const HyperplanePoint& z1() const { return z1_; }
    double theta() const { return theta_; }
    int dim() const { return z0_.dim(); }

    /// gamma(t). Values of t outside [0,1] extrapolate along the geodesic.
    /// The result is not renormalized; unit norm of the interpolated normal
    /// is structural and testable.
    HyperplanePoint point(double t) const;

    /// gamma'(0) = (theta/sin theta) (proj_{n0}(n1), (c1 - cos(theta) c0) eps),
    /// or (0, (c1 - c0) eps) for theta = 0. Lorentzian magnitude |theta|.
    MinkowskiVector initial_velocity() const;

    static bool extrapolates(double t) { return t < 0.0 || t > 1.0; }

  private:
    HyperplanePoint z0_, z1_;
    double theta_;
};

inline HyperplanePoint geodesic_point(const GeodesicSegment& seg, double t) {
    return seg.point(t);
}

inline MinkowskiVector geodesic_velocity0(const GeodesicSegment& seg) {
    return seg.initial_velocity();
}

} // namespace lorflow
