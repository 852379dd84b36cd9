#pragma once

#include <vector>

#include "mldeg/likelihood.hpp"
#include "mldeg/model.hpp"

namespace mldeg {

// Monomial change of coordinates between tori: each output coordinate is a
// Laurent monomial in the input coordinates.
struct MonomialMap {
    std::vector<std::vector<int>> exponents;  // row j = exponents of output j

    long long determinant() const;
    std::vector<Complex> apply(const std::vector<Complex>& point) const;
};

// The smooth base surface {p1 + p3 = 1, p2 + p4 = 1} in (C*)^4, implicitly or
// parametrized by (x, y) -> (x, y, 1-x, 1-y).
TorusModel base_surface_implicit();
TorusModel base_surface_parametrized();

// Degree-m monomial map q = (p1^m, p1/p2, p1*p3, p1*p4). On the base surface
// this reads q = (x^m, x/y, x(1-x), x(1-y)). Odd m >= 1 throughout; for odd m
// the map is injective on the base surface except over (m-1)/2 double points.
MonomialMap degree_m_map(int m);
std::vector<RatFun> image_coordinates(int m);  // the four q's in params (x, y)

// Numerator of q1 + q2 + q3 + q4 - 1 over the parameters. Its zero locus is
// the curve on which the fifth coordinate of the extended model vanishes.
RatPoly boundary_curve_polynomial(int m);

// Self-intersection points of the image surface: for i = 1..(m-1)/2 and
// xi = exp(2*pi*i*sqrt(-1)/m), the point ((1+xi)^-m, 1, xi(1+xi)^-2, xi(1+xi)^-2),
// hit exactly twice by the parametrization.
std::vector<std::vector<Complex>> double_points(int m);

// Exact certificate that 1 - sum(q) is nonzero at every double point, i.e.
// that no nontrivial m-th root of unity w satisfies 2w(1+w)^(m-2) + 1 = 0,
// so all double points survive on the five-coordinate model.
bool double_points_in_torus(int m);

// Parameter preimages (x, y) of a point under the image coordinates, found by
// solving the square subsystem coming from q2 and q3 and filtering the two
// candidates against q1 and q4.
std::vector<std::vector<Complex>> parameter_preimages(int m, const std::vector<Complex>& image_point,
                                                      const TrackerConfig& config);

// Five-coordinate model: the image surface with q5 = 1 - sum(q) appended and
// the double-point preimages excluded, so critical points are counted on the
// smooth locus only. Throws when a double-point fiber is not a point pair.
TorusModel glued_surface_model(int m, const TrackerConfig& config);

// The curve sum(q) = 1 on the image surface, as a constrained parametrized
// model in the four image coordinates.
TorusModel boundary_curve_model(int m);

// Solves {h, dh/dx} and checks dh/dy stays away from zero at every finite
// solution with x, y, 1-x, 1-y all nonzero: no singular point of the boundary
// curve in the region where the model lives.
bool boundary_curve_is_smooth(int m, const TrackerConfig& config);

// chi of the image surface: gluing (m-1)/2 point pairs on a surface with
// chi = 1 drops it by one per pair, so (3 - m) / 2.
long long image_euler_characteristic(int m);

struct FamilyReport {
    int m = 0;
    int double_point_count = 0;

    MLReport surface_ml;   // five-coordinate surface with double points
    MLReport boundary_ml;  // boundary curve

    long long image_chi = 0;    // chi of the image surface
    long long surface_chi = 0;  // chi of the five-coordinate surface
    long long ic_chi = 0;       // surface_chi + number of double points
    long long gap = 0;          // surface ML degree - surface_chi

    bool gap_matches_double_points = false;
    bool bound_holds = false;  // ic_chi >= surface ML degree
    bool bound_tight = false;  // ic_chi == surface ML degree

    bool double_points_certified = false;  // exact nonvanishing certificate
    bool fibers_verified = false;  // two preimages per double point, one generically
    bool boundary_smooth = false;
    bool certified = false;  // all of the above plus both ML runs certified

    std::vector<std::vector<Complex>> double_point_list;
    std::vector<std::vector<Complex>> preimage_list;  // two per double point
};

// Runs the whole program for one member: ML degrees of the five-coordinate
// surface and its boundary curve, chi bookkeeping, the double-point
// certificates, and the comparison of the ML degree against chi.
FamilyReport verify_family(int m, const TrackerConfig& config, int draws = 3);

}  // namespace mldeg
