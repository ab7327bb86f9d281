#pragma once

#include <string>
#include <vector>

#include "superflow/superflows.hpp"

namespace superflow {

enum class FixedPointClass { pentagon_center, triangle_center, edge_vertex };

std::string to_string(FixedPointClass c);

struct FixedPoint {
  ExactVector<Golden> location;  // unnormalized direction
  FixedPointClass cls;
  int index;  // +1 for pentagon and triangle centres, -1 for edges
  std::array<double, 3> unit_direction() const;
};

/// The 12 + 20 + 30 fixed directions of the icosahedral superflow.
/// Each is checked to be an exact zero of the field. Requires name I.
std::vector<FixedPoint> enumerate_fixed_points(const Superflow& s);

/// Sign of the Jacobian determinant of the tangential field at a unit fixed
/// point, by central differences in an orthonormal tangent frame.
/// Throws VerificationFailure if |det| < 1e-8.
int numeric_index(const Superflow& s, const FixedPoint& p, double step = 1e-5);

/// Raw determinant used by numeric_index.
double linearization_determinant(const Superflow& s, const std::array<double, 3>& unit_point, double step = 1e-5);

struct ZeroScanHit {
  std::array<double, 3> location;  // triangle centroid on the unit sphere
  int winding;                      // local index of the tangent field
};

/// Completeness scan: every icosphere triangle around which the tangent field
/// of a spherical superflow winds nontrivially. Resolution at most 4095.
std::vector<ZeroScanHit> scan_sphere_zeros(const Superflow& s, int resolution);

enum class LevelSetKind { empty, isolated_points, circles, great_circle_arcs };

std::string to_string(LevelSetKind k);

struct LevelSetClass {
  double xi = 0.0;
  int component_count = 0;   // measured on the grid
  int expected_count = 0;    // from the classification
  LevelSetKind component_kind = LevelSetKind::empty;
  int case_number = 0;       // 1..7
  int resolution = 0;
  bool consistent() const { return component_count == expected_count; }
};

/// Lower and upper critical values of V on the unit sphere.
double level_set_lower_threshold();  // -(2 + sqrt5) / 5
double level_set_upper_threshold();  // (2 + sqrt5) / 27

/// Classification case (1..7) for an exact xi, with point counts at the thresholds.
LevelSetClass classify_level_set_exact(const Golden& xi);

/// Counts components of {V = xi} on the unit sphere by union-find over a
/// frequency-`resolution` icosphere. At xi = 0 small caps around the 30
/// crossing points of the six great circles are removed so arcs separate.
/// Throws InvalidArgument if resolution < 64 or xi lies within 1e-9 of a
/// threshold (boundary case, refine manually).
LevelSetClass classify_level_set(double xi, int resolution);

}  // namespace superflow
