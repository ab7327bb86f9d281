#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "superflow/multipoly.hpp"
#include "superflow/ratvf.hpp"
#include "superflow/superflows.hpp"

namespace superflow {

using Point2 = std::array<double, 2>;
using Point3 = std::array<double, 3>;

/// Stereographic projection from (0,0,1) to the plane z = -1.
Point2 stereo_map(const Point3& x);
/// Inverse of stereo_map; always lands on the unit sphere.
Point3 stereo_inverse(const Point2& ab);

enum class ProjectionKind { stereographic_scaled, stereographic_true, orthogonal_x0, orthogonal_diag };

std::string to_string(ProjectionKind k);
ProjectionKind parse_projection_kind(const std::string& s);

/// Orthogonal projections of the tetrahedral field: onto x = 0 restricted to
/// x^2 - y^2 = 1, x > 0, and onto x - y = 0 with coordinates ((x+y)/2, z).
Point2 orthogonal_x0_map(const Point3& x);
Point3 orthogonal_x0_inverse(const Point2& ab);
Point2 orthogonal_diag_map(const Point3& x);
Point3 orthogonal_diag_inverse(const Point2& ab);

struct ProjectedField {
  ProjectionKind kind{};
  SuperflowName source{};
  std::function<Point2(const Point2&)> eval;

  Point2 operator()(const Point2& ab) const { return eval(ab); }
  Point2 to_plane(const Point3& x) const;
  Point3 to_space(const Point2& ab) const;
};

/// Stereographic kinds need a spherical superflow (I or O); orthogonal kinds
/// need the tetrahedral one.
ProjectedField project_field(const Superflow& s, ProjectionKind kind);

struct ContractReport {
  double residual = 0;   // pointwise distance (true kinds) or orbit distance (scaled)
  Point2 projected{};    // tau(F(x, t))
  Point2 planar{};       // planar flow at matched time or nearest orbit point
  bool orbit_distance = false;
};

/// Compares tau(F(x,t)) with the planar flow of the projected field from tau(x).
ContractReport verify_projection_contract(const Superflow& s, ProjectionKind kind, const Point3& x, double t,
                                          double tol = 1e-10);

struct CircleImage {
  std::string label;
  bool is_line = false;
  Point2 center{};       // fitted; for lines a unit direction
  double radius = 0;     // fitted; 0 for lines
  Point2 exact_center{}; // derived from the plane normal
  double exact_radius = 0;
  Point2 stated_center{};
  double stated_radius = 0;
  double fit_residual = 0;  // max deviation of sampled images from the fit
};

/// Images of the singular great circles: icosahedral y = +-phi x, z = +-phi y,
/// x = +-phi z, and the four octahedral planes x +- y +- z = 0.
std::vector<CircleImage> singular_circle_images(int samples = 64);

/// Image of the great circle in the plane n . x = 0, fitted from samples.
CircleImage great_circle_image(const Point3& normal, int samples = 64);

/// W_a Pi + W_b Theta for W = (a + 1/(4a))^2 - b^2 and the diagonal field.
double orbit_equation_check(double a, double b);
/// The numerator of the same expression over a common denominator; zero.
MultiPoly<Golden> orbit_equation_numerator();

/// z^2 f(x/z) appended with a zero component; the input may be inhomogeneous.
RationalVF<Golden> embed_flow_as_projective(const RationalVF<Golden>& planar);

enum class FigureKind { fig2, fig3, fig4, quadratic_deformation };

std::string to_string(FigureKind k);
FigureKind parse_figure_kind(const std::string& s);

struct FigureData {
  FigureKind kind{};
  double window = 0;
  std::string csv;
  std::string svg;
  int boundary_curves = 0;
  std::vector<std::vector<Point2>> closed_curves;
  std::vector<double> areas;
  std::vector<Point2> open_orbit;
};

/// Direction glyphs of a projected field on [-window, window]^2, with the
/// singular circle images drawn for the stereographic I and O cases.
FigureData build_projection_figure(SuperflowName name, ProjectionKind kind, double window, int grid = 29);

/// Builds the figure in memory; grid is the number of glyph rows and columns.
FigureData build_figure(FigureKind kind, int grid = 29);

/// Writes <prefix>.csv and <prefix>.svg; returns the data.
FigureData emit_figure_data(FigureKind kind, int grid, const std::string& prefix);

/// Number of SVG elements carrying class="<cls>".
int count_svg_class(const std::string& svg, const std::string& cls);
/// Number of <tag class="<cls>" elements, e.g. tag = "circle".
int count_svg_elements(const std::string& svg, const std::string& tag, const std::string& cls);

/// Shoelace area of a closed polygon.
double polygon_area(const std::vector<Point2>& pts);

}  // namespace superflow
