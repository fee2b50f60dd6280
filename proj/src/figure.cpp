#include "liealg/figure.hpp"

#include <numbers>
#include <sstream>

#include "liealg/json_io.hpp"

namespace liealg {

namespace {

// Colours follow the usual reading of the reference plot: red source point,
// green tangent, blue true orbit, orange learned locus.
constexpr const char* kSourceColour = "#d62728";
constexpr const char* kTangentColour = "#2ca02c";
constexpr const char* kTrueColour = "#1f77b4";
constexpr const char* kLearnedColour = "#ff7f0e";

class PixelMap {
 public:
  explicit PixelMap(const FigureSpec& s)
      : lo_(s.view_min), sx_(s.width / (s.view_max - s.view_min)),
        sy_(s.height / (s.view_max - s.view_min)), h_(s.height) {}

  double x(double u) const { return (u - lo_) * sx_; }
  double y(double v) const { return h_ - (v - lo_) * sy_; }
  double rx(double r) const { return r * sx_; }
  double ry(double r) const { return r * sy_; }

 private:
  double lo_, sx_, sy_;
  int h_;
};

std::string num(double v) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << v;
  return os.str();
}

}  // namespace

void FigureSpec::validate() const {
  if (orbit_grid_points < 8) throw InputError("figure: orbit grid needs at least 8 points");
  if (width <= 0 || height <= 0) throw InputError("figure: canvas size must be positive");
  if (!(view_max > view_min)) throw InputError("figure: empty view range");
  if (source_point.size() != 2 || !source_point.is_finite()) {
    throw InputError("figure: source point must be a finite 2-vector");
  }
}

FigureData build_figure(const Matrix& a, const FigureSpec& spec) {
  spec.validate();
  if (a.dim() != 2) throw InputError("figure: only 2 x 2 generators can be drawn");
  FigureData fig;
  fig.source = spec.source_point;
  fig.tangent_end = spec.source_point + tangent(a, spec.source_point);
  fig.true_radius = vec_norm(spec.source_point);
  fig.learned_orbit =
      orbit(a, spec.source_point, linspace(0.0, 2.0 * std::numbers::pi, spec.orbit_grid_points));
  return fig;
}

std::string render_svg(const FigureData& fig, const FigureSpec& spec) {
  const PixelMap px(spec);
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.width
     << "\" height=\"" << spec.height << "\" viewBox=\"0 0 " << spec.width << ' ' << spec.height
     << "\">\n"
     << "  <rect x=\"0\" y=\"0\" width=\"" << spec.width << "\" height=\"" << spec.height
     << "\" fill=\"white\"/>\n";

  // axes through the origin
  os << "  <line x1=\"" << num(px.x(spec.view_min)) << "\" y1=\"" << num(px.y(0)) << "\" x2=\""
     << num(px.x(spec.view_max)) << "\" y2=\"" << num(px.y(0))
     << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n"
     << "  <line x1=\"" << num(px.x(0)) << "\" y1=\"" << num(px.y(spec.view_min)) << "\" x2=\""
     << num(px.x(0)) << "\" y2=\"" << num(px.y(spec.view_max))
     << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";

  if (spec.include_true_orbit) {
    os << "  <circle cx=\"" << num(px.x(0)) << "\" cy=\"" << num(px.y(0)) << "\" r=\""
       << num(px.rx(fig.true_radius)) << "\" fill=\"none\" stroke=\"" << kTrueColour
       << "\" stroke-width=\"2\"/>\n";
  }

  os << "  <polyline id=\"learned-orbit\" fill=\"none\" stroke=\"" << kLearnedColour
     << "\" stroke-width=\"2\" stroke-dasharray=\"8,5\" points=\"";
  for (std::size_t i = 0; i < fig.learned_orbit.size(); ++i) {
    const auto& p = fig.learned_orbit[i].point;
    os << (i ? " " : "") << num(px.x(p[0])) << ',' << num(px.y(p[1]));
  }
  os << "\"/>\n";

  os << "  <polyline id=\"tangent\" fill=\"none\" stroke=\"" << kTangentColour
     << "\" stroke-width=\"2\" stroke-dasharray=\"3,3\" points=\"" << num(px.x(fig.source[0])) << ','
     << num(px.y(fig.source[1])) << ' ' << num(px.x(fig.tangent_end[0])) << ','
     << num(px.y(fig.tangent_end[1])) << "\"/>\n";

  // the marker is an ellipse so the reference circle stays the only <circle>
  os << "  <ellipse id=\"source\" cx=\"" << num(px.x(fig.source[0])) << "\" cy=\""
     << num(px.y(fig.source[1])) << "\" rx=\"6\" ry=\"6\" fill=\"" << kSourceColour << "\"/>\n";

  os << "</svg>\n";
  return os.str();
}

std::string orbit_csv(const FigureData& fig) {
  std::string out = "t,p0,p1\n";
  for (const auto& s : fig.learned_orbit) {
    out += format_double(s.t) + ',' + format_double(s.point[0]) + ',' + format_double(s.point[1]) + '\n';
  }
  return out;
}

}  // namespace liealg
