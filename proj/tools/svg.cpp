#include "svg.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace quat::svg {

RealPoints to_real(const Configuration& p) {
  RealPoints out(3, p.size());
  for (int c = 0; c < p.size(); ++c)
    for (int r = 0; r < 3; ++r) out(r, c) = p.points(r, c).convert_to<double>();
  return out;
}

namespace {

std::string quad_str(const QuadExt& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

RealPoints to_real(const Matrix<QuadExt>& p) {
  RealPoints out(3, p.cols());
  for (Eigen::Index c = 0; c < p.cols(); ++c)
    for (int r = 0; r < 3; ++r) {
      const QuadExt& x = p(r, c);
      if (!x.is_real()) throw Unrenderable("coordinate " + quad_str(x) + " of point " + std::to_string(c + 1) + " is not real");
      out(r, c) = x.a().convert_to<double>() + x.b().convert_to<double>() * std::sqrt(static_cast<double>(x.radicand()));
    }
  return out;
}

namespace {

using Vec2 = Eigen::Vector2d;

// a linear form nonzero on every point, so the picture lives in one affine chart
Eigen::Vector3d chart(const RealPoints& p) {
  for (int k = 0; k < 64; ++k) {
    Eigen::Vector3d l(k % 4 == 3 ? 1.0 : 0.0, 0.37 * (k / 4), 1.0 + 0.11 * k);
    if (k == 0) l = Eigen::Vector3d(0, 0, 1);
    double lo = 1e300;
    for (Eigen::Index c = 0; c < p.cols(); ++c) lo = std::min(lo, std::abs(l.dot(p.col(c)) / p.col(c).norm()));
    if (lo > 1e-6) return l;
  }
  throw Unrenderable("no affine chart contains all points");
}

std::string num(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << x;
  return os.str();
}

}  // namespace

std::string render(const RealPoints& hp, const Pair& q, const std::string& title) {
  const Eigen::Vector3d l = chart(hp);
  // basis completing l so that (u.x / l.x, v.x / l.x) are affine coordinates
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(Eigen::Matrix3d(l * l.transpose()), Eigen::ComputeFullV);
  const Eigen::Vector3d u = svd.matrixV().col(1), v = svd.matrixV().col(2);
  auto affine = [&](const Eigen::Vector3d& x) { return Vec2(u.dot(x) / l.dot(x), v.dot(x) / l.dot(x)); };

  std::vector<Vec2> pts;
  for (Eigen::Index c = 0; c < hp.cols(); ++c) pts.push_back(affine(hp.col(c)));
  Vec2 lo = pts[0], hi = pts[0];
  for (const auto& x : pts) lo = lo.cwiseMin(x), hi = hi.cwiseMax(x);
  double span = std::max({hi.x() - lo.x(), hi.y() - lo.y(), 1e-9});
  const Vec2 mid = (lo + hi) / 2;
  lo = mid - Vec2(span, span) * 0.65;
  hi = mid + Vec2(span, span) * 0.65;
  const double size = 600;
  auto sx = [&](const Vec2& x) { return (x.x() - lo.x()) / (hi.x() - lo.x()) * size; };
  auto sy = [&](const Vec2& x) { return size - (x.y() - lo.y()) / (hi.y() - lo.y()) * size; };
  auto inside = [&](const Vec2& x) {
    return x.x() >= lo.x() - span && x.x() <= hi.x() + span && x.y() >= lo.y() - span && x.y() <= hi.y() + span;
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size + 30 << "\" viewBox=\"0 0 "
     << size << ' ' << size + 30 << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<clipPath id=\"frame\"><rect width=\"" << size << "\" height=\"" << size << "\"/></clipPath>\n";
  os << "<g clip-path=\"url(#frame)\" fill=\"none\" stroke-width=\"1.5\">\n";

  for (PointMask f : line_flats(q)) {
    std::vector<Vec2> on;
    for (int i = 0; i < hp.cols(); ++i)
      if ((f >> i) & 1) on.push_back(pts[i]);
    Vec2 a = on[0], b = on[0];
    double far = 0;
    for (const auto& x : on)
      for (const auto& y : on)
        if ((x - y).norm() > far) far = (x - y).norm(), a = x, b = y;
    const Vec2 d = (b - a).normalized() * span * 3;
    os << "<line class=\"line\" data-points=\"" << mask_str(f) << "\" x1=\"" << num(sx(a - d)) << "\" y1=\"" << num(sy(a - d))
       << "\" x2=\"" << num(sx(b + d)) << "\" y2=\"" << num(sy(b + d)) << "\" stroke=\"#c0392b\"/>\n";
  }

  for (PointMask f : conic_flats(q)) {
    Eigen::Matrix<double, 6, 6> m = Eigen::Matrix<double, 6, 6>::Zero();
    std::vector<Vec2> on;
    for (int i = 0; i < hp.cols(); ++i)
      if ((f >> i) & 1) on.push_back(pts[i]);
    for (int r = 0; r < 6 && r < static_cast<int>(on.size()); ++r) {
      const double x = on[r].x(), y = on[r].y();
      m.row(r) << x * x, x * y, y * y, x, y, 1;
    }
    Eigen::JacobiSVD<Eigen::Matrix<double, 6, 6>> s(m, Eigen::ComputeFullV);
    const Eigen::Matrix<double, 6, 1> k = s.matrixV().col(5);
    auto value = [&](const Vec2& p) {
      return k(0) * p.x() * p.x() + k(1) * p.x() * p.y() + k(2) * p.y() * p.y() + k(3) * p.x() + k(4) * p.y() + k(5);
    };
    // second intersection of the line through on[0] in direction t with the conic
    const Vec2 p0 = on[0];
    std::string path;
    bool pen = false;
    Vec2 last;
    const int steps = 720;
    for (int t = 0; t <= steps; ++t) {
      const double th = M_PI * t / steps;
      const Vec2 d(std::cos(th), std::sin(th));
      const double qd = k(0) * d.x() * d.x() + k(1) * d.x() * d.y() + k(2) * d.y() * d.y();
      const double lin = 2 * k(0) * p0.x() * d.x() + k(1) * (p0.x() * d.y() + p0.y() * d.x()) + 2 * k(2) * p0.y() * d.y() +
                         k(3) * d.x() + k(4) * d.y();
      if (std::abs(qd) < 1e-12) {
        pen = false;
        continue;
      }
      const Vec2 x = p0 - (lin / qd) * d;
      if (!inside(x) || std::abs(value(x)) > 1e-6 * (1 + x.squaredNorm()) || (pen && (x - last).norm() > span)) {
        pen = false;
        if (!inside(x)) continue;
      }
      path += (pen ? " L" : " M") + num(sx(x)) + ' ' + num(sy(x));
      pen = true;
      last = x;
    }
    os << "<path class=\"conic\" data-points=\"" << mask_str(f) << "\" d=\"" << path << "\" stroke=\"#2c6fbb\"/>\n";
  }
  os << "</g>\n";

  for (std::size_t i = 0; i < pts.size(); ++i) {
    os << "<circle class=\"point\" cx=\"" << num(sx(pts[i])) << "\" cy=\"" << num(sy(pts[i]))
       << "\" r=\"4\" fill=\"black\"/>\n";
    os << "<text x=\"" << num(sx(pts[i]) + 6) << "\" y=\"" << num(sy(pts[i]) - 6)
       << "\" font-family=\"sans-serif\" font-size=\"13\">" << i + 1 << "</text>\n";
  }
  os << "<text x=\"8\" y=\"" << size + 20 << "\" font-family=\"sans-serif\" font-size=\"13\">" << title << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace quat::svg
