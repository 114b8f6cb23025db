#pragma once

#include "quatroid/realization/realization.hpp"

#include <stdexcept>
#include <string>

namespace quat::svg {

struct Unrenderable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// 3 x 8 real homogeneous coordinates
using RealPoints = Eigen::Matrix<double, 3, Eigen::Dynamic>;

RealPoints to_real(const Configuration& p);
RealPoints to_real(const Matrix<QuadExt>& p);  // Unrenderable when a coordinate is not real

// points, the lines of q through their points and the conics of q sampled from their quadratic forms
std::string render(const RealPoints& p, const Pair& q, const std::string& title);

}  // namespace quat::svg
