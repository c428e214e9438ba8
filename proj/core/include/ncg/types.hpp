#pragma once

#include <Eigen/Core>

namespace ncg {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

}  // namespace ncg
