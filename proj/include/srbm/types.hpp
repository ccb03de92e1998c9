#pragma once

#include <Eigen/Dense>

namespace srbm {

using Matrix  = Eigen::MatrixXd;
using Vector  = Eigen::VectorXd;
using Matrix2 = Eigen::Matrix2d;
using Vector2 = Eigen::Vector2d;
using Index   = Eigen::Index;

/// Largest entry magnitude; zero for empty matrices.
inline double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double max_abs(const Vector& v) {
    return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

}  // namespace srbm
