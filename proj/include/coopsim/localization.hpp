// Copyright 2026 The coopsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>

namespace coopsim {

/// State estimate over [x, y, yaw, v].
struct GaussianEstimate {
  Eigen::Vector4d mean{Eigen::Vector4d::Zero()};
  Eigen::Matrix4d covariance{Eigen::Matrix4d::Identity()};
};

struct GpsMeasurement {
  double x{0.0};
  double y{0.0};
  double sigma{0.5};  // m, per axis
};

struct ImuMeasurement {
  double accel{0.0};     // longitudinal, m/s^2
  double yaw_rate{0.0};  // rad/s
};

struct KalmanConfig {
  /// Process noise rate, diag(x, y, yaw, v) per second.
  Eigen::Vector4d process_noise_rate{0.01, 0.01, 0.001, 0.1};
};

/// Propagates the unicycle mean and covariance through dt using IMU inputs.
/// P' = F P F^T + Q dt with F the propagation Jacobian.
GaussianEstimate kf_predict(const GaussianEstimate& est, const ImuMeasurement& imu, double dt,
                            const KalmanConfig& config = {});

/// Position update measuring (x, y) with isotropic noise gps.sigma.
/// Throws std::runtime_error when the innovation covariance is singular.
GaussianEstimate kf_update(const GaussianEstimate& est, const GpsMeasurement& gps);

}  // namespace coopsim
