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

#include "coopsim/localization.hpp"

#include <cmath>
#include <stdexcept>

#include "coopsim/geometry.hpp"

namespace coopsim {

GaussianEstimate kf_predict(const GaussianEstimate& est, const ImuMeasurement& imu, double dt,
                            const KalmanConfig& config) {
  if (!(dt > 0.0)) {
    throw std::domain_error("kf_predict: dt must be positive");
  }
  const double yaw = est.mean(2);
  const double v = est.mean(3);
  const double c = std::cos(yaw);
  const double s = std::sin(yaw);

  GaussianEstimate out;
  out.mean(0) = est.mean(0) + v * c * dt;
  out.mean(1) = est.mean(1) + v * s * dt;
  out.mean(2) = normalize_angle(yaw + imu.yaw_rate * dt);
  out.mean(3) = v + imu.accel * dt;

  Eigen::Matrix4d F = Eigen::Matrix4d::Identity();
  F(0, 2) = -v * s * dt;
  F(0, 3) = c * dt;
  F(1, 2) = v * c * dt;
  F(1, 3) = s * dt;

  const Eigen::Matrix4d Q = (config.process_noise_rate * dt).asDiagonal();
  out.covariance = F * est.covariance * F.transpose() + Q;
  out.covariance = 0.5 * (out.covariance + out.covariance.transpose()).eval();
  return out;
}

GaussianEstimate kf_update(const GaussianEstimate& est, const GpsMeasurement& gps) {
  if (gps.sigma < 0.0) {
    throw std::domain_error("kf_update: negative measurement noise");
  }
  Eigen::Matrix<double, 2, 4> H = Eigen::Matrix<double, 2, 4>::Zero();
  H(0, 0) = 1.0;
  H(1, 1) = 1.0;
  const Eigen::Matrix2d R = gps.sigma * gps.sigma * Eigen::Matrix2d::Identity();
  const Eigen::Matrix2d S = H * est.covariance * H.transpose() + R;
  const double det = S.determinant();
  if (!std::isfinite(det) || std::abs(det) < 1e-300) {
    throw std::runtime_error("kf_update: singular innovation covariance");
  }
  const Eigen::Matrix<double, 4, 2> K = est.covariance * H.transpose() * S.inverse();
  const Eigen::Vector2d innovation(gps.x - est.mean(0), gps.y - est.mean(1));

  GaussianEstimate out;
  out.mean = est.mean + K * innovation;
  out.mean(2) = normalize_angle(out.mean(2));
  // Joseph form keeps the posterior symmetric PSD even with sigma = 0.
  const Eigen::Matrix4d IKH = Eigen::Matrix4d::Identity() - K * H;
  out.covariance = IKH * est.covariance * IKH.transpose() + K * R * K.transpose();
  out.covariance = 0.5 * (out.covariance + out.covariance.transpose()).eval();
  return out;
}

}  // namespace coopsim
