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

#include "coopsim/control.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace coopsim {

double gap_control(const VehicleState& ego, const VehicleState& leader, double desired_time_gap,
                   const GapControlGains& gains, const VehicleLimits& limits) {
  const Vec2 offset = leader.pose.position() - ego.pose.position();
  const double longitudinal = offset.dot(ego.pose.forward());
  if (longitudinal <= 0.0) {
    throw std::domain_error("gap_control: leader is not ahead of ego");
  }
  const double gap = longitudinal - 0.5 * (ego.length + leader.length);
  const double accel = gains.spacing * (gap - ego.speed * desired_time_gap) +
                       gains.speed * (leader.speed - ego.speed);
  return std::clamp(accel, limits.accel_min, limits.accel_max);
}

double PidController::step(double error, double dt) {
  if (!(dt > 0.0)) {
    throw std::domain_error("PidController: dt must be positive");
  }
  integral_ = std::clamp(integral_ + error * dt, -gains_.integral_limit, gains_.integral_limit);
  const double derivative = has_previous_ ? (error - previous_error_) / dt : 0.0;
  previous_error_ = error;
  has_previous_ = true;
  return gains_.kp * error + gains_.ki * integral_ + gains_.kd * derivative;
}

void PidController::reset() {
  integral_ = 0.0;
  previous_error_ = 0.0;
  has_previous_ = false;
}

namespace {

using Mat4 = Eigen::Matrix4d;
using Vec4 = Eigen::Vector4d;
using Mat42 = Eigen::Matrix<double, 4, 2>;
using Mat24 = Eigen::Matrix<double, 2, 4>;
using Mat2 = Eigen::Matrix2d;
using Vec2d = Eigen::Vector2d;

struct LinearStage {
  Mat4 A;
  Mat42 B;
  Vec4 c;       // linearization residual
  Vec2d u_ref;  // nominal input along the reference
};

Vec4 bicycle_f(const Vec4& x, const Vec2d& u, double wheelbase, double dt) {
  Vec4 next;
  next(0) = x(0) + x(3) * std::cos(x(2)) * dt;
  next(1) = x(1) + x(3) * std::sin(x(2)) * dt;
  next(2) = normalize_angle(x(2) + x(3) * std::tan(u(1)) / wheelbase * dt);
  next(3) = x(3) + u(0) * dt;
  return next;
}

Vec4 wrapped_delta(const Vec4& a, const Vec4& b) {
  Vec4 d = a - b;
  d(2) = normalize_angle(d(2));
  return d;
}

struct MpcProblem {
  std::vector<Vec4> x_ref;
  std::vector<LinearStage> stages;
  double dt{0.0};
  double wheelbase{0.0};
};

MpcProblem build_problem(const VehicleState& state, const Trajectory& reference,
                         const MpcConfig& config) {
  if (config.horizon < 1) {
    throw std::invalid_argument("mpc_control: horizon must be at least 1");
  }
  const std::size_t needed = static_cast<std::size_t>(config.horizon) + 1;
  if (reference.samples.size() < needed) {
    throw std::invalid_argument("mpc_control: reference does not cover the horizon");
  }
  MpcProblem prob;
  prob.wheelbase = state.wheelbase;
  prob.dt = reference.samples[1].t - reference.samples[0].t;
  if (!(prob.dt > 0.0)) {
    throw std::invalid_argument("mpc_control: reference time step must be positive");
  }
  for (std::size_t k = 0; k < needed; ++k) {
    const TrajectorySample& s = reference.samples[k];
    prob.x_ref.push_back(Vec4(s.x, s.y, s.yaw, s.v));
  }
  for (int k = 0; k < config.horizon; ++k) {
    const Vec4& xr = prob.x_ref[k];
    const double dt = prob.dt;
    const double v = xr(3);
    const double yaw = xr(2);
    LinearStage stage;
    const double a_ref = (prob.x_ref[k + 1](3) - v) / dt;
    const double yaw_rate = normalize_angle(prob.x_ref[k + 1](2) - yaw) / dt;
    const double steer_ref =
        std::clamp(std::atan(prob.wheelbase * yaw_rate / std::max(v, 0.1)),
                   -config.limits.steer_max, config.limits.steer_max);
    stage.u_ref = Vec2d(a_ref, steer_ref);

    const double c = std::cos(yaw);
    const double s = std::sin(yaw);
    const double tan_d = std::tan(steer_ref);
    const double cos_d = std::cos(steer_ref);
    stage.A = Mat4::Identity();
    stage.A(0, 2) = -v * s * dt;
    stage.A(0, 3) = c * dt;
    stage.A(1, 2) = v * c * dt;
    stage.A(1, 3) = s * dt;
    stage.A(2, 3) = tan_d / prob.wheelbase * dt;
    stage.B = Mat42::Zero();
    stage.B(2, 1) = v * dt / (prob.wheelbase * cos_d * cos_d);
    stage.B(3, 0) = dt;
    stage.c = wrapped_delta(bicycle_f(xr, stage.u_ref, prob.wheelbase, dt), prob.x_ref[k + 1]);
    prob.stages.push_back(stage);
  }
  return prob;
}

Vec2d clip_input(const Vec2d& u, const VehicleLimits& limits) {
  return {std::clamp(u(0), limits.accel_min, limits.accel_max),
          std::clamp(u(1), -limits.steer_max, limits.steer_max)};
}

// Rolls a policy forward on the linearized model and accumulates the
// tracking cost sum_{k>=1} dx'Q dx + sum_k u'R u.
struct Rollout {
  double cost{0.0};
  Vec2d first_input{0.0, 0.0};
};

Rollout roll_policy(const MpcProblem& prob, const MpcConfig& config, const Vec4& dx0,
                    const std::vector<Mat24>& K, const std::vector<Vec2d>& d, bool zero_input) {
  const Mat4 Q = config.state_weights.asDiagonal();
  const Mat2 R = config.input_weights.asDiagonal();
  Rollout out;
  Vec4 dx = dx0;
  for (std::size_t k = 0; k < prob.stages.size(); ++k) {
    const LinearStage& st = prob.stages[k];
    Vec2d u;
    if (zero_input) {
      u = Vec2d::Zero();
    } else {
      u = clip_input(st.u_ref - K[k] * dx - d[k], config.limits);
    }
    if (k == 0) {
      out.first_input = u;
    }
    out.cost += u.dot(R * u);
    dx = st.A * dx + st.B * (u - st.u_ref) + st.c;
    out.cost += dx.dot(Q * dx);
  }
  return out;
}

Rollout solve_mpc(const VehicleState& state, const Trajectory& reference,
                  const MpcConfig& config) {
  const MpcProblem prob = build_problem(state, reference, config);
  const Mat4 Q = config.state_weights.asDiagonal();
  const Mat2 R = config.input_weights.asDiagonal();
  const int N = static_cast<int>(prob.stages.size());

  // Backward affine Riccati pass: V_k(dx) = dx'P dx + 2 q'dx + const, with
  // the stage cost dx_{k+1}'Q dx_{k+1} + u_k'R u_k and u = u_ref + du.
  std::vector<Mat24> K(N);
  std::vector<Vec2d> d(N);
  Mat4 P = Mat4::Zero();
  Vec4 q = Vec4::Zero();
  for (int k = N - 1; k >= 0; --k) {
    const LinearStage& st = prob.stages[k];
    const Mat4 W = Q + P;
    const Mat2 Su = R + st.B.transpose() * W * st.B;
    const Mat2 Su_inv = Su.inverse();
    K[k] = Su_inv * (st.B.transpose() * W * st.A);
    d[k] = Su_inv * (R * st.u_ref + st.B.transpose() * (W * st.c + q));
    const Mat4 Acl = st.A - st.B * K[k];
    const Vec4 ccl = st.c - st.B * d[k];
    const Vec2d u_nom = st.u_ref - d[k];
    const Mat4 P_new = K[k].transpose() * R * K[k] + Acl.transpose() * W * Acl;
    const Vec4 q_new = -K[k].transpose() * R * u_nom + Acl.transpose() * (W * ccl + q);
    P = 0.5 * (P_new + P_new.transpose()).eval();
    q = q_new;
  }

  const Vec4 x0(state.pose.x, state.pose.y, state.pose.yaw, state.speed);
  const Vec4 dx0 = wrapped_delta(x0, prob.x_ref[0]);
  const Rollout lqr = roll_policy(prob, config, dx0, K, d, false);
  const Rollout zero = roll_policy(prob, config, dx0, K, d, true);
  return lqr.cost <= zero.cost ? lqr : zero;
}

}  // namespace

ControlCommand mpc_control(const VehicleState& state, const Trajectory& reference,
                           const MpcConfig& config) {
  const Rollout best = solve_mpc(state, reference, config);
  return {best.first_input(0), best.first_input(1)};
}

double mpc_plan_cost(const VehicleState& state, const Trajectory& reference,
                     const MpcConfig& config) {
  return solve_mpc(state, reference, config).cost;
}

double pure_pursuit_steer(const Pose2D& pose, double speed, double wheelbase, const Path2D& path,
                          const PurePursuitConfig& config) {
  const PolylineProjection proj = path.project(pose.position());
  const double lookahead =
      std::clamp(config.lookahead_gain * speed, config.min_lookahead, config.max_lookahead);
  const Vec2 target = path.point_at(proj.s + lookahead);
  const Vec2 offset = target - pose.position();
  const double alpha = normalize_angle(std::atan2(offset.y(), offset.x()) - pose.yaw);
  return std::atan2(2.0 * wheelbase * std::sin(alpha), lookahead);
}

}  // namespace coopsim
