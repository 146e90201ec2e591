#include "tendonsim/wire.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "tendonsim/errors.hpp"

namespace tendonsim {

namespace {

void check_params(const WireParams& params) {
  if (!(params.stiffness > 0.0)) {
    throw std::domain_error("wire stiffness must be positive, got " +
                            std::to_string(params.stiffness));
  }
  if (!(params.natural_length > 0.0)) {
    throw std::domain_error("wire natural length must be positive, got " +
                            std::to_string(params.natural_length));
  }
  if (!(params.dead_band >= 0.0)) {
    throw std::domain_error("wire dead band must be nonnegative, got " +
                            std::to_string(params.dead_band));
  }
}

}  // namespace

double excess_strain(const WireParams& params, double length) {
  check_params(params);
  if (!(length > 0.0)) {
    throw std::domain_error("wire length must be positive, got " + std::to_string(length));
  }
  const double s = (length - params.natural_length) - params.dead_band;
  return s > 0.0 ? s : 0.0;
}

double tension(const WireParams& params, double length) {
  const double s = excess_strain(params, length);
  const double t = std::exp(params.stiffness * s);
  return params.baseline == Baseline::Normalized ? t - 1.0 : t;
}

double strain_energy(const WireParams& params, double length) {
  const double s = excess_strain(params, length);
  if (s == 0.0) {
    return 0.0;
  }
  const double k = params.stiffness;
  const double grown = (std::exp(k * s) - 1.0) / k;
  return params.baseline == Baseline::Normalized ? grown - s : grown;
}

std::pair<Vec3, Vec3> wire_force(const Wire& wire) {
  const Vec3 span = wire.anchor_b - wire.anchor_a;
  const double length = norm(span);
  if (length == 0.0) {
    throw DegenerateGeometryError("wire anchors coincide");
  }
  const double t = tension(wire.params, length);
  const Vec3 on_a = (t / length) * span;  // pulls a toward b
  return {on_a, -on_a};
}

}  // namespace tendonsim
