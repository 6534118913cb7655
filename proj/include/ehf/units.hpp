#pragma once

namespace ehf {

/// Working unit system. Defaults are atomic-style units in the Gaussian
/// convention, so the magnetic coupling keeps its explicit q/c factor.
struct Units {
  double hbar = 1.0;
  double elementary_charge = 1.0;
  double electron_mass = 1.0;
  double light_speed = 137.035999;
};

}  // namespace ehf
