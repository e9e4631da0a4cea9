#pragma once

// Constrained spin-7/2 models whose three-layer image keeps only two-spin
// interactions. Each solver fixes the free parameters, solves the linear
// conditions on the reduced constants for the remaining couplings, and
// checks the conditions again on the result.

#include "spinmap/couplings.hpp"

#include <cstdint>

namespace spinmap {

struct PeriodicModel {
  SpinCouplings couplings;
  LayerCouplings layers;
  BigRational K1;  // common intra-layer coupling
  BigRational K2;  // common glue coupling per unit gamma: K_{b,a} = gamma * K2
};

struct FreeModel {
  SpinCouplings couplings;
  LayerCouplings layers;
  BigRational K1;
  BigRational K3;  // K_{2,1} = K_{3,2} = gamma * K3, K_{3,1} = 0
};

struct ExactModel {
  SpinCouplings couplings;
  LayerCouplings layers;
  BigRational K11;
  BigRational K22;
  BigRational K33;
};

/// No multi-spin or cross terms, K11 = K22 = K33, K21 = K31 = K32.
PeriodicModel solve_periodic_constraints(const BigRational& J77, const BigRational& h6, std::int64_t gamma);

/// No multi-spin or cross terms, K11 = K22 = K33, K21 = K32, K31 = 0.
FreeModel solve_free_constraints(const BigRational& J77, const BigRational& h6, std::int64_t gamma);

/// No multi-spin, cross or glue terms: three decoupled Ising layers.
ExactModel solve_exact_case(const BigRational& J55, const BigRational& J57, const BigRational& J77);

}  // namespace spinmap
