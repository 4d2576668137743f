#pragma once

#include <gtest/gtest.h>

#include <functional>
#include <vector>

#include "wass1d/error.hpp"
#include "wass1d/measure.hpp"
#include "wass1d/random.hpp"

namespace wass1d::testing {

inline Measure real_atoms(std::vector<Atom> atoms) {
  return from_atoms(Domain::RealLine, std::move(atoms));
}

inline Measure unit_atoms(std::vector<Atom> atoms) {
  return from_atoms(Domain::UnitInterval, std::move(atoms));
}

inline Measure real_dirac(double c) { return Measure::dirac(Domain::RealLine, c); }
inline Measure unit_dirac(double c) { return Measure::dirac(Domain::UnitInterval, c); }
inline Measure unit_uniform() { return Measure::uniform(Domain::UnitInterval, 0.0, 1.0); }

inline Measure random_any(Rng& rng, Domain d) {
  return rng.coin() ? random_discrete(rng, d).to_measure() : random_piecewise(rng, d);
}

// Code of the Error thrown by f; records a failure when nothing is thrown.
inline ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

}  // namespace wass1d::testing
