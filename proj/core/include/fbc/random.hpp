#pragma once

#include <functional>
#include <optional>
#include <random>

#include "fbc/configuration.hpp"

namespace fbc {

struct RandomParams {
  int max_angles = 12;
  int max_degree = 6;
  double trivial_l = 0.5;  // probability of a trivial partition L
  double integral = 0.5;   // probability of choosing d as a multiple of the orbit size
};

/// A configuration satisfying (f1)-(f5) by construction; (f6) may fail.
/// P and L are built from labels that sigma permutes, so that sigma acts on
/// the blocks.
Configuration random_candidate(std::mt19937_64& rng, const RandomParams& params = {});

/// First candidate passing validate() and `accept`, or nullopt after
/// `max_tries` attempts.
std::optional<Configuration> random_configuration(
    std::mt19937_64& rng, const RandomParams& params = {},
    const std::function<bool(const Configuration&)>& accept = {}, int max_tries = 10000);

}  // namespace fbc
