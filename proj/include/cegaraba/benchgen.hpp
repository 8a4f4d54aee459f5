#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "cegaraba/framework.hpp"

namespace cegaraba {

struct GenParams {
  std::size_t n_sentences = 100;
  double asm_ratio = 0.15;
  std::size_t rules_per_head_max = 20;
  std::size_t body_len_max = 20;
  double pref_prob = 0.0;
  std::uint64_t seed = 0;
};

/// round(n_sentences * asm_ratio).
std::size_t assumption_count(const GenParams& p);

/// Throws std::invalid_argument unless 0 < asm_ratio < 1, both maxima are at
/// least 1, pref_prob lies in [0, 1] and at least one assumption results.
void validate(const GenParams& p);

/// Random flat framework over sentences s0..s{n-1}. A seeded shuffle picks the
/// assumptions, each with a uniformly drawn contrary. Every other sentence
/// heads between 1 and rules_per_head_max rules whose bodies hold between 1
/// and min(body_len_max, n) distinct sentences. Preferences follow a random
/// permutation of the assumptions: each earlier one is preferred over each
/// later one with probability pref_prob.
///
/// Draws use std::mt19937_64 with explicit rejection sampling, so a seed gives
/// the same framework on every platform.
Framework gen_framework(const GenParams& p);

/// Portable uniform draw from [lo, hi].
std::uint64_t uniform_between(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi);
/// Portable draw from [0, 1) with 53 random bits.
double unit_real(std::mt19937_64& rng);

}  // namespace cegaraba
