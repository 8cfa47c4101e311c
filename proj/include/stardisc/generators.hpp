#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stardisc/core.hpp"

namespace stardisc {

enum class GeneratorKind { random, halton, hammersley, grid };

const char* to_string(GeneratorKind kind);
std::optional<GeneratorKind> parse_generator_kind(std::string_view name);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::halton;
  Index n = 0;
  Index dim = 0;
  std::uint64_t seed = 0;      // random only
  std::vector<int> bases;      // halton/hammersley; empty means first primes
  Index points_per_axis = 0;   // grid; 0 means derive from n = m^dim
};

// First `count` primes.
std::vector<int> first_primes(std::size_t count);

// Digit reversal of `i` in `base` about the radix point.
double radical_inverse(std::uint64_t i, int base);

// Throws invalid_spec on n < 1, dim < 1, repeated or non-prime bases, a
// wrong number of bases, or a grid whose n is not points_per_axis^dim.
void validate(const GeneratorSpec& spec);

// Deterministic in the spec; all coordinates lie in [0,1).
//   random      mt19937_64(seed), each draw mapped to (draw >> 11) * 2^-53,
//               coordinates filled point by point
//   halton      point i has coordinate j = radical_inverse(i + 1, bases[j])
//   hammersley  point i = (i/n, radical_inverse(i, bases[0..d-2]))
//   grid        all midpoints (2i - 1)/(2m) per axis, last axis fastest
PointSet generate(const GeneratorSpec& spec);

// "kind=halton n=64 d=2 bases=2,3", used as the CSV comment header.
std::string describe(const GeneratorSpec& spec);

}  // namespace stardisc
