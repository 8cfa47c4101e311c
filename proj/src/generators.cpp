#include "stardisc/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

namespace stardisc {

const char* to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::random: return "random";
    case GeneratorKind::halton: return "halton";
    case GeneratorKind::hammersley: return "hammersley";
    case GeneratorKind::grid: return "grid";
  }
  return "unknown";
}

std::optional<GeneratorKind> parse_generator_kind(std::string_view name) {
  for (auto k : {GeneratorKind::random, GeneratorKind::halton,
                 GeneratorKind::hammersley, GeneratorKind::grid})
    if (name == to_string(k)) return k;
  return std::nullopt;
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

// m with m^d == n, if any.
std::optional<Index> integer_root(Index n, Index d) {
  const auto guess = static_cast<Index>(
      std::llround(std::pow(static_cast<double>(n), 1.0 / static_cast<double>(d))));
  for (Index m = std::max<Index>(1, guess - 1); m <= guess + 1; ++m) {
    Index p = 1;
    for (Index j = 0; j < d && p <= n; ++j) p *= m;
    if (p == n) return m;
  }
  return std::nullopt;
}

std::size_t expected_bases(const GeneratorSpec& spec) {
  return spec.kind == GeneratorKind::hammersley
             ? static_cast<std::size_t>(spec.dim - 1)
             : static_cast<std::size_t>(spec.dim);
}

std::vector<int> bases_of(const GeneratorSpec& spec) {
  return spec.bases.empty() ? first_primes(expected_bases(spec)) : spec.bases;
}

[[noreturn]] void bad_spec(const std::string& msg) {
  throw Error(ErrorKind::invalid_spec, msg);
}

}  // namespace

std::vector<int> first_primes(std::size_t count) {
  std::vector<int> out;
  for (int p = 2; out.size() < count; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

double radical_inverse(std::uint64_t i, int base) {
  const double inv = 1.0 / base;
  double scale = inv;
  double r = 0.0;
  while (i > 0) {
    r += static_cast<double>(i % static_cast<std::uint64_t>(base)) * scale;
    i /= static_cast<std::uint64_t>(base);
    scale *= inv;
  }
  return r;
}

void validate(const GeneratorSpec& spec) {
  if (spec.n < 1) bad_spec("n must be at least 1");
  if (spec.dim < 1) bad_spec("dimension must be at least 1");
  if (spec.kind == GeneratorKind::halton ||
      spec.kind == GeneratorKind::hammersley) {
    if (!spec.bases.empty()) {
      if (spec.bases.size() != expected_bases(spec))
        bad_spec(std::string(to_string(spec.kind)) + " needs " +
                 std::to_string(expected_bases(spec)) + " bases");
      if (!std::all_of(spec.bases.begin(), spec.bases.end(), is_prime))
        bad_spec("bases must be primes");
      if (std::set<int>(spec.bases.begin(), spec.bases.end()).size() !=
          spec.bases.size())
        bad_spec("bases must be pairwise distinct");
    }
  }
  if (spec.kind == GeneratorKind::grid) {
    if (spec.points_per_axis > 0) {
      const auto root = integer_root(spec.n, spec.dim);
      if (!root || *root != spec.points_per_axis)
        bad_spec("grid n must equal points_per_axis^d");
    } else if (!integer_root(spec.n, spec.dim)) {
      bad_spec("grid n = " + std::to_string(spec.n) +
               " is not a perfect power of d = " + std::to_string(spec.dim));
    }
  }
}

PointSet generate(const GeneratorSpec& spec) {
  validate(spec);
  const Index n = spec.n;
  const Index d = spec.dim;
  PointMatrix pts(n, d);

  switch (spec.kind) {
    case GeneratorKind::random: {
      std::mt19937_64 rng(spec.seed);
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < d; ++j)
          pts(i, j) = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      break;
    }
    case GeneratorKind::halton: {
      const auto bases = bases_of(spec);
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < d; ++j)
          pts(i, j) = radical_inverse(static_cast<std::uint64_t>(i + 1), bases[j]);
      break;
    }
    case GeneratorKind::hammersley: {
      const auto bases = bases_of(spec);
      for (Index i = 0; i < n; ++i) {
        pts(i, 0) = static_cast<double>(i) / static_cast<double>(n);
        for (Index j = 1; j < d; ++j)
          pts(i, j) = radical_inverse(static_cast<std::uint64_t>(i), bases[j - 1]);
      }
      break;
    }
    case GeneratorKind::grid: {
      const Index m = *integer_root(n, d);
      for (Index i = 0; i < n; ++i) {
        Index rest = i;
        for (Index j = d - 1; j >= 0; --j) {
          const Index c = rest % m;
          rest /= m;
          pts(i, j) = static_cast<double>(2 * c + 1) / static_cast<double>(2 * m);
        }
      }
      break;
    }
  }
  return PointSet(std::move(pts));
}

std::string describe(const GeneratorSpec& spec) {
  std::ostringstream s;
  s << "kind=" << to_string(spec.kind) << " n=" << spec.n << " d=" << spec.dim;
  if (spec.kind == GeneratorKind::random) s << " seed=" << spec.seed;
  if (spec.kind == GeneratorKind::halton ||
      spec.kind == GeneratorKind::hammersley) {
    s << " bases=";
    const auto bases = bases_of(spec);
    for (std::size_t j = 0; j < bases.size(); ++j) s << (j ? "," : "") << bases[j];
  }
  if (spec.kind == GeneratorKind::grid)
    s << " points_per_axis=" << integer_root(spec.n, spec.dim).value_or(0);
  return s.str();
}

}  // namespace stardisc
