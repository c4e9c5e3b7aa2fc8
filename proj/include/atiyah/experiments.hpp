#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "atiyah/configuration.hpp"

namespace atiyah {

enum class SamplerKind { UniformBox, Gaussian, NearCollinear, Clustered };

SamplerKind sampler_kind_from_string(std::string_view s);
std::string to_string(SamplerKind kind);

struct SamplerSpec {
  SamplerKind kind = SamplerKind::UniformBox;
  int n = 4;
  int count = 1;
  std::uint64_t seed = 0;
  double jitter = 1e-4;  // perpendicular / cluster noise scale
};

/// Deterministic configuration sampler; configuration k draws from PRNG
/// stream k of the seed. Never emits a configuration that fails validate().
std::vector<Configuration> sample(const SamplerSpec& spec);

enum class Suite { Gram3, Gram4, Bridge, Conjectures, All };

Suite suite_from_string(std::string_view s);
std::string to_string(Suite suite);

struct VerifyRecord {
  int index = 0;
  int n = 0;
  double absD = 0.0;
  double detH = 0.0;
  double minEig = 0.0;
  double conj1_margin = 0.0;
  double conj2_margin = 0.0;
  double max_residual = 0.0;
  bool error = false;
  std::string message;
};

struct VerifySummary {
  int count = 0;
  int n = 0;
  Suite suite = Suite::All;
  double tol = 1e-9;
  double min_conj1_margin = 0.0;
  double min_conj2_margin = 0.0;
  double max_residual = 0.0;
  int violations = 0;  // records with a conjecture margin below -tol
  int errors = 0;
};

struct VerifyResult {
  std::vector<VerifyRecord> records;
  VerifySummary summary;
};

/// Runs the selected identity/conjecture suite on every configuration.
/// Per-item failures are collected into the records, never fatal. The
/// gram3/gram4 suites require n = 3 / n = 4 respectively; "all" applies
/// whichever checks fit each configuration's n.
VerifyResult verify_batch(const std::vector<Configuration>& configs,
                          Suite suite, double tol = 1e-9);

struct MinimizeResult {
  Configuration bestConfig;
  double bestAbsD = 0.0;
  long iterations = 0;  // Nelder-Mead iterations summed over restarts
  int restarts = 0;
  bool converged = false;
};

/// Derivative-free search for the minimum of |D| over n-point
/// configurations: Nelder-Mead (reflection 1, expansion 2, contraction 0.5,
/// shrink 0.5) on the 3n coordinates, with every simplex vertex recentered
/// to its centroid and rescaled to unit RMS radius each iteration (|D| is
/// invariant, so this only removes the flat gauge directions). A restart
/// stops when the simplex diameter drops below 1e-10 or after 1e5
/// objective evaluations.
MinimizeResult minimize_absD(int n, int restarts, std::uint64_t seed);

}  // namespace atiyah
