#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vdyn/orbits.hpp"

namespace vdyn {

struct ClaimResult {
  std::string id;
  Json params = Json::object();
  bool pass = false;
  Json counterexample = nullptr;

  bool operator==(const ClaimResult&) const = default;
};

struct VerificationReport {
  std::string suite;
  std::vector<ClaimResult> claims;
  std::int64_t duration_ms = 0;

  /// A suite passes iff every claim passes.
  bool passed() const;
};

struct SuiteOptions {
  /// Replace every claim family's default grid when set.
  std::optional<int> ell_max;
  std::optional<int> q_max;
  /// Ceiling on enumerated elements per claim.
  std::size_t max_elements = 5'000'000;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// Suite names accepted by run_suite, "all" excluded.
const std::vector<std::string>& suite_names();

/// Runs every claim of `suite` ("all" runs every suite). Claim ids are
/// "<suite>/<claim>". Throws kInvalidArgument for an unknown suite and
/// kCeilingExceeded when a claim would enumerate past the ceiling.
VerificationReport run_suite(const std::string& suite, const SuiteOptions& options = {});

/// Orbit report of a named action: pro-linext and pro-kreweras act on
/// V x [ell] (q unused); pro-pstrict on L_{V x [ell]}(R^q); row and togpro
/// on PP^ell(V x [q-2]). Checks record the order laws for that action.
OrbitReport orbit_report(const std::string& action, int ell, int q,
                         std::size_t max_elements = 5'000'000);

const std::vector<std::string>& action_names();

/// 4^n (3n)! / ((n+1)! (2n+1)!), the number of Kreweras words of length 3n.
std::uint64_t kreweras_count(int n);

}  // namespace vdyn
