#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "abcover/cover.hpp"
#include "abcover/smoothness.hpp"

namespace abcover {

struct Fixture {
  std::string name;  // e.g. "deg16"; also the file stem under fixtures/
  std::int64_t degree = 0;
  /// From the defining equations of an explicit example (as opposed to a
  /// solver witness).
  bool from_equations = false;
  smoothness::Verdict expected_smoothness = smoothness::Verdict::Smooth;
  std::string text;  // cover file contents
};

/// Ordered by degree: 2, 4, 6, 8, 16, 18, 32.
const std::vector<Fixture>& fixtures();

/// Throws DomainError for an unknown name.
const Fixture& fixture(const std::string& name);

CoverData fixture_cover(const Fixture& f);

struct FixtureCheck {
  std::string name;
  std::int64_t degree = 0;
  bool ok = false;
  /// First failing check, empty when ok.
  std::string failure;
  std::vector<std::int64_t> spectrum;  // nonzero values, descending
  Invariants invariants;
  smoothness::Verdict smoothness = smoothness::Verdict::Unsupported;
};

/// Checks a cover against the canonical profile of its degree: spectrum
/// equal to derive_targets(d), invariants (4, 0, -3, d, d/2+9, 5d/2+15),
/// and the given smoothness verdict. Never throws on a bad cover; the
/// failure is reported instead.
FixtureCheck check_canonical_cover(const std::string& name, const CoverData& cover,
                                   smoothness::Verdict expected_smoothness);

std::vector<FixtureCheck> verify_fixtures();

}  // namespace abcover
