#include "abcover/spectrum_target.hpp"

#include <array>
#include <sstream>

#include "abcover/cohomology.hpp"
#include "abcover/errors.hpp"

namespace abcover {
namespace {

constexpr std::int64_t kOracleMaxDegree = 12;
constexpr std::int64_t kOracleMinValue = 1;
constexpr std::int64_t kOracleMaxValue = 6;

std::int64_t h0(std::int64_t m) { return cohomology::h(0, 3, m); }

}  // namespace

TargetResult derive_targets(std::int64_t d) {
  if (d < 2) throw DomainError("degree must be >= 2, got " + std::to_string(d));
  if (d % 2 != 0) return Infeasible{"P_2 non-integral"};
  SpectrumTarget t{d, {5}};
  t.values.insert(t.values.end(), d / 2 - 1, 3);
  t.values.insert(t.values.end(), d / 2 - 1, 2);
  return t;
}

OracleResult derive_targets_oracle(std::int64_t d) {
  if (d < 2) throw DomainError("degree must be >= 2, got " + std::to_string(d));
  if (d > kOracleMaxDegree) {
    throw EffortExceeded("oracle limited to d <= " + std::to_string(kOracleMaxDegree) + ", got " + std::to_string(d));
  }
  OracleResult result;
  if (d % 2 != 0) {
    result.infeasible_reason = "P_2 non-integral";
    return result;
  }
  const std::int64_t slots = d - 1;
  constexpr std::size_t kValues = kOracleMaxValue - kOracleMinValue + 1;

  // counts[j] = multiplicity of value kOracleMaxValue - j; multisets are
  // enumerated as compositions of `slots` into kValues parts.
  std::array<std::int64_t, kValues> counts{};
  auto visit = [&]() {
    std::vector<std::int64_t> values;
    std::int64_t pg = 0, h3 = 0, p2 = 0, p3 = 0;
    for (std::size_t j = 0; j < kValues; ++j) {
      const std::int64_t l = kOracleMaxValue - static_cast<std::int64_t>(j);
      values.insert(values.end(), counts[j], l);
      pg += counts[j] * h0(1 - l);
      h3 += counts[j] * h0(l - 4);
      p2 += counts[j] * h0(2 - l);
      p3 += counts[j] * h0(3 - l);
    }
    if (pg != 0 || h3 != 4) return;
    if (p2 != d / 2 - 1) {
      result.rejected.push_back({values, "P_2"});
    } else if (p3 != 5 * d / 2 - 5) {
      result.rejected.push_back({values, "P_3"});
    } else {
      result.accepted.push_back({d, values});
    }
  };
  auto rec = [&](auto&& self, std::size_t j, std::int64_t remaining) -> void {
    if (j + 1 == kValues) {
      counts[j] = remaining;
      visit();
      return;
    }
    for (std::int64_t c = remaining; c >= 0; --c) {
      counts[j] = c;
      self(self, j + 1, remaining - c);
    }
  };
  rec(rec, 0, slots);
  return result;
}

std::string format_multiset(const std::vector<std::int64_t>& values) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < values.size();) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    os << (i ? ", " : "") << values[i];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  os << '}';
  return os.str();
}

}  // namespace abcover
