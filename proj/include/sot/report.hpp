#pragma once

#include <sot/scalar.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace sot {

/// Outcome of sweeping one identity over its case set.
struct IdentityResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  double max_residual = 0.0;
  std::optional<std::string> first_failure;

  bool passed() const { return failures == 0; }
};

/// Structured pass/fail record of a suite. Failures are data, never thrown.
struct VerificationReport {
  std::string suite;
  std::string mode = "exact";
  std::optional<std::uint64_t> seed;
  std::vector<IdentityResult> identities;
  std::vector<std::string> notes;

  std::size_t cases() const {
    return std::accumulate(identities.begin(), identities.end(), std::size_t{0},
                           [](std::size_t n, const IdentityResult& r) { return n + r.cases; });
  }
  std::size_t failures() const {
    return std::accumulate(identities.begin(), identities.end(), std::size_t{0},
                           [](std::size_t n, const IdentityResult& r) { return n + r.failures; });
  }
  double max_residual() const {
    double m = 0.0;
    for (const auto& r : identities) m = std::max(m, r.max_residual);
    return m;
  }
  bool passed() const { return failures() == 0; }

  const IdentityResult* find(const std::string& name) const {
    auto it = std::find_if(identities.begin(), identities.end(),
                           [&](const IdentityResult& r) { return r.name == name; });
    return it == identities.end() ? nullptr : &*it;
  }

  void append(const VerificationReport& other) {
    identities.insert(identities.end(), other.identities.begin(), other.identities.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }
};

/// Accumulates cases for one identity. A case passes when its residual is
/// exactly zero (exact mode) or within the tolerance (float mode).
class IdentitySweep {
 public:
  IdentitySweep(std::string name, double tolerance) : tolerance_(tolerance) { result_.name = std::move(name); }

  /// Records a case by residual. `describe` is only invoked for the first failure.
  void measure(double residual, const std::function<std::string()>& describe) {
    result_.max_residual = std::max(result_.max_residual, residual);
    check(residual <= tolerance_, describe);
  }

  /// Records a pass/fail case with no meaningful residual.
  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.cases;
    if (!ok) {
      ++result_.failures;
      if (!result_.first_failure) result_.first_failure = describe();
    }
  }

  IdentityResult finish() && { return std::move(result_); }
  const IdentityResult& current() const { return result_; }

 private:
  double tolerance_;
  IdentityResult result_;
};

}  // namespace sot
