#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace chowkit {

/// Outcome of one named verification step. Witnesses are serialized cycles
/// or tables; a failing check carries the offending ones.
struct Check {
  std::string stage;
  std::string name;
  bool passed = true;
  std::string detail;
  std::vector<std::pair<std::string, std::string>> witnesses;
  double seconds = 0.0;

  void fail(std::string why) {
    passed = false;
    if (!detail.empty()) detail += "; ";
    detail += std::move(why);
  }
  void witness(std::string label, std::string text) { witnesses.emplace_back(std::move(label), std::move(text)); }
};

class VerificationReport {
 public:
  void add(Check c) { checks_.push_back(std::move(c)); }
  /// Runs `body` on a fresh passing check and records it with its wall time.
  /// A chowkit::Error thrown by `body` turns into a failure.
  Check& run(std::string stage, std::string name, const std::function<void(Check&)>& body);

  const std::vector<Check>& checks() const { return checks_; }
  bool all_passed() const;
  int failed_count() const;

  /// Timings are left out unless asked for so that reports are reproducible.
  std::string to_text(bool timings = false) const;
  std::string to_json(bool timings = false) const;

  void append(const VerificationReport& other);

 private:
  std::vector<Check> checks_;
};

}  // namespace chowkit
