#include "chowkit/report.hpp"

#include <chrono>
#include <cstdio>
#include <json.hpp>

#include "chowkit/error.hpp"

namespace chowkit {

Check& VerificationReport::run(std::string stage, std::string name, const std::function<void(Check&)>& body) {
  Check c;
  c.stage = std::move(stage);
  c.name = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const Error& e) {
    c.fail(std::string("error: ") + e.what());
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  checks_.push_back(std::move(c));
  return checks_.back();
}

bool VerificationReport::all_passed() const { return failed_count() == 0; }

int VerificationReport::failed_count() const {
  int n = 0;
  for (const auto& c : checks_) n += c.passed ? 0 : 1;
  return n;
}

void VerificationReport::append(const VerificationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

std::string VerificationReport::to_text(bool timings) const {
  std::string out;
  for (const auto& c : checks_) {
    out += c.passed ? "[PASS] " : "[FAIL] ";
    out += c.stage + "/" + c.name;
    if (!c.detail.empty()) out += ": " + c.detail;
    if (timings) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " (%.3fs)", c.seconds);
      out += buf;
    }
    out += '\n';
    for (const auto& [label, text] : c.witnesses) out += "    " + label + " = " + text + '\n';
  }
  out += std::to_string(checks_.size() - static_cast<std::size_t>(failed_count())) + "/" +
         std::to_string(checks_.size()) + " checks passed\n";
  return out;
}

std::string VerificationReport::to_json(bool timings) const {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : checks_) {
    nlohmann::ordered_json j;
    j["stage"] = c.stage;
    j["name"] = c.name;
    j["passed"] = c.passed;
    j["detail"] = c.detail;
    nlohmann::ordered_json w = nlohmann::ordered_json::object();
    for (const auto& [label, text] : c.witnesses) w[label] = text;
    j["witnesses"] = std::move(w);
    if (timings) j["seconds"] = c.seconds;
    checks.push_back(std::move(j));
  }
  nlohmann::ordered_json root;
  root["passed"] = all_passed();
  root["failed"] = failed_count();
  root["checks"] = std::move(checks);
  return root.dump(2) + "\n";
}

}  // namespace chowkit
