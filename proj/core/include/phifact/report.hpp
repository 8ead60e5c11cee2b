#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace phifact {

// Outcome of one mechanical check. passed is true iff no counterexample was
// recorded; at most kMaxListed counterexamples are kept, failures() counts all.
class VerificationReport {
 public:
  static constexpr std::size_t kMaxListed = 64;

  explicit VerificationReport(std::string claim_id, nlohmann::json parameters = nlohmann::json::object());

  const std::string& claim_id() const noexcept { return claim_id_; }
  const nlohmann::json& parameters() const noexcept { return parameters_; }
  bool passed() const noexcept { return failures_ == 0; }
  std::uint64_t checked_count() const noexcept { return checked_; }
  std::uint64_t failures() const noexcept { return failures_; }
  const std::vector<nlohmann::json>& counterexamples() const noexcept { return counterexamples_; }
  const std::string& notes() const noexcept { return notes_; }

  void set_parameter(const std::string& key, nlohmann::json value) { parameters_[key] = std::move(value); }
  void count(std::uint64_t n = 1) noexcept { checked_ += n; }
  void fail(nlohmann::json counterexample);
  void note(const std::string& line);

  // Merge another report on the same claim (parallel partial checks).
  void absorb(const VerificationReport& other);

  nlohmann::json to_json() const;
  // One line, no trailing newline.
  std::string to_json_line() const;

 private:
  std::string claim_id_;
  nlohmann::json parameters_;
  std::uint64_t checked_ = 0;
  std::uint64_t failures_ = 0;
  std::vector<nlohmann::json> counterexamples_;
  std::string notes_;
};

}  // namespace phifact
