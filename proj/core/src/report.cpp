#include "phifact/report.hpp"

namespace phifact {

VerificationReport::VerificationReport(std::string claim_id, nlohmann::json parameters)
    : claim_id_(std::move(claim_id)), parameters_(std::move(parameters)) {}

void VerificationReport::fail(nlohmann::json counterexample) {
  ++failures_;
  if (counterexamples_.size() < kMaxListed) counterexamples_.push_back(std::move(counterexample));
}

void VerificationReport::note(const std::string& line) {
  if (!notes_.empty()) notes_ += "; ";
  notes_ += line;
}

void VerificationReport::absorb(const VerificationReport& other) {
  checked_ += other.checked_;
  failures_ += other.failures_;
  for (const auto& ce : other.counterexamples_) {
    if (counterexamples_.size() == kMaxListed) break;
    counterexamples_.push_back(ce);
  }
  if (!other.notes_.empty()) note(other.notes_);
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["claim_id"] = claim_id_;
  j["parameters"] = parameters_;
  j["passed"] = passed();
  j["checked_count"] = checked_;
  j["counterexamples"] = counterexamples_;
  std::string notes = notes_;
  if (failures_ > counterexamples_.size()) {
    if (!notes.empty()) notes += "; ";
    notes += std::to_string(failures_) + " failures, first " + std::to_string(counterexamples_.size()) + " listed";
  }
  j["notes"] = notes;
  return j;
}

std::string VerificationReport::to_json_line() const { return to_json().dump(); }

}  // namespace phifact
