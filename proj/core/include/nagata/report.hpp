#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

namespace nagata {

enum class Verdict { pass, fail, sampled_pass };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

/// Outcome of a verifier. A failing report always carries a witness that
/// names the points (by index) and the values of the violated inequality.
struct CheckReport {
  Verdict verdict = Verdict::pass;
  std::uint64_t checked = 0;
  nlohmann::json witness = nullptr;
  std::string note;

  bool ok() const noexcept { return verdict != Verdict::fail; }

  static CheckReport passed(std::uint64_t checked, std::string note = {});
  static CheckReport failed(std::uint64_t checked, nlohmann::json witness,
                            std::string note = {});

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

}  // namespace nagata
