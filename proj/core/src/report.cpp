#include "nagata/report.hpp"

#include "nagata/errors.hpp"

namespace nagata {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::sampled_pass:
      return "sampled-pass";
  }
  return "fail";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "pass") return Verdict::pass;
  if (s == "fail") return Verdict::fail;
  if (s == "sampled-pass") return Verdict::sampled_pass;
  throw InputError("unknown verdict '" + s + "'");
}

CheckReport CheckReport::passed(std::uint64_t checked, std::string note) {
  return {Verdict::pass, checked, nullptr, std::move(note)};
}

CheckReport CheckReport::failed(std::uint64_t checked, nlohmann::json witness,
                                std::string note) {
  return {Verdict::fail, checked, std::move(witness), std::move(note)};
}

}  // namespace nagata
