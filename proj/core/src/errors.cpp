#include "nagata/errors.hpp"

namespace nagata {

Error::Error(const std::string& what, nlohmann::json payload)
    : std::runtime_error(what), payload_(std::move(payload)) {}

}  // namespace nagata
