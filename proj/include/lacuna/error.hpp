#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace lacuna {

/// Domain error with a stable machine-readable identifier.
/// The id ("zero-denominator", "inverted-enclosure", ...) is part of the
/// library contract; the message is free-form diagnostic text.
class Error : public std::runtime_error {
public:
    Error(std::string id, const std::string& message)
        : std::runtime_error(message), id_(std::move(id)) {}

    const std::string& id() const noexcept { return id_; }

private:
    std::string id_;
};

} // namespace lacuna
