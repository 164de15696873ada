#pragma once

#include <functional>
#include <optional>

#include "hitreal/errors.hpp"

namespace test_support {

// Runs f and reports which library error it raised, if any.
inline std::optional<hitreal::Errc> raised(const std::function<void()>& f) {
    try {
        f();
    } catch (const hitreal::Error& e) {
        return e.code();
    }
    return std::nullopt;
}

}  // namespace test_support
