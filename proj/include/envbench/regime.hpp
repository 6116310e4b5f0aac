#pragma once

#include <string>
#include <string_view>

#include "envbench/error.hpp"

namespace envbench {

// Per-axis coverage regime of a point relative to the training envelope.
// Train rows carry the literal marker In-train; test rows carry one of
// IT (in-train), IP (interpolation), EX (extrapolation).
enum class Regime { InTrain, IT, IP, EX };

inline std::string_view regime_name(Regime r) {
    switch (r) {
        case Regime::InTrain: return "In-train";
        case Regime::IT: return "IT";
        case Regime::IP: return "IP";
        case Regime::EX: return "EX";
    }
    return "?";
}

inline Regime parse_regime(std::string_view s) {
    if (s == "In-train") return Regime::InTrain;
    if (s == "IT") return Regime::IT;
    if (s == "IP") return Regime::IP;
    if (s == "EX") return Regime::EX;
    fail("unknown regime label: '" + std::string(s) + "'");
}

}  // namespace envbench
