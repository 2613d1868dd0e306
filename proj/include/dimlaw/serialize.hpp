#pragma once

#include "json.hpp"

#include "dimlaw/linalg.hpp"
#include "dimlaw/pi.hpp"
#include "dimlaw/verify.hpp"

namespace dimlaw {

/// Rationals serialize as "p/q" strings so nothing is lost to floating point.
nlohmann::json to_json(const RatVec& v);
nlohmann::json to_json(const RatMatrix& m);
nlohmann::json to_json(const PiSolution& solution);
nlohmann::json to_json(const InvarianceReport& report);
nlohmann::json to_json(const FitResult& fit);

/// Quoted statistics are rounded to 9 significant digits so reports compare
/// equal across platforms whose libm differs in the last bits.
double round_sig9(double value);

}  // namespace dimlaw
