#pragma once

#include <string>

namespace thermocone {

inline constexpr int kJsonDigits = 12;
inline constexpr int kCsvDigits = 8;

// %.{digits}g formatting with "inf"/"-inf"/"nan" spelled out; -0 prints as 0.
std::string format_number(double x, int digits);

}  // namespace thermocone
