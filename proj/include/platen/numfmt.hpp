#pragma once

#include <string>

namespace platen {

// Fixed-point with `decimals` digits (1..17), then trailing zeros trimmed
// down to one fractional digit. Never uses exponent notation; a value that
// rounds to zero prints as "0.0" regardless of sign.
std::string format_decimal(double value, int decimals);

// Shortest decimal form that parses back to the identical double.
std::string format_shortest(double value);

}  // namespace platen
