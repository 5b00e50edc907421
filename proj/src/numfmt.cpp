#include "platen/numfmt.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>
#include <system_error>

#include "platen/error.hpp"

namespace platen {

std::string format_decimal(double value, int decimals) {
  if (decimals < 1 || decimals > 17) {
    throw Error("decimals must be in [1, 17], got " + std::to_string(decimals));
  }
  if (!std::isfinite(value)) {
    throw Error("cannot format a non-finite value");
  }
  // %f never switches to exponent notation, whatever the magnitude
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  std::string out = buf;

  // trim trailing zeros, keeping at least one fractional digit
  const std::size_t point = out.find('.');
  std::size_t last = out.size();
  while (last - point > 2 && out[last - 1] == '0') --last;
  out.erase(last);

  // a value that rounds to zero must not keep its sign
  if (out[0] == '-' && out.find_first_of("123456789") == std::string::npos) {
    out.erase(0, 1);
  }
  return out;
}

std::string format_shortest(double value) {
  char buf[64];
  const std::to_chars_result res = std::to_chars(buf, buf + sizeof buf, value);
  return {buf, res.ptr};
}

}  // namespace platen
