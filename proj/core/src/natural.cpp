#include "parityforge/natural.hpp"

namespace parityforge {

Natural integer_cbrt(const Natural& n) {
  if (n < 2) return n;
  // Newton iteration from a bit-length based overestimate.
  const unsigned bits = static_cast<unsigned>(msb(n)) + 1;
  Natural x = Natural(1) << (bits / 3 + 1);
  for (;;) {
    Natural y = (2 * x + n / (x * x)) / 3;
    if (y >= x) break;
    x = y;
  }
  while (x * x * x > n) --x;
  return x;
}

bool is_prime_trial_division(const Natural& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (is_even(n)) return false;
  for (Natural d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<Natural> parse_natural(std::string_view text) {
  if (text.empty()) return std::nullopt;
  for (char c : text) {
    if (c < '0' || c > '9') return std::nullopt;
  }
  return Natural(std::string(text));
}

}  // namespace parityforge
