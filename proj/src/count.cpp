#include "perm4/count.hpp"

#include <algorithm>

namespace perm4 {

std::string to_string(Count value) {
  if (value == 0) return "0";
  std::string digits;
  while (value != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::string to_string_signed(SignedCount value) {
  if (value < 0) return "-" + to_string(static_cast<Count>(-value));
  return to_string(static_cast<Count>(value));
}

Count binomial(std::uint64_t n, unsigned k) {
  if (n < k) return 0;
  Count result = 1;
  for (unsigned i = 0; i < k; ++i) {
    result = result * (n - i) / (i + 1);
  }
  return result;
}

}  // namespace perm4
