#pragma once

#include <cstdint>
#include <string>

namespace perm4 {

// Occurrence and cycle counts. Exact integers only.
using Count = unsigned __int128;
using SignedCount = __int128;

std::string to_string(Count value);
std::string to_string_signed(SignedCount value);

// C(n, k) for k <= 4; 0 when n < k.
Count binomial(std::uint64_t n, unsigned k);

}  // namespace perm4
