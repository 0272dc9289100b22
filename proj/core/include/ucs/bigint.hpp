#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace ucs {

using BigInt = boost::multiprecision::cpp_int;

__extension__ using UInt128 = unsigned __int128;

/// Hot loops accumulate in 128 bits; reports carry arbitrary precision.
inline BigInt to_bigint(UInt128 v) {
  BigInt out = static_cast<std::uint64_t>(v >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(v);
  return out;
}

}  // namespace ucs
