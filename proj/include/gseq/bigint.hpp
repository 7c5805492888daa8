#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace gseq {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using HighFloat = boost::multiprecision::cpp_bin_float_50;

// Contiguous run of exact integers indexed from `start`.
struct IntSeqTable {
  std::size_t start = 0;
  std::vector<BigInt> values;

  std::size_t end() const { return start + values.size(); }
  bool contains(std::size_t n) const { return n >= start && n < end(); }

  const BigInt& at(std::size_t n) const {
    if (!contains(n)) {
      throw std::out_of_range("IntSeqTable: index " + std::to_string(n) + " outside [" +
                              std::to_string(start) + ", " + std::to_string(end()) + ")");
    }
    return values[n - start];
  }
};

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string to_string(const Rational& v) {
  return boost::multiprecision::numerator(v).str() + "/" +
         boost::multiprecision::denominator(v).str();
}

}  // namespace gseq
