#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rswe/gf_field.hpp"

// Slow textbook routines used as ground truth by the tests. They depend on
// the field tables only, never on the transform-based decoder.
namespace rswe::oracle {

using gf::Element;
using gf::FieldTables;

// Value at x of the unique polynomial of degree < points.size() through the
// given points, by the quadratic Lagrange sum. Throws DuplicatePoint.
Element naive_interpolate_eval(std::span<const std::uint32_t> points, std::span<const Element> values,
                               std::uint32_t x, const FieldTables& t);

// Direct O(n^2) Walsh transform in exact integers. Throws LengthNotPowerOfTwo.
std::vector<std::int64_t> naive_walsh(std::span<const std::int64_t> v);

// Horner evaluation of sum_i coeffs[i] x^i at every point of the field.
std::vector<Element> naive_encode(std::span<const Element> coeffs, const FieldTables& t);

}  // namespace rswe::oracle
