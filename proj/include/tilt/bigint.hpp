// Copyright 2026 The tiltcheck Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tilt {

/// Arbitrary-precision integer used for every dimension and multiplicity.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient; zero when k < 0 or k > n (n >= 0).
BigInt binomial(long n, long k);

}  // namespace tilt
