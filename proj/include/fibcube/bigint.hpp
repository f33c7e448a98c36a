// Copyright 2026 The fibcube Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fibcube {

// Every count and coefficient in this library is exact; no doubles, no
// fixed-width overflow. cpp_int is header-only and value-semantic.
using Int = boost::multiprecision::cpp_int;

inline Int int_pow(Int base, int exponent) {
    if (exponent < 0) throw std::domain_error("int_pow: negative exponent");
    Int result = 1;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

inline Int factorial(int n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    Int result = 1;
    for (int i = 2; i <= n; ++i) result *= i;
    return result;
}

}  // namespace fibcube
