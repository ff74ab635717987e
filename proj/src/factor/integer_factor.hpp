#pragma once

#include <map>

#include "alexlink/laurent.hpp"

namespace alexlink::detail {

/// Prime factorization of |n|, n != 0.
std::map<Integer, int> factor_integer(const Integer& n);

}  // namespace alexlink::detail
