#pragma once

#include "c5t/blocks.hpp"
#include "c5t/bounds.hpp"
#include "c5t/construct.hpp"
#include "c5t/detect.hpp"
#include "c5t/graph.hpp"
#include "c5t/io.hpp"
#include "c5t/reduce.hpp"
#include "c5t/search.hpp"

namespace c5t {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace c5t
