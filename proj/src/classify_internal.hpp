#pragma once

#include "symdyn/classify.hpp"

namespace symdyn {

/// Membership-query classification; `parallel` spreads signatures over OpenMP threads.
Classification classify_literal(const ShiftSpace& space, std::size_t n, std::size_t k, Mode mode, bool parallel);

}  // namespace symdyn
