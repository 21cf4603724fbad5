#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cpw {

// Raised when an enumeration would exceed its face budget.  Carries the
// budget and the count reached so callers can report or retry with a
// larger limit instead of dying mid-enumeration.
class face_limit_error : public std::runtime_error {
public:
    face_limit_error(std::int64_t limit, std::int64_t reached)
        : std::runtime_error("face budget exceeded: reached " + std::to_string(reached) +
                             " faces, limit " + std::to_string(limit)),
          limit(limit), reached(reached) {}

    std::int64_t limit;
    std::int64_t reached;
};

// Internal signal: a fixed-width arithmetic path overflowed and the caller
// should redo the computation with unbounded integers.  Never escapes the
// numerics layer.
struct overflow_signal {};

} // namespace cpw
