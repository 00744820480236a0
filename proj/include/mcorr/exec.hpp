#pragma once

namespace mcorr {

// Parallel kernels must reduce to results bit-identical to their serial
// reference; the serial path is kept both as that reference and for the
// benchmark comparison.
enum class Exec { serial, parallel };

}  // namespace mcorr
