#pragma once

namespace glnwalk {

// Execution mode for the data-parallel kernels. Every parallel kernel has a
// serial twin that produces bit-identical results; tests compare the two.
enum class Exec { serial, parallel };

}  // namespace glnwalk
