#pragma once

namespace tcw {

// Selects the serial reference path or the OpenMP path for the kernels that
// have both. Results are identical; only the schedule differs.
enum class Exec { serial, parallel };

int hardware_threads();

}  // namespace tcw
