#pragma once

#include <cstdint>
#include <iosfwd>

namespace lprips {

// reduced-scale sweep over every verification family the library ships,
// one summary line per family; returns whether all of them held
bool selftest_run(std::ostream& out, uint64_t seed = 20260821, int threads = 1);

}  // namespace lprips
