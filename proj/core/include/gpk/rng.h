// Copyright 2026 The gpk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GPK_RNG_H
#define GPK_RNG_H

#include <cstdint>
#include <vector>

namespace gpk {

/// SplitMix64 (Steele, Lea & Flood). Every random choice in the library flows
/// through this generator so that seeds reproduce bit-identically on any
/// platform; std:: distributions are deliberately not used.
class SplitMix64 {
   public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {
    }

    uint64_t next();

    /// Uniform integer in [0, bound). bound must be nonzero.
    uint64_t below(uint64_t bound);

    /// Uniform value of the low `bits` bits.
    uint64_t bits(unsigned bits);

    /// Uniform double in [0, 1) with 53 bits of precision.
    double unit_double();

    /// Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T> &items) {
        for (size_t i = items.size(); i > 1; i--) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

   private:
    uint64_t state_;
};

/// Derives an independent child seed, e.g. one per GPK run of a solver.
uint64_t derive_seed(uint64_t seed, uint64_t stream);

}  // namespace gpk

#endif
