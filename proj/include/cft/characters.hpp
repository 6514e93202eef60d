/*
   Copyright 2026 The cft Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CFT_CHARACTERS_HPP
#define CFT_CHARACTERS_HPP

#include <vector>

namespace cft {

/// A finite abelian group given by its multiplication table on indices
/// 0..d-1, with index 0 the identity.
struct FiniteAbelianGroup {
    std::vector<std::vector<int>> table;

    int order() const { return static_cast<int>(table.size()); }
    int mul(int x, int y) const { return table[static_cast<size_t>(x)][static_cast<size_t>(y)]; }
    int inverse(int x) const;
    int element_order(int x) const;
};

/// Characters of G written as exponents: chi_i(g_k) = zeta_d^{values[i][k]}
/// with d = |G|.  chi_0 is trivial; the rest follow lexicographic order of
/// their values on a greedily chosen generating set.
struct CharacterTable {
    int order = 0;
    std::vector<int> generators;
    std::vector<std::vector<int>> values;
};

CharacterTable character_table(const FiniteAbelianGroup& g);

}  // namespace cft

#endif  // CFT_CHARACTERS_HPP
