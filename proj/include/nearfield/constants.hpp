// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef NEARFIELD_CONSTANTS_HPP
#define NEARFIELD_CONSTANTS_HPP

#include <numbers>

namespace nearfield
{
    inline constexpr double pi = std::numbers::pi;
    inline constexpr double two_pi = 2.0 * std::numbers::pi;

    // Exact SI value [m/s]
    inline constexpr double speed_of_light = 299792458.0;

    // Characteristic impedance of free space [Ohm]
    inline constexpr double free_space_impedance = 376.730313668;
}

#endif
