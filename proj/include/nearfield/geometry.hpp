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

#ifndef NEARFIELD_GEOMETRY_HPP
#define NEARFIELD_GEOMETRY_HPP

#include <Eigen/Dense>

#include <complex>

namespace nearfield
{
    using complex = std::complex<double>;

    // Position or direction in meters.
    using Vec3 = Eigen::Vector3d;

    using Dyad = Eigen::Matrix3cd;
    using ComplexVector = Eigen::VectorXcd;

    inline constexpr complex imag_unit{0.0, 1.0};
}

#endif
