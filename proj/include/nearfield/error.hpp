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

#ifndef NEARFIELD_ERROR_HPP
#define NEARFIELD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace nearfield
{
    // Numerical-domain failure: singular geometry, null channel, etc.
    class domain_error : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // Invalid configuration or argument combination.
    class config_error : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    namespace detail
    {
        inline void require_config(bool ok, const std::string &what)
        {
            if (!ok)
                throw config_error(what);
        }
    }
}

#endif
