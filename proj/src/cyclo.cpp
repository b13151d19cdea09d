/*
   Copyright 2026 ffcircle developers

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

#include "cyclo.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace ffc {

double CycloValue::abs() const {
    long double re = 0.0L, im = 0.0L;
    for (std::uint32_t k = 0; k < p_; ++k) {
        if (c_[k] == 0) continue;
        const long double angle = 2.0L * std::numbers::pi_v<long double> * k / p_;
        re += static_cast<long double>(c_[k]) * std::cos(angle);
        im += static_cast<long double>(c_[k]) * std::sin(angle);
    }
    return static_cast<double>(std::sqrt(re * re + im * im));
}

std::string CycloValue::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::uint32_t k = 0; k < p_; ++k) {
        if (c_[k] == 0) continue;
        if (!first) os << (c_[k] > 0 ? "+" : "");
        os << c_[k];
        if (k > 0) os << "*z^" << k;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace ffc
