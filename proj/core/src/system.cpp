#include "swipt/system.hpp"

#include <stdexcept>

namespace swipt {

void validate(const SystemParams& sys) {
    if (sys.users.empty())
        throw std::invalid_argument("system needs at least one user");
    if (!(sys.power > 0.0))
        throw std::invalid_argument("transmit power must be > 0");
    if (!(sys.noise > 0.0))
        throw std::invalid_argument("noise power must be > 0");
    if (!(sys.eta >= 0.0 && sys.eta <= 1.0))
        throw std::invalid_argument("harvester efficiency must lie in [0, 1]");
    for (const auto& u : sys.users)
        if (!(u.omega > 0.0))
            throw std::invalid_argument("user gain mean omega must be > 0");
}

} // namespace swipt
