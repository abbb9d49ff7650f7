#ifndef ALTEXT_OBSTRUCTION_HPP
#define ALTEXT_OBSTRUCTION_HPP

#include <stdexcept>
#include <string>

#include "altext/cochain.hpp"

namespace altext {

/// Raised by derivations gated on a vanishing obstruction; carries the full
/// obstruction cochain so callers can report where the structure fails.
class ObstructionError : public std::runtime_error {
public:
    ObstructionError(const std::string& what, Cochain obstruction)
        : std::runtime_error(what), obstruction_(std::move(obstruction)) {}

    const Cochain& obstruction() const { return obstruction_; }

private:
    Cochain obstruction_;
};

}  // namespace altext

#endif
