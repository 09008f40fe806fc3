#ifndef QGAME_STATE_SPEC_HPP
#define QGAME_STATE_SPEC_HPP

#include <stdexcept>
#include <string>

#include "qgame/states.hpp"

namespace qgame {

/// Raised for malformed state specifications, angle tokens or custom state
/// files; the CLI maps it to exit code 2.
class SpecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses `werner:<eta>`, `d1:<x>`, `d2:<x>`, `product:<theta_A>,<theta_B>`
/// or `custom:<path>` (plain-text 4x4 matrix, 16 row-major `re+imj` entries).
StateFamily parse_state_spec(const std::string& spec);

/// Parses an angle in radians; accepts plain decimals plus the tokens `pi`
/// and simple fractions/multiples such as `pi/2`, `2pi`, `3pi/4`.
double parse_angle(const std::string& token);

/// Parses one `re+imj` complex literal (e.g. `0.5-0.25j`, `1`, `2j`).
cplx parse_complex(const std::string& token);

}  // namespace qgame

#endif
