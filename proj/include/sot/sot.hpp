#pragma once

// Everything: split octonions, Cl(4,4) matrices, spinors, rotors, triality.
// JSON support is separate (sot/json.hpp) since it pulls in nlohmann/json.

#include <sot/basis_generation.hpp>
#include <sot/clifford.hpp>
#include <sot/identities.hpp>
#include <sot/octonion.hpp>
#include <sot/report.hpp>
#include <sot/rotor.hpp>
#include <sot/scalar.hpp>
#include <sot/spinor.hpp>
#include <sot/triality.hpp>
