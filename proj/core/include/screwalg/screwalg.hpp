#pragma once

#include "screwalg/classical_oracle.hpp"
#include "screwalg/dual.hpp"
#include "screwalg/dual_linalg.hpp"
#include "screwalg/error.hpp"
#include "screwalg/io.hpp"
#include "screwalg/screw_geometry.hpp"
#include "screwalg/theorems.hpp"
