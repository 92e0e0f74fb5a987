#pragma once

// Convenience header pulling in the whole library.

#include "toricob/cobordism.hpp"
#include "toricob/json_io.hpp"
#include "toricob/props.hpp"
#include "toricob/resolve.hpp"
#include "toricob/volume.hpp"
