#pragma once

#include "fisherrao/curves.hpp"
#include "fisherrao/embed.hpp"
#include "fisherrao/error.hpp"
#include "fisherrao/gaussmodel.hpp"
#include "fisherrao/matcore.hpp"
#include "fisherrao/minimax.hpp"
#include "fisherrao/raodist.hpp"
#include "fisherrao/rng.hpp"
#include "fisherrao/spdgeom.hpp"
