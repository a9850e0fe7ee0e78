#pragma once

#include "tacsim/action.hpp"
#include "tacsim/candidates.hpp"
#include "tacsim/config.hpp"
#include "tacsim/engine.hpp"
#include "tacsim/error.hpp"
#include "tacsim/evaluation.hpp"
#include "tacsim/field_control.hpp"
#include "tacsim/formation.hpp"
#include "tacsim/geometry.hpp"
#include "tacsim/replay.hpp"
#include "tacsim/rng.hpp"
#include "tacsim/tactics.hpp"
#include "tacsim/textio.hpp"
#include "tacsim/tournament.hpp"
#include "tacsim/voronoi.hpp"
#include "tacsim/world.hpp"
