#pragma once

#include "linklab/diagrams.hpp"
#include "linklab/json_io.hpp"
#include "linklab/kirby.hpp"
#include "linklab/milnor.hpp"
#include "linklab/moves.hpp"
#include "linklab/satellites.hpp"
#include "linklab/scenarios.hpp"
#include "linklab/seifert.hpp"
#include "linklab/words.hpp"
