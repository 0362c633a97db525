#pragma once

#include "cbl/agent.hpp"
#include "cbl/batch.hpp"
#include "cbl/dialog.hpp"
#include "cbl/discourse.hpp"
#include "cbl/formula.hpp"
#include "cbl/render.hpp"
#include "cbl/turing.hpp"
