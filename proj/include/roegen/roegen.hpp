#pragma once

#include "roegen/contact_core.hpp"
#include "roegen/dictionary.hpp"
#include "roegen/equilibrium.hpp"
#include "roegen/error.hpp"
#include "roegen/group_laws.hpp"
#include "roegen/horizon_models.hpp"
#include "roegen/scenario.hpp"
#include "roegen/subriemannian.hpp"
