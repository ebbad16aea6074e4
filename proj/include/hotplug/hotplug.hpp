#pragma once

#include "hotplug/analysis.hpp"
#include "hotplug/combin.hpp"
#include "hotplug/design.hpp"
#include "hotplug/gf.hpp"
#include "hotplug/hppda.hpp"
#include "hotplug/io.hpp"
#include "hotplug/pda.hpp"
#include "hotplug/rational.hpp"
#include "hotplug/rs.hpp"
#include "hotplug/scheme.hpp"
