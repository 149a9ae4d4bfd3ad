#pragma once

#include "bikoid/report.hpp"
#include "bikoid/perm.hpp"
#include "bikoid/group.hpp"
#include "bikoid/groupoid.hpp"
#include "bikoid/word.hpp"
#include "bikoid/birack.hpp"
#include "bikoid/bikoid.hpp"
#include "bikoid/crossed_module.hpp"
#include "bikoid/representation.hpp"
#include "bikoid/braid.hpp"
#include "bikoid/topology.hpp"
#include "bikoid/suites.hpp"
