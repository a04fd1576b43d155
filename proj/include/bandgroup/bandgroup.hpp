#pragma once

#include "braid.hpp"
#include "core.hpp"
#include "coxcomb.hpp"
#include "coxword.hpp"
#include "hurwitz.hpp"
#include "io.hpp"
#include "properties.hpp"
#include "raag.hpp"
#include "relations.hpp"
#include "report.hpp"
#include "syntax.hpp"
#include "verifier.hpp"
