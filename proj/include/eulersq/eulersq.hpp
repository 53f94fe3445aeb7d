#pragma once

#include "eulersq/construct.hpp"
#include "eulersq/directrix.hpp"
#include "eulersq/io.hpp"
#include "eulersq/letters.hpp"
#include "eulersq/search.hpp"
#include "eulersq/square.hpp"
#include "eulersq/verify.hpp"
