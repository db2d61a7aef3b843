#pragma once

#include "wil/aco.hpp"
#include "wil/generate.hpp"
#include "wil/geometry.hpp"
#include "wil/io.hpp"
#include "wil/layout.hpp"
#include "wil/opt_circle.hpp"
#include "wil/opt_rect.hpp"
#include "wil/oracle.hpp"
#include "wil/protocol.hpp"
#include "wil/svg.hpp"
