#pragma once

#include "mctl/rings/cartan.hpp"
#include "mctl/rings/poly.hpp"
#include "mctl/rings/quantum.hpp"
#include "mctl/rings/ring_element.hpp"
