#pragma once

#include "padic.hpp"
#include "sequence.hpp"
#include "mahler.hpp"
#include "tate.hpp"
#include "models.hpp"
