#pragma once

#include "bidi/augment_arcs.hpp"
#include "bidi/augment_signs.hpp"
#include "bidi/augmentation.hpp"
#include "bidi/classify.hpp"
#include "bidi/condense.hpp"
#include "bidi/core.hpp"
#include "bidi/io.hpp"
#include "bidi/oracle.hpp"
#include "bidi/skew.hpp"
