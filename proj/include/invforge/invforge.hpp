#pragma once

// Umbrella header: the whole library.

#include "invforge/cohomology.hpp"
#include "invforge/corpus.hpp"
#include "invforge/errors.hpp"
#include "invforge/field.hpp"
#include "invforge/geometry.hpp"
#include "invforge/group.hpp"
#include "invforge/invariants.hpp"
#include "invforge/io.hpp"
#include "invforge/matrix.hpp"
#include "invforge/normalizer.hpp"
#include "invforge/parallel.hpp"
#include "invforge/parse.hpp"
#include "invforge/polynomial.hpp"
