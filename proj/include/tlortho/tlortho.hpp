/**
 * @file tlortho.hpp
 * @brief Umbrella header.
 */

#pragma once

#include "diagrams.hpp"
#include "field.hpp"
#include "laurent.hpp"
#include "matrix.hpp"
#include "maximal.hpp"
#include "qnumbers.hpp"
#include "scalar.hpp"
#include "schur.hpp"
#include "serialize.hpp"
#include "shapes.hpp"
#include "tensor.hpp"
#include "transitions.hpp"
