#pragma once

#include "frieze/classical.hpp"
#include "frieze/determinant.hpp"
#include "frieze/error.hpp"
#include "frieze/field.hpp"
#include "frieze/frieze_matrix.hpp"
#include "frieze/infinite_frieze.hpp"
#include "frieze/io.hpp"
#include "frieze/matrix.hpp"
#include "frieze/report.hpp"
#include "frieze/seed_sequence.hpp"
#include "frieze/triangulation.hpp"
#include "frieze/zero_frieze.hpp"
