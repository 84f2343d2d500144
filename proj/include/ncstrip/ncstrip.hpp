#pragma once

#include "ncstrip/bijections.hpp"
#include "ncstrip/counting.hpp"
#include "ncstrip/errors.hpp"
#include "ncstrip/lattice_path.hpp"
#include "ncstrip/noncrossing_a.hpp"
#include "ncstrip/noncrossing_b.hpp"
#include "ncstrip/parking.hpp"
#include "ncstrip/partition.hpp"
#include "ncstrip/shapes.hpp"
#include "ncstrip/symfunc.hpp"
#include "ncstrip/verify.hpp"
