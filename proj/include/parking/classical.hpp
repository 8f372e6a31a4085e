#pragma once

#include "parking/core.hpp"

namespace parking {

/// Runs the classical process: car i takes the first unoccupied spot at or
/// after p(i). Stops at the first car that finds none.
ParkOutcome classical_park(const ParkingPreference& p);

/// Parking-function test via the non-decreasing rearrangement: p is a
/// parking function iff sorted(p)[i] <= i for every i. Does not simulate.
bool is_parking_function(const ParkingPreference& p);

/// Sum of the displacement vector. Throws std::logic_error on a failure.
long long total_displacement(const ParkOutcome& outcome);

}  // namespace parking
