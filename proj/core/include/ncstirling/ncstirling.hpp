// Umbrella header.

#ifndef NCSTIRLING_NCSTIRLING_HPP
#define NCSTIRLING_NCSTIRLING_HPP

#include "ncstirling/exact.hpp"
#include "ncstirling/identities.hpp"
#include "ncstirling/jet.hpp"
#include "ncstirling/noncentral.hpp"
#include "ncstirling/stirling.hpp"

#endif  // NCSTIRLING_NCSTIRLING_HPP
