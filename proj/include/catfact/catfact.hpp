// Convenience include for the whole library.

#pragma once

#include "catfact/interval.hpp"
#include "catfact/primes.hpp"
#include "catfact/layers.hpp"
#include "catfact/factorizer.hpp"
#include "catfact/oracle.hpp"
#include "catfact/format.hpp"
