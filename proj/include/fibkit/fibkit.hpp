#pragma once

#include "catalog.hpp"
#include "combinators.hpp"
#include "errors.hpp"
#include "harness.hpp"
#include "identities.hpp"
#include "integer.hpp"
#include "oracle.hpp"
#include "outcome.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "sequences.hpp"
#include "source.hpp"
